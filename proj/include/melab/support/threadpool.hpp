#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace melab::support {

// Index-sharded parallel for.  Results must be written to pre-sized slots so
// output order (and therefore every downstream reduction) is deterministic.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body,
                  unsigned jobs = 0);

unsigned default_jobs();
void set_default_jobs(unsigned jobs);

}  // namespace melab::support
