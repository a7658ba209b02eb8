#include "melab/support/threadpool.hpp"

#include <exception>
#include <mutex>

namespace melab::support {

namespace {
std::atomic<unsigned> g_jobs{0};
}

unsigned default_jobs() {
    unsigned j = g_jobs.load();
    if (j == 0) {
        j = std::thread::hardware_concurrency();
        if (j == 0) j = 1;
    }
    return j;
}

void set_default_jobs(unsigned jobs) { g_jobs.store(jobs); }

void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body,
                  unsigned jobs) {
    if (end <= begin) return;
    if (jobs == 0) jobs = default_jobs();
    std::size_t count = end - begin;
    if (jobs <= 1 || count == 1) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::atomic<std::size_t> next{begin};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= end) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(jobs - 1);
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& th : threads) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace melab::support
