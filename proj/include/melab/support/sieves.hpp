#pragma once

#include <cstdint>
#include <vector>

namespace melab::support {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// smallest prime factor table, spf[0] = spf[1] = 0
std::vector<std::uint32_t> smallest_prime_factor(std::uint32_t n);

// d(n) and d_3(n) for n <= N (index 0 unused)
std::vector<double> divisor_count(std::uint32_t n);
std::vector<double> divisor3_count(std::uint32_t n);

}  // namespace melab::support
