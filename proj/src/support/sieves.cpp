#include "melab/support/sieves.hpp"

namespace melab::support {

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!comp[i]) {
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j <= n; j += i) comp[j] = true;
        }
    }
    return out;
}

std::vector<std::uint32_t> smallest_prime_factor(std::uint32_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            for (std::uint64_t j = i; j <= n; j += i) {
                if (spf[j] == 0) spf[j] = i;
            }
        }
    }
    return spf;
}

namespace {

// multiplicative sieve driven by the SPF table
template <typename F>
std::vector<double> mult_sieve(std::uint32_t n, F prime_power_value) {
    auto spf = smallest_prime_factor(n);
    std::vector<double> f(n + 1, 1.0);
    if (n >= 1) f[1] = 1.0;
    for (std::uint32_t m = 2; m <= n; ++m) {
        std::uint32_t p = spf[m];
        std::uint32_t q = m, e = 0;
        while (q % p == 0) q /= p, ++e;
        f[m] = f[q] * prime_power_value(e);
    }
    return f;
}

}  // namespace

std::vector<double> divisor_count(std::uint32_t n) {
    return mult_sieve(n, [](std::uint32_t e) { return double(e + 1); });
}

std::vector<double> divisor3_count(std::uint32_t n) {
    // d_3(p^e) = (e+1)(e+2)/2
    return mult_sieve(n, [](std::uint32_t e) { return double(e + 1) * double(e + 2) / 2.0; });
}

}  // namespace melab::support
