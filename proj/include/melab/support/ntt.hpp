#pragma once

#include <cstddef>
#include <vector>

#include "melab/support/modarith.hpp"

namespace melab::support {

// Power-of-two NTT over one prime from ntt_primes().  Values are plain
// residues (not Montgomery form) at the interface; internals use Montgomery.
class Ntt {
public:
    explicit Ntt(NttPrime prime);

    u64 prime() const { return mont_.p; }

    // In-place transform, n = a.size() must be a power of two <= 2^22.
    void forward(std::vector<u64>& a) const;
    void inverse(std::vector<u64>& a) const;

    // c = a * b truncated to out_len coefficients (mod p).
    std::vector<u64> multiply(const std::vector<u64>& a, const std::vector<u64>& b,
                              std::size_t out_len) const;

private:
    void transform(std::vector<u64>& a, bool inv) const;
    const std::vector<u64>& roots(std::size_t log2n, bool inv) const;

    Montgomery mont_;
    u64 generator_;
    // lazily built twiddle tables per log2n
    mutable std::vector<std::vector<u64>> fwd_roots_, inv_roots_;
};

// Naive O(n^2) reference used by tests.
std::vector<u64> polymul_naive_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                                   std::size_t out_len, u64 p);

}  // namespace melab::support
