#pragma once

#include <cstdint>
#include <vector>

namespace melab::support {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

u64 powmod(u64 base, u64 exp, u64 mod);
u64 invmod(u64 a, u64 mod);

bool is_prime_u64(u64 n);

// Pollard-rho factorization, good enough for 64-bit cofactors of p-1.
std::vector<u64> factorize(u64 n);

// Montgomery arithmetic for a fixed odd modulus < 2^62.
struct Montgomery {
    u64 p = 0;
    u64 pinv = 0;  // -p^{-1} mod 2^64
    u64 r2 = 0;    // 2^128 mod p

    Montgomery() = default;
    explicit Montgomery(u64 mod);

    u64 reduce(u128 x) const {
        u64 q = (u64)x * pinv;
        u64 r = (u64)(((u128)q * p + x) >> 64);
        return r >= p ? r - p : r;
    }
    u64 mul(u64 a, u64 b) const { return reduce((u128)a * b); }
    u64 to_mont(u64 a) const { return mul(a, r2); }
    u64 from_mont(u64 a) const { return reduce((u128)a); }
    u64 pow(u64 a_mont, u64 e) const;
};

// NTT-friendly primes: p = c * 2^22 + 1, p < 2^62, largest first.
struct NttPrime {
    u64 p;
    u64 root;  // primitive root of (Z/p)^*
};

const std::vector<NttPrime>& ntt_primes(std::size_t count);

}  // namespace melab::support
