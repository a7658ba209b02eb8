#include "melab/support/modarith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "melab/support/errors.hpp"

namespace melab::support {

u64 powmod(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 mod) {
    // mod assumed prime here
    return powmod(a % mod, mod - 2, mod);
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic Miller-Rabin bases for n < 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return addmod(mulmod(x, x, n), c, n); };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<u64> factorize(u64 n) {
    std::vector<u64> out;
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Montgomery::Montgomery(u64 mod) : p(mod) {
    u64 inv = mod;  // Newton: inv *= 2 - mod*inv, converges mod 2^64
    for (int i = 0; i < 5; ++i) inv *= 2 - mod * inv;
    pinv = ~inv + 1;  // -mod^{-1} mod 2^64
    u128 r = (u128)1 << 64;
    r %= mod;
    r2 = (u64)((u128)(u64)r * (u64)r % mod);
}

u64 Montgomery::pow(u64 a_mont, u64 e) const {
    u64 r = to_mont(1);
    while (e) {
        if (e & 1) r = mul(r, a_mont);
        a_mont = mul(a_mont, a_mont);
        e >>= 1;
    }
    return r;
}

namespace {

u64 find_primitive_root(u64 p) {
    std::vector<u64> fac = factorize(p - 1);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : fac) {
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
}

std::vector<NttPrime> g_primes;
std::mutex g_primes_mutex;

}  // namespace

const std::vector<NttPrime>& ntt_primes(std::size_t count) {
    std::lock_guard<std::mutex> lock(g_primes_mutex);
    if (g_primes.size() >= count) return g_primes;
    constexpr u64 kStride = 1ull << 22;
    u64 c = g_primes.empty() ? ((1ull << 62) / kStride) : ((g_primes.back().p - 1) / kStride);
    while (g_primes.size() < count) {
        --c;
        if (c == 0) throw NumericalFailureError("exhausted NTT prime search space");
        u64 p = c * kStride + 1;
        if (!is_prime_u64(p)) continue;
        g_primes.push_back({p, find_primitive_root(p)});
    }
    return g_primes;
}

}  // namespace melab::support
