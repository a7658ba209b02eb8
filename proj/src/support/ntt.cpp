#include "melab/support/ntt.hpp"

#include <bit>

#include "melab/support/errors.hpp"

namespace melab::support {

Ntt::Ntt(NttPrime prime) : mont_(prime.p), generator_(prime.root) {
    fwd_roots_.resize(23);
    inv_roots_.resize(23);
}

const std::vector<u64>& Ntt::roots(std::size_t log2n, bool inv) const {
    auto& slot = (inv ? inv_roots_ : fwd_roots_)[log2n];
    if (!slot.empty()) return slot;
    const u64 p = mont_.p;
    std::size_t n = std::size_t(1) << log2n;
    // concatenated per-stage twiddles: stage s (len = 2^s) occupies [2^{s-1}-1, 2^s-1)
    slot.resize(n - 1);
    for (std::size_t s = 1; s <= log2n; ++s) {
        std::size_t len = std::size_t(1) << s;
        u64 wlen = powmod(generator_, (p - 1) / len, p);
        if (inv) wlen = invmod(wlen, p);
        u64 w = mont_.to_mont(1);
        u64 wl = mont_.to_mont(wlen);
        u64* dst = slot.data() + (len / 2 - 1);
        for (std::size_t j = 0; j < len / 2; ++j) {
            dst[j] = w;
            w = mont_.mul(w, wl);
        }
    }
    return slot;
}

void Ntt::transform(std::vector<u64>& a, bool inv) const {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw NumericalFailureError("NTT length must be a power of two");
    const std::size_t log2n = std::countr_zero(n);
    if (log2n > 22) throw NumericalFailureError("NTT length exceeds 2^22 support");
    const u64 p = mont_.p;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const std::vector<u64>& tw = roots(log2n, inv);
    for (std::size_t s = 1; s <= log2n; ++s) {
        const std::size_t len = std::size_t(1) << s;
        const std::size_t half = len / 2;
        const u64* w = tw.data() + (half - 1);
        for (std::size_t i = 0; i < n; i += len) {
            u64* lo = a.data() + i;
            u64* hi = lo + half;
            for (std::size_t j = 0; j < half; ++j) {
                u64 u = lo[j];
                u64 v = mont_.mul(hi[j], w[j]);
                u64 s1 = u + v;
                if (s1 >= p) s1 -= p;
                lo[j] = s1;
                hi[j] = u >= v ? u - v : u + p - v;
            }
        }
    }
    if (inv) {
        u64 ninv = mont_.to_mont(invmod(n % p, p));
        for (auto& x : a) x = mont_.mul(x, ninv);
    }
}

void Ntt::forward(std::vector<u64>& a) const {
    for (auto& x : a) x = mont_.to_mont(x);
    transform(a, false);
}

void Ntt::inverse(std::vector<u64>& a) const {
    transform(a, true);
    for (auto& x : a) x = mont_.from_mont(x);
}

std::vector<u64> Ntt::multiply(const std::vector<u64>& a, const std::vector<u64>& b,
                               std::size_t out_len) const {
    if (a.empty() || b.empty() || out_len == 0) return std::vector<u64>(out_len, 0);
    std::size_t need = std::min(out_len, a.size() + b.size() - 1);
    std::size_t n = 1;
    while (n < need + 1) n <<= 1;
    // truncated operands: coefficients beyond out_len can never influence the result
    std::vector<u64> fa(a.begin(), a.begin() + std::min(a.size(), out_len));
    std::vector<u64> fb(b.begin(), b.begin() + std::min(b.size(), out_len));
    fa.resize(n, 0);
    fb.resize(n, 0);
    forward(fa);
    forward(fb);
    for (std::size_t i = 0; i < n; ++i) fa[i] = mont_.mul(fa[i], fb[i]);
    inverse(fa);
    fa.resize(out_len);
    return fa;
}

std::vector<u64> polymul_naive_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                                   std::size_t out_len, u64 p) {
    std::vector<u64> c(out_len, 0);
    for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < out_len; ++j) {
            c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
        }
    }
    return c;
}

}  // namespace melab::support
