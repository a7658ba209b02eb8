#include "melab/support/crt.hpp"

#include "melab/support/errors.hpp"

namespace melab::support {

CrtBasis::CrtBasis(std::vector<u64> primes) : primes_(std::move(primes)) {
    prefix_.resize(primes_.size());
    prefix_inv_.resize(primes_.size());
    mpz_class acc = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        prefix_[i] = acc;
        prefix_inv_[i] = invmod(residue(acc, primes_[i]), primes_[i]);
        acc *= mpz_class(static_cast<unsigned long>(primes_[i]));
    }
    modulus_ = acc;
}

u64 CrtBasis::residue(const mpz_class& x, u64 p) {
    mpz_class r = x % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += mpz_class(static_cast<unsigned long>(p));
    return r.get_ui();
}

mpz_class CrtBasis::reconstruct(const std::vector<u64>& residues) const {
    if (residues.size() != primes_.size()) throw NumericalFailureError("CRT residue count mismatch");
    mpz_class x = 0;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        u64 p = primes_[i];
        u64 xi = residue(x, p);
        u64 t = mulmod(submod(residues[i] % p, xi, p), prefix_inv_[i], p);
        x += prefix_[i] * mpz_class(static_cast<unsigned long>(t));
    }
    // balanced representative
    if (x * 2 > modulus_) x -= modulus_;
    return x;
}

}  // namespace melab::support
