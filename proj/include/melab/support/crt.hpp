#pragma once

#include <gmpxx.h>

#include <vector>

#include "melab/support/modarith.hpp"

namespace melab::support {

// Incremental Garner reconstruction producing balanced representatives in
// (-P/2, P/2] for P = prod(primes).
class CrtBasis {
public:
    explicit CrtBasis(std::vector<u64> primes);

    std::size_t size() const { return primes_.size(); }
    const std::vector<u64>& primes() const { return primes_; }
    const mpz_class& modulus() const { return modulus_; }

    // residues[i] is the value mod primes_[i]
    mpz_class reconstruct(const std::vector<u64>& residues) const;

    // residue of an arbitrary integer (used for held-out verification)
    static u64 residue(const mpz_class& x, u64 p);

private:
    std::vector<u64> primes_;
    std::vector<mpz_class> prefix_;      // prefix_[i] = p_0 * ... * p_{i-1}
    std::vector<u64> prefix_inv_;        // prefix_[i]^{-1} mod p_i
    mpz_class modulus_;
};

}  // namespace melab::support
