#pragma once

#include <cstdint>

#include "chilab/bigfloat.hpp"

namespace chilab {

struct BoundedReal {
    Real value;
    Real error_bound;  ///< |true - value| <= error_bound
};

/// ln Gamma(z) for z > 0 by the Stirling series after shifting z up to >= 40.
/// The truncation term is bounded by the first omitted Bernoulli term.
BoundedReal log_gamma(const Real& z);

/// Exact C(n, k) (0 when k > n).
BigInt binomial(const BigInt& n, std::uint64_t k);

/// log2 C(n, k) from the exact integer binomial.
Real log2_binomial_exact(const BigInt& n, const BigInt& k);

/// log2 C(n, k) from three Stirling log-gamma evaluations.
BoundedReal log2_binomial_stirling(const BigInt& n, const BigInt& k);

/// ln k! in double precision; reentrant (does not touch signgam).
double log_factorial(std::uint64_t k);

}  // namespace chilab
