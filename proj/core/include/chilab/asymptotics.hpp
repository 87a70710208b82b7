#pragma once

// Closed-form quantities attached to G(n, 1/2): the independence threshold
// alpha0(n), the expected number of independent a-sets, the exponent x(n),
// the coupling step r(n), the colouring estimate f(n) and the bookkeeping
// that chains the coupling step along a sequence n_1 < n_2 < ...
//
// Everything is evaluated with 128-bit software floats and exact integers;
// all functions are pure.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "chilab/bigfloat.hpp"

namespace chilab::asymptotics {

/// alpha0(n) = 2 log2 n - 2 log2 log2 n + 2 log2(e/2) + 1, n >= 4.
Real alpha0(const BigInt& n);

/// log2( C(n,k) 2^-C(k,2) ), the expected number of independent k-sets in bits.
Real log2_expected_ksets(const BigInt& n, const BigInt& k);

struct AsymptoticProfile {
    BigInt n;
    Real alpha0;
    std::int64_t a = 0;  ///< floor(alpha0)
    Real log2_mu;        ///< log2 of mu = C(n,a) 2^-C(a,2)
    Real x;              ///< log2_mu / log2 n
    BigInt r;            ///< floor(sqrt(mu)), exact
    BigInt n_prime;      ///< n + r a
    Real discrepancy;    ///< |x - (alpha0 - a)|

    /// alpha0 within 2^-60 of an integer: floor is not trustworthy and
    /// a_alternate holds the other candidate.
    bool a_ambiguous = false;
    std::int64_t a_alternate = 0;

    /// x outside the sanity envelope (-1, 2); expected only for tiny n.
    bool outside_envelope = false;
};

AsymptoticProfile profile(const BigInt& n);

/// Fast double-precision x(n); used for scanning, never for reported values.
double approx_x(std::uint64_t n);

struct BandSearchOptions {
    std::uint64_t max_candidates = 100'000'000;
};

/// Smallest n >= N with x(n) in the open band (c1, c2).
/// Throws BudgetExhausted when more than max_candidates values are examined.
BigInt find_n_in_band(double c1, double c2, const BigInt& N, BandSearchOptions options = {});

/// f(n) = n / (alpha0(n) - 1 - 2/ln 2), n >= 16.
Real chromatic_estimate(const BigInt& n);

/// The same quantity as n / (2 log2 n - 2 log2 log2 n - 2).
Real chromatic_estimate_direct(const BigInt& n);

struct FGap {
    BigInt n;
    BigInt n_prime;
    std::int64_t a = 0;
    BigInt r;
    Real x;
    Real gap;             ///< f(n') - f(n)
    Real predicted;       ///< r + (1 - x) r / a
    Real relative_error;  ///< |gap - predicted| a / r
};

FGap f_gap(const BigInt& n);

struct YBoundReport {
    BigInt n;
    BigInt A;
    BigInt r;
    std::int64_t a = 0;
    Real mu;
    std::map<std::int64_t, Real> log2_sigma;  ///< t -> log2 sigma_t, t in [1, a-1]
    std::int64_t argmax_t = 0;
    Real sigma_max;
    bool endpoint_max_holds = false;  ///< sigma_max == max(sigma_1, sigma_{a-1})
    Real a_sigma_max;                 ///< a * sigma_max, the geometric ratio
    bool divergent = false;
    std::optional<Real> bound;  ///< empty when divergent
};

YBoundReport y_bound(const BigInt& n, const BigInt& A);

/// Which constraint determined the ledger's right end M.
enum class LedgerBoundary { alpha0_threshold, exponent_threshold };

struct LedgerStep {
    BigInt n;
    Real x;
    BigInt r;
    std::int64_t a = 0;
    bool hypothesis_ok = false;  ///< a(n)=a(n1) and eps < x < 1/2 - eps
};

struct LedgerReport {
    double c = 0;
    double epsilon = 0;
    BigInt n1;
    Real x1;
    std::int64_t a = 0;
    BigInt M_alpha0;    ///< largest n with alpha0(n) < a + 1/2 - 2 eps
    BigInt M_exponent;  ///< largest n with x(n) < 1/2 - 2 eps (same a)
    BigInt M;           ///< min of the two
    LedgerBoundary boundary = LedgerBoundary::alpha0_threshold;

    std::vector<LedgerStep> steps;  ///< n_1 .. n_{i_max} when complete
    bool complete = false;

    /// i_max when complete, otherwise an interval from the r endpoints.
    std::uint64_t i_max_low = 0;
    std::uint64_t i_max_high = 0;

    BigInt telescoped_sum;  ///< sum_{i < i_max} r_i a
    BigInt telescoped_span; ///< n_{i_max} - n_1
    Real sum_r_over_3a;     ///< sum_{i < i_max} r_i / (3a), lower end if incomplete
    Real sum_r_over_3a_high;

    std::optional<BigInt> crossover_n;  ///< smallest n with r(n)/(3a(n)) >= n^c
};

LedgerReport ledger(double c, const BigInt& n1_hint, std::uint64_t enumerate_cap);

}  // namespace chilab::asymptotics
