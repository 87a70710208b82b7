#pragma once

// Seeded Monte Carlo studies. Sample i always draws its graph from Philox
// stream i under the master seed, so results do not depend on thread count.

#include <cstdint>
#include <optional>
#include <vector>

#include "chilab/bigfloat.hpp"
#include "chilab/poisson.hpp"

namespace chilab::lab {

/// Fixed conversion from a millisecond budget to a search-node budget; keeps
/// budget exhaustion reproducible across machines.
inline constexpr std::uint64_t kNodesPerMs = 500;

struct XkOptions {
    std::size_t threads = 1;
    std::size_t blocks = 5;
    /// Abort when the single-sample probe extrapolates beyond this.
    double max_estimated_seconds = 3600;
};

struct XkReport {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    Real log2_mu;
    double mu = 0;
    poisson::Histogram histogram;
    poisson::Certified tv;
    std::vector<poisson::Certified> block_tv;  ///< TV within each contiguous block of samples
    double mean = 0;
    double variance = 0;
};

XkReport xk_distribution_experiment(std::uint64_t n, std::uint64_t k, std::uint64_t samples, std::uint64_t seed,
                                    const XkOptions& options = {});

struct ChiIntervalOptions {
    std::size_t threads = 1;
    std::uint64_t budget_ms = 10'000;
    double tolerance = 0.15;
    double unreliable_fraction = 0.2;
};

struct ChiSample {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool complete = false;
    std::size_t alpha = 0;
    std::uint64_t nodes = 0;
};

struct ChiIntervalReport {
    std::uint64_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t node_budget = 0;
    std::vector<ChiSample> per_sample;
    std::uint64_t incomplete = 0;
    bool unreliable = false;

    // Statistics over completed solves only.
    std::size_t min = 0;
    std::size_t max = 0;
    double mean = 0;
    std::vector<std::pair<double, std::size_t>> quantiles;  ///< (p, value), inverse ECDF
    std::size_t interval90_lo = 0;
    std::size_t interval90_hi = 0;
    double interval90_mass = 0;

    std::optional<Real> f_n;
    std::optional<double> relative_deviation;  ///< (mean - f(n)) / f(n)
    double tolerance = 0;
    bool within_tolerance = false;
    bool envelope_ok = false;  ///< ceil(n / alpha) <= chi <= n for every sample
};

ChiIntervalReport chi_interval_experiment(std::uint64_t n, std::uint64_t samples, std::uint64_t seed,
                                          const ChiIntervalOptions& options = {});

}  // namespace chilab::lab
