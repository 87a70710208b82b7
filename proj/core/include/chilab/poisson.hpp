#pragma once

// Log-domain Poisson kernel: pmf, certified set masses, total variation
// distances and the finite-lambda shifted-set check.

#include <cstdint>
#include <string>
#include <vector>

#include "chilab/integer_set.hpp"

namespace chilab::poisson {

class PoissonSpec {
  public:
    explicit PoissonSpec(double lambda);
    double lambda() const noexcept { return lambda_; }

  private:
    double lambda_;
};

/// Value with a certified absolute error: the truth lies in
/// [value - error, value + error].
struct Certified {
    double value = 0;
    double error = 0;
    double low() const noexcept { return value - error; }
    double high() const noexcept { return value + error; }
};

double log_pmf(const PoissonSpec& spec, std::uint64_t k);
double pmf(const PoissonSpec& spec, std::uint64_t k);

/// Last index of the summation window: ceil(lambda + 40 sqrt(lambda)) + 40.
std::uint64_t window_end(const PoissonSpec& spec);

/// Upper bound on P(Z > k); requires k + 2 > lambda.
double upper_tail_bound(const PoissonSpec& spec, std::uint64_t k);

/// Poi_lambda(set), truncated to the window with the tail folded into the error.
Certified mass(const PoissonSpec& spec, const IntegerSet& set);

/// Half-L1 distance between Poi(l1) and Poi(l2).
Certified tv_poisson(double l1, double l2);

/// histogram[k] = number of observations equal to k.
using Histogram = std::vector<std::uint64_t>;

/// Distance between the empirical law of `counts` and Poi_lambda.
Certified tv_empirical(const Histogram& counts, const PoissonSpec& spec);

/// Inversion sampling: smallest k with P(Z <= k) >= u, u in [0, 1).
std::uint64_t sample_inversion(const PoissonSpec& spec, double u);

enum class ShiftStatus { ok, hypothesis_violated };

inline constexpr double kCertifiedSlack = 1e-10;

struct ShiftedMassCheck {
    double lambda = 0;
    std::int64_t r = 0;  ///< floor(sqrt(lambda))
    double epsilon = 0;
    double delta = 0;    ///< largest dyadic with log(eps/(2 delta)) > sqrt(3/eps) + 1
    double t = 0;        ///< midpoint of (t_lower, t_upper)
    double t_lower = 0;  ///< sqrt(3/eps) + 1
    double t_upper = 0;  ///< log(eps/(2 delta))
    std::string set;     ///< B as text

    Certified mass_B;
    Certified mass_B_shifted;
    Certified mass_B1_shifted;  ///< B1 = B \ I_t
    Certified mass_B2_shifted;  ///< B2 = B cap I_t
    Certified mass_B2;
    Certified mass_outside_I_t_minus_1;
    double chebyshev_bound = 0;  ///< lambda / ((t-1)^2 r^2)

    double max_log_ratio = 0;  ///< max over k in B2 of log(Poi{k-r} / Poi{k})
    std::uint64_t ratio_points = 0;

    bool ratio_bound_ok = false;  ///< every pointwise ratio <= e^t
    bool chebyshev_ok = false;
    bool b2_bound_ok = false;     ///< mass_B2_shifted <= eps/(2 delta) mass_B2
    bool union_bound_ok = false;  ///< mass_B_shifted <= mass_B1_shifted + mass_B2_shifted
    bool conclusion_ok = false;   ///< mass_B_shifted < eps
    ShiftStatus status = ShiftStatus::ok;

    /// Smallest certified margin over the strict inequalities
    /// (hypothesis, ratio, Chebyshev, B2 bound, conclusion).
    double min_slack = 0;
};

ShiftedMassCheck shifted_mass_check(double lambda, const IntegerSet& B, double epsilon);

}  // namespace chilab::poisson
