#include "chilab/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chilab/errors.hpp"
#include "chilab/log_gamma.hpp"

namespace chilab::poisson {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Relative error allowance for exp(log_pmf(k)).
double pmf_relative_error(const PoissonSpec& spec, std::uint64_t k) {
    const double kd = static_cast<double>(k);
    const double magnitude =
        std::abs(kd * std::log(spec.lambda())) + spec.lambda() + log_factorial(k);
    return 8 * kEps * (magnitude + 1);
}

std::int64_t isqrt_floor(double v) {
    auto r = static_cast<std::int64_t>(std::sqrt(v));
    while (static_cast<double>(r) * static_cast<double>(r) > v) --r;
    while (static_cast<double>(r + 1) * static_cast<double>(r + 1) <= v) ++r;
    return r;
}

}  // namespace

PoissonSpec::PoissonSpec(double lambda) : lambda_(lambda) {
    if (!(lambda > 0) || !std::isfinite(lambda)) throw DomainError("Poisson mean must be positive and finite");
}

double log_pmf(const PoissonSpec& spec, std::uint64_t k) {
    const double kd = static_cast<double>(k);
    return kd * std::log(spec.lambda()) - spec.lambda() - log_factorial(k);
}

double pmf(const PoissonSpec& spec, std::uint64_t k) { return std::exp(log_pmf(spec, k)); }

std::uint64_t window_end(const PoissonSpec& spec) {
    const double l = spec.lambda();
    return static_cast<std::uint64_t>(std::ceil(l + 40 * std::sqrt(l))) + 40;
}

double upper_tail_bound(const PoissonSpec& spec, std::uint64_t k) {
    const double denom = static_cast<double>(k) + 2;
    if (!(denom > spec.lambda())) throw DomainError("tail bound needs k + 2 > lambda");
    // P(Z > k) = sum_{j>k} p_j and p_{j+1}/p_j = lambda/(j+1) <= lambda/(k+2).
    const double head = pmf(spec, k + 1) * (1 + pmf_relative_error(spec, k + 1));
    return head / (1 - spec.lambda() / denom);
}

Certified mass(const PoissonSpec& spec, const IntegerSet& set) {
    const auto end = window_end(spec);
    const auto window = set.intersect(IntegerSet::interval(0, static_cast<std::int64_t>(end)));
    Certified out;
    std::uint64_t terms = 0;
    for (const auto& iv : window.intervals()) {
        for (auto k = static_cast<std::uint64_t>(iv.lo); k <= static_cast<std::uint64_t>(iv.hi); ++k) {
            const double p = pmf(spec, k);
            out.value += p;
            out.error += p * pmf_relative_error(spec, k);
            ++terms;
        }
    }
    out.error += out.value * kEps * static_cast<double>(terms + 1);
    if (!set.intersect(IntegerSet::at_least(static_cast<std::int64_t>(end) + 1)).empty())
        out.error += upper_tail_bound(spec, end);
    return out;
}

Certified tv_poisson(double l1, double l2) {
    const PoissonSpec a(l1);
    const PoissonSpec b(l2);
    const auto end = std::max(window_end(a), window_end(b));
    Certified out;
    for (std::uint64_t k = 0; k <= end; ++k) {
        const double pa = pmf(a, k);
        const double pb = pmf(b, k);
        out.value += std::abs(pa - pb);
        out.error += pa * pmf_relative_error(a, k) + pb * pmf_relative_error(b, k);
    }
    out.value /= 2;
    out.error = out.error / 2 + out.value * kEps * static_cast<double>(end + 1) +
                (upper_tail_bound(a, end) + upper_tail_bound(b, end)) / 2;
    return out;
}

Certified tv_empirical(const Histogram& counts, const PoissonSpec& spec) {
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    if (total == 0) throw DomainError("tv_empirical needs at least one observation");
    const std::uint64_t end = std::max<std::uint64_t>(window_end(spec), counts.size());
    Certified out;
    const double n = static_cast<double>(total);
    for (std::uint64_t k = 0; k <= end; ++k) {
        const double empirical = k < counts.size() ? static_cast<double>(counts[k]) / n : 0.0;
        const double p = pmf(spec, k);
        out.value += std::abs(empirical - p);
        out.error += p * pmf_relative_error(spec, k);
    }
    out.value /= 2;
    out.error = out.error / 2 + out.value * kEps * static_cast<double>(end + 1) +
                upper_tail_bound(spec, end) / 2;
    return out;
}

std::uint64_t sample_inversion(const PoissonSpec& spec, double u) {
    if (!(u >= 0 && u < 1)) throw DomainError("inversion needs u in [0, 1)");
    const auto end = window_end(spec);
    double cdf = 0;
    for (std::uint64_t k = 0; k <= end; ++k) {
        cdf += pmf(spec, k);
        if (u < cdf) return k;
    }
    return end;
}

ShiftedMassCheck shifted_mass_check(double lambda, const IntegerSet& B, double epsilon) {
    if (!(lambda >= 4) || !std::isfinite(lambda)) throw DomainError("shifted_mass_check requires lambda >= 4");
    if (!(epsilon > 0 && epsilon < 1)) throw DomainError("shifted_mass_check requires epsilon in (0, 1)");
    const PoissonSpec spec(lambda);

    ShiftedMassCheck out;
    out.lambda = lambda;
    out.epsilon = epsilon;
    out.set = B.str();
    out.r = isqrt_floor(lambda);
    out.t_lower = std::sqrt(3 / epsilon) + 1;
    int j = 1;
    while (!(std::log(std::ldexp(epsilon, j - 1)) > out.t_lower)) ++j;
    out.delta = std::ldexp(1.0, -j);
    out.t_upper = std::log(epsilon / (2 * out.delta));
    out.t = (out.t_lower + out.t_upper) / 2;

    const double r = static_cast<double>(out.r);
    const auto I_t = IntegerSet::interval(static_cast<std::int64_t>(std::ceil(lambda - out.t * r)),
                                          static_cast<std::int64_t>(std::floor(lambda + out.t * r)));
    const auto I_t1 = IntegerSet::interval(static_cast<std::int64_t>(std::ceil(lambda - (out.t - 1) * r)),
                                           static_cast<std::int64_t>(std::floor(lambda + (out.t - 1) * r)));
    const auto B1 = B.subtract(I_t);
    const auto B2 = B.intersect(I_t);

    out.mass_B = mass(spec, B);
    out.mass_B_shifted = mass(spec, B.shifted(-out.r));
    out.mass_B1_shifted = mass(spec, B1.shifted(-out.r));
    out.mass_B2_shifted = mass(spec, B2.shifted(-out.r));
    out.mass_B2 = mass(spec, B2);
    out.mass_outside_I_t_minus_1 = mass(spec, I_t1.complement());
    out.chebyshev_bound = lambda / ((out.t - 1) * (out.t - 1) * r * r);

    // Poi{k-r}/Poi{k} = k! / (lambda^r (k-r)!), for k in B2 with k - r >= 0.
    const auto ratio_domain = B2.intersect(IntegerSet::at_least(out.r));
    double max_log_ratio = -std::numeric_limits<double>::infinity();
    double ratio_error = 0;
    for (const auto& iv : ratio_domain.intervals()) {
        for (auto k = static_cast<std::uint64_t>(iv.lo); k <= static_cast<std::uint64_t>(iv.hi); ++k) {
            const auto shifted = k - static_cast<std::uint64_t>(out.r);
            const double lr = log_factorial(k) - log_factorial(shifted) - r * std::log(lambda);
            max_log_ratio = std::max(max_log_ratio, lr);
            ratio_error = std::max(ratio_error, 8 * kEps * (log_factorial(k) + log_factorial(shifted) +
                                                            r * std::abs(std::log(lambda)) + 1));
            ++out.ratio_points;
        }
    }
    out.max_log_ratio = out.ratio_points ? max_log_ratio : 0.0;

    const double e_t = std::exp(out.t);
    const double ratio_cap = epsilon / (2 * out.delta);
    const double ratio_slack =
        out.ratio_points ? e_t - std::exp(out.max_log_ratio + ratio_error) : e_t;
    const double hypothesis_slack = out.delta - out.mass_B.high();
    const double chebyshev_slack = out.chebyshev_bound - out.mass_B1_shifted.high();
    const double b2_slack = ratio_cap * out.mass_B2.low() - out.mass_B2_shifted.high();
    const double conclusion_slack = epsilon - out.mass_B_shifted.high();

    out.ratio_bound_ok = ratio_slack >= 0;
    out.chebyshev_ok = chebyshev_slack >= 0;
    out.b2_bound_ok = out.mass_B2_shifted.high() == 0 || b2_slack >= 0;
    out.union_bound_ok = out.mass_B_shifted.low() <=
                         out.mass_B1_shifted.high() + out.mass_B2_shifted.high();
    out.conclusion_ok = conclusion_slack > 0;
    out.status = hypothesis_slack > 0 ? ShiftStatus::ok : ShiftStatus::hypothesis_violated;

    out.min_slack = std::min({hypothesis_slack, ratio_slack, chebyshev_slack, conclusion_slack});
    if (out.mass_B2_shifted.high() > 0) out.min_slack = std::min(out.min_slack, b2_slack);
    return out;
}

}  // namespace chilab::poisson
