#include "chilab/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "chilab/errors.hpp"
#include "chilab/log_gamma.hpp"

namespace chilab::asymptotics {

namespace mp = boost::multiprecision;

namespace {

constexpr std::uint64_t kExactBinomialMaxN = 10'000;
constexpr std::uint64_t kExactBinomialMaxK = 4096;
constexpr std::uint64_t kFastPathLimit = std::uint64_t{1} << 50;

Real log2_e_over_2() {
    static const Real value = 1 / ln2() - 1;
    return value;
}

Real alpha0_from_log2n(const Real& log2n) {
    return 2 * log2n - 2 * log2(log2n) + 2 * log2_e_over_2() + 1;
}

void require_profile_domain(const BigInt& n) {
    if (n < 4) throw DomainError("n must be >= 4, got " + n.str());
}

double approx_alpha0(double n) {
    const double l = std::log2(n);
    return 2 * l - 2 * std::log2(l) + 2 * (1 / std::log(2.0) - 1) + 1;
}

// Smallest m > n with floor(alpha0(m)) > a.
BigInt next_alpha_jump(const BigInt& n, std::int64_t a) {
    const Real target = a + 1;
    BigInt lo = n;
    BigInt step = 1;
    BigInt hi = n + step;
    while (alpha0(hi) < target) {
        lo = hi;
        step *= 2;
        hi = n + step;
    }
    while (hi - lo > 1) {
        const BigInt mid = (lo + hi) / 2;
        if (alpha0(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

}  // namespace

Real alpha0(const BigInt& n) {
    require_profile_domain(n);
    return alpha0_from_log2n(log2(n));
}

Real log2_expected_ksets(const BigInt& n, const BigInt& k) {
    if (k < 0 || k > n) throw DomainError("log2_expected_ksets requires 0 <= k <= n");
    if (k == 0) return 0;
    const BigInt m = std::min(k, BigInt(n - k));
    Real log2_binom;
    if (n <= kExactBinomialMaxN || m <= kExactBinomialMaxK)
        log2_binom = log2_binomial_exact(n, k);
    else
        log2_binom = log2_binomial_stirling(n, k).value;
    return log2_binom - Real(k * (k - 1) / 2);
}

AsymptoticProfile profile(const BigInt& n) {
    require_profile_domain(n);
    AsymptoticProfile p;
    p.n = n;
    const Real log2n = log2(n);
    p.alpha0 = alpha0_from_log2n(log2n);
    p.a = mp::floor(p.alpha0).convert_to<std::int64_t>();

    const Real nearest = mp::round(p.alpha0);
    if (mp::abs(p.alpha0 - nearest) < mp::ldexp(Real(1), -60)) {
        p.a_ambiguous = true;
        p.a_alternate = nearest.convert_to<std::int64_t>() == p.a ? p.a - 1 : p.a + 1;
    }

    const auto a = static_cast<std::uint64_t>(p.a);
    p.log2_mu = log2_expected_ksets(n, BigInt(a));
    p.x = p.log2_mu / log2n;

    // floor(sqrt(y)) == floor(sqrt(floor(y))) for y >= 0.
    const BigInt mu_floor = binomial(n, a) >> static_cast<unsigned>(a * (a - 1) / 2);
    p.r = mp::sqrt(mu_floor);
    p.n_prime = n + p.r * a;
    p.discrepancy = mp::abs(p.x - (p.alpha0 - p.a));
    p.outside_envelope = p.x <= -1 || p.x >= 2;
    return p;
}

double approx_x(std::uint64_t n) {
    if (n < 4) throw DomainError("n must be >= 4");
    const double nd = static_cast<double>(n);
    const auto a = static_cast<std::uint64_t>(std::floor(approx_alpha0(nd)));
    long double bits = 0;
    for (std::uint64_t i = 0; i < a; ++i) bits += std::log2(static_cast<long double>(n - i));
    bits -= log_factorial(a) / std::log(2.0L);
    bits -= static_cast<long double>(a) * static_cast<long double>(a - 1) / 2;
    return static_cast<double>(bits / std::log2(static_cast<long double>(n)));
}

BigInt find_n_in_band(double c1, double c2, const BigInt& N, BandSearchOptions options) {
    if (!(0 <= c1 && c1 < c2 && c2 <= 1)) throw DomainError("band must satisfy 0 <= c1 < c2 <= 1");
    if (N < 4) throw DomainError("N must be >= 4");
    constexpr double kEdgeTolerance = 1e-9;

    BigInt n = N;
    for (std::uint64_t examined = 0;; ++examined) {
        if (examined >= options.max_candidates)
            throw BudgetExhausted("band search budget exhausted after " +
                                      std::to_string(options.max_candidates) + " candidates",
                                  n.str());
        double x = 0;
        std::int64_t a = 0;
        double nd = 0;
        bool exact_checked = false;
        if (n < kFastPathLimit) {
            const auto nu = n.convert_to<std::uint64_t>();
            nd = static_cast<double>(nu);
            a = static_cast<std::int64_t>(std::floor(approx_alpha0(nd)));
            x = approx_x(nu);
        } else {
            const auto p = profile(n);
            nd = p.n.convert_to<double>();
            a = p.a;
            x = p.x.convert_to<double>();
            exact_checked = true;
            if (p.x > c1 && p.x < c2) return n;
        }

        const bool near_band = x > c1 - kEdgeTolerance && x < c2 + kEdgeTolerance;
        if (near_band && !exact_checked) {
            const auto p = profile(n);
            if (p.x > c1 && p.x < c2) return n;
        }

        if (x <= c1 - kEdgeTolerance) {
            // x increases by at most `slope` per unit step while a is fixed,
            // and a change of a only lowers x; skipping half the distance is safe.
            const double log2n = std::log2(nd);
            const double slope =
                (static_cast<double>(a) / (nd + 1 - static_cast<double>(a)) + std::abs(x) / nd) /
                (std::log(2.0) * log2n);
            const double skip = std::floor(0.5 * (c1 - x) / slope);
            n += skip >= 1 ? BigInt(static_cast<std::uint64_t>(std::min(skip, 1e18))) : BigInt(1);
        } else if (x >= c2 + kEdgeTolerance) {
            // x only decreases when a increments.
            const BigInt jump = next_alpha_jump(n, a);
            n = std::max(BigInt(n + 1), BigInt(jump - 2));
        } else {
            n += 1;
        }
    }
}

Real chromatic_estimate(const BigInt& n) {
    if (n < 16) throw DomainError("chromatic_estimate requires n >= 16");
    const Real denominator = alpha0(n) - 1 - 2 / ln2();
    if (denominator <= 0) throw DomainError("chromatic_estimate denominator is not positive");
    return Real(n) / denominator;
}

Real chromatic_estimate_direct(const BigInt& n) {
    if (n < 16) throw DomainError("chromatic_estimate requires n >= 16");
    const Real l = log2(n);
    const Real denominator = 2 * l - 2 * log2(l) - 2;
    if (denominator <= 0) throw DomainError("chromatic_estimate denominator is not positive");
    return Real(n) / denominator;
}

FGap f_gap(const BigInt& n) {
    const auto p = profile(n);
    if (!(p.x > 0 && p.x < 1)) throw DomainError("f_gap requires x(n) in (0, 1); x = " + to_decimal(p.x, 12));
    if (p.r == 0) throw DomainError("f_gap requires r(n) >= 1");
    FGap g;
    g.n = n;
    g.n_prime = p.n_prime;
    g.a = p.a;
    g.r = p.r;
    g.x = p.x;
    g.gap = chromatic_estimate(p.n_prime) - chromatic_estimate(n);
    const Real r = Real(p.r);
    g.predicted = r + (1 - p.x) * r / p.a;
    g.relative_error = mp::abs(g.gap - g.predicted) * p.a / r;
    return g;
}

YBoundReport y_bound(const BigInt& n, const BigInt& A) {
    if (A < 1) throw DomainError("y_bound requires A >= 1");
    const auto p = profile(n);
    if (p.a < 2) throw DomainError("y_bound requires a(n) >= 2");
    YBoundReport rep;
    rep.n = n;
    rep.A = A;
    rep.r = p.r;
    rep.a = p.a;
    rep.mu = exp2(p.log2_mu);

    const auto a = static_cast<std::uint64_t>(p.a);
    const Real log2_A_plus_r = log2(BigInt(A + p.r));
    const Real log2_n_minus_a = log2(BigInt(n - a));
    BigInt falling = 1;  // a! / (a-t)!
    Real best;
    for (std::uint64_t t = 1; t < a; ++t) {
        falling *= a - t + 1;
        // C(a,t) a! / (a-t)!
        const BigInt numerator = binomial(BigInt(a), t) * falling;
        const Real value = log2_A_plus_r + log2(numerator) + Real(t * (t - 1) / 2) -
                           Real(t) * log2_n_minus_a;
        rep.log2_sigma.emplace(static_cast<std::int64_t>(t), value);
        if (t == 1 || value > best) {
            best = value;
            rep.argmax_t = static_cast<std::int64_t>(t);
        }
    }
    rep.sigma_max = exp2(best);
    const Real endpoint = std::max(rep.log2_sigma.at(1), rep.log2_sigma.at(p.a - 1));
    rep.endpoint_max_holds = endpoint == best;
    rep.a_sigma_max = rep.sigma_max * p.a;
    if (rep.a_sigma_max < 1) {
        const Real q = rep.a_sigma_max;
        rep.bound = Real(p.r) * rep.mu / Real(A + p.r) * q / (1 - q);
    } else {
        rep.divergent = true;
    }
    return rep;
}

LedgerReport ledger(double c, const BigInt& n1_hint, std::uint64_t enumerate_cap) {
    if (!(c > 0 && c < 0.25)) throw DomainError("ledger requires c in (0, 1/4)");
    if (n1_hint < 16) throw DomainError("ledger requires n1_hint >= 16");
    if (enumerate_cap == 0) throw DomainError("enumerate_cap must be positive");

    LedgerReport rep;
    rep.c = c;
    const Real eps = (Real(1) / 4 - Real(c)) / 4;
    rep.epsilon = eps.convert_to<double>();
    const Real half = Real(1) / 2;

    const double band_lo = (half - 4 * eps).convert_to<double>();
    const double band_hi = (half - 3 * eps).convert_to<double>();
    rep.n1 = find_n_in_band(band_lo, band_hi, n1_hint);
    const auto p1 = profile(rep.n1);
    rep.x1 = p1.x;
    rep.a = p1.a;
    const auto a = static_cast<std::uint64_t>(rep.a);

    // Largest n with alpha0(n) < a + 1/2 - 2 eps; alpha0 is increasing.
    const Real alpha_limit = Real(rep.a) + half - 2 * eps;
    if (p1.alpha0 >= alpha_limit) {
        rep.M_alpha0 = rep.n1 - 1;
    } else {
        BigInt lo = rep.n1;
        BigInt hi = rep.n1 * 2;
        while (alpha0(hi) < alpha_limit) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            const BigInt mid = (lo + hi) / 2;
            if (alpha0(mid) < alpha_limit)
                lo = mid;
            else
                hi = mid;
        }
        rep.M_alpha0 = lo;
    }

    // Largest n <= M_alpha0 with x(n) < 1/2 - 2 eps; x is increasing while a is fixed.
    const Real x_limit = half - 2 * eps;
    if (rep.M_alpha0 < rep.n1 || p1.x >= x_limit) {
        rep.M_exponent = rep.n1 - 1;
    } else if (profile(rep.M_alpha0).x < x_limit) {
        rep.M_exponent = rep.M_alpha0;
    } else {
        BigInt lo = rep.n1;
        BigInt hi = rep.M_alpha0;
        while (hi - lo > 1) {
            const BigInt mid = (lo + hi) / 2;
            if (profile(mid).x < x_limit)
                lo = mid;
            else
                hi = mid;
        }
        rep.M_exponent = lo;
    }
    if (rep.M_exponent < rep.M_alpha0) {
        rep.M = rep.M_exponent;
        rep.boundary = LedgerBoundary::exponent_threshold;
    } else {
        rep.M = rep.M_alpha0;
        rep.boundary = LedgerBoundary::alpha0_threshold;
    }

    const Real eps_lo = eps;
    const Real eps_hi = half - eps;
    BigInt n = rep.n1;
    while (n <= rep.M && rep.steps.size() < enumerate_cap) {
        const auto p = profile(n);
        if (p.r == 0) throw DomainError("ledger step with r = 0 at n = " + n.str());
        LedgerStep step;
        step.n = n;
        step.x = p.x;
        step.r = p.r;
        step.a = p.a;
        step.hypothesis_ok = p.a == rep.a && p.x > eps_lo && p.x < eps_hi;
        rep.steps.push_back(step);
        n += p.r * a;
    }
    rep.complete = n > rep.M;

    BigInt r_sum = 0;
    for (std::size_t i = 0; i + 1 < rep.steps.size(); ++i) r_sum += rep.steps[i].r;
    rep.telescoped_sum = r_sum * a;
    rep.telescoped_span = rep.steps.empty() ? BigInt(0) : BigInt(rep.steps.back().n - rep.n1);

    const Real three_a = Real(3 * a);
    if (rep.complete) {
        rep.i_max_low = rep.i_max_high = rep.steps.size();
        rep.sum_r_over_3a = Real(r_sum) / three_a;
        rep.sum_r_over_3a_high = rep.sum_r_over_3a;
    } else {
        const BigInt span = rep.M - rep.n1;
        const BigInt r_first = p1.r;
        const BigInt r_last = profile(rep.M).r;
        rep.i_max_low = static_cast<std::uint64_t>(BigInt(span / (r_last * a)).convert_to<std::uint64_t>());
        rep.i_max_high = static_cast<std::uint64_t>(BigInt(span / (r_first * a)).convert_to<std::uint64_t>()) + 1;
        const Real a_sq = Real(a) * a;
        const BigInt low_span = span > r_last * a ? BigInt(span - r_last * a) : BigInt(0);
        rep.sum_r_over_3a = Real(low_span) / (3 * a_sq);
        rep.sum_r_over_3a_high = Real(span) / (3 * a_sq);
    }

    // Smallest n with floor(n^(x1/2)) / (3 alpha0(n)) >= n^c. alpha0 >= a keeps
    // the predicate conservative and monotone past log2 n ~ 60.
    const Real half_x = rep.x1 / 2;
    const Real cc = Real(c);
    auto crosses = [&](const BigInt& m) {
        const Real l = log2(m);
        const BigInt r = floor_to_int(exp2(half_x * l));
        if (r < 1) return false;
        return log2(r) - log2(3 * alpha0_from_log2n(l)) >= cc * l;
    };
    if (crosses(rep.n1)) {
        rep.crossover_n = rep.n1;
    } else {
        BigInt lo = rep.n1;
        std::optional<BigInt> hi;
        for (unsigned bits = 64; bits <= 1u << 14; bits *= 2) {
            const BigInt candidate = BigInt(1) << bits;
            if (candidate <= lo) continue;
            if (crosses(candidate)) {
                hi = candidate;
                break;
            }
            lo = candidate;
        }
        if (hi) {
            BigInt h = *hi;
            while (h - lo > 1) {
                const BigInt mid = (lo + h) / 2;
                if (crosses(mid))
                    h = mid;
                else
                    lo = mid;
            }
            rep.crossover_n = h;
        }
    }
    return rep;
}

}  // namespace chilab::asymptotics
