#include <cmath>

#include "chilab/errors.hpp"
#include "chilab/integer_set.hpp"
#include "chilab/philox.hpp"
#include "chilab/poisson.hpp"
#include "doctest.h"

using namespace chilab;
using namespace chilab::poisson;

TEST_CASE("log pmf reference values") {
    CHECK(log_pmf(PoissonSpec(1.0), 0) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(log_pmf(PoissonSpec(5.0), 5) == doctest::Approx(-1.74030218061154412124).epsilon(1e-14));
    CHECK(pmf(PoissonSpec(5.0), 5) == doctest::Approx(3125.0 / 120.0 * std::exp(-5.0)).epsilon(1e-14));
    // Far tail values stay finite in log space.
    CHECK(std::isfinite(log_pmf(PoissonSpec(1e5), 200000)));
}

TEST_CASE("invalid means") {
    CHECK_THROWS_AS(PoissonSpec{0.0}, DomainError);
    CHECK_THROWS_AS(PoissonSpec{-1.0}, DomainError);
    CHECK_THROWS_AS(PoissonSpec{std::nan("")}, DomainError);
    CHECK_THROWS_AS(PoissonSpec{INFINITY}, DomainError);
    CHECK_THROWS_AS(tv_poisson(0.0, 1.0), DomainError);
}

TEST_CASE("truncated normalisation") {
    for (double lambda : {0.5, 1.0, 2.0, 10.0, 1e4}) {
        const PoissonSpec spec(lambda);
        const auto end = static_cast<std::uint64_t>(std::floor(lambda + 20 * std::sqrt(lambda)));
        double s = 0;
        for (std::uint64_t k = 0; k <= end; ++k) s += pmf(spec, k);
        CAPTURE(lambda);
        CHECK(s >= 1 - 1e-10);
        CHECK(s <= 1 + 1e-9);  // exp of a log-space pmf near ln k! ~ 1e5 carries ~1e-11 relative error
        const Certified all = mass(spec, IntegerSet::at_least(0));
        CHECK(all.low() <= 1.0);
        CHECK(all.high() >= 1.0);
        // The certified bound grows with the number of summed terms.
        CHECK(all.error < (lambda < 100 ? 1e-12 : 1e-8));
    }
}

TEST_CASE("tv between Poisson laws") {
    CHECK(tv_poisson(3.0, 3.0).value == 0.0);
    const auto ab = tv_poisson(1.0, 2.0), ba = tv_poisson(2.0, 1.0);
    CHECK(ab.value > 0);
    CHECK(ab.value < 1);
    CHECK(ab.value == ba.value);
    CHECK(ab.error < 1e-10);
    CHECK(tv_poisson(100, 100.5).high() < tv_poisson(100, 105).low());
    // Triangle inequality within the certified error.
    for (auto [x, y, z] : {std::array{1.0, 2.0, 3.0}, std::array{10.0, 12.5, 11.0}, std::array{0.5, 40.0, 7.0}}) {
        const auto xy = tv_poisson(x, y), yz = tv_poisson(y, z), xz = tv_poisson(x, z);
        CHECK(xz.low() <= xy.high() + yz.high());
    }
    // Closed form for the unit shift: the laws cross once, so TV = P1(k <= m) - P2(k <= m).
    double direct = 0;
    for (std::uint64_t k = 0; k <= 1; ++k) direct += pmf(PoissonSpec(1.0), k) - pmf(PoissonSpec(2.0), k);
    CHECK(ab.value == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("empirical tv") {
    // Histogram equal to the pmf table, rounded.
    const PoissonSpec two(2.0);
    Histogram h;
    for (std::uint64_t k = 0; k < 40; ++k) h.push_back(static_cast<std::uint64_t>(std::llround(pmf(two, k) * 1e6)));
    CHECK(tv_empirical(h, two).value < 1e-3);

    // Point mass at zero against lambda = 10.
    CHECK(tv_empirical(Histogram{7}, PoissonSpec(10.0)).value == doctest::Approx(1 - std::exp(-10.0)).epsilon(1e-12));
    CHECK_THROWS_AS(tv_empirical(Histogram{}, two), DomainError);
    CHECK_THROWS_AS(tv_empirical(Histogram{0, 0}, two), DomainError);
}

TEST_CASE("empirical tv of inversion samples decays like 1/sqrt(N)") {
    double worst = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        rng::CounterStream s(seed, 0);
        Histogram h;
        for (int i = 0; i < 10000; ++i) {
            const auto k = sample_inversion(PoissonSpec(2.0), s.next_unit());
            if (k >= h.size()) h.resize(k + 1, 0);
            ++h[k];
        }
        worst = std::max(worst, tv_empirical(h, PoissonSpec(2.0)).value);
    }
    CHECK(worst < 0.03);
}

TEST_CASE("delta and t selection for eps = 0.1") {
    const auto c = shifted_mass_check(1e4, IntegerSet::at_least(10600), 0.1);
    CHECK(c.delta == std::ldexp(1.0, -14));
    CHECK(c.t_lower == doctest::Approx(std::sqrt(30.0) + 1));
    CHECK(c.t_upper == doctest::Approx(std::log(0.1 / (2 * c.delta))));
    CHECK(c.t_upper > c.t_lower);
    CHECK(c.t == doctest::Approx((c.t_lower + c.t_upper) / 2));
    // The next dyadic up would break the inequality.
    CHECK(std::log(0.1 / (4 * c.delta)) <= c.t_lower);
}

TEST_CASE("shifted mass: empty set") {
    const auto c = shifted_mass_check(100, IntegerSet{}, 0.1);
    CHECK(c.status == ShiftStatus::ok);
    CHECK(c.mass_B.value == 0);
    CHECK(c.mass_B_shifted.value == 0);
    CHECK(c.conclusion_ok);
}

TEST_CASE("shifted mass: upper tail at lambda = 1e4") {
    const double lambda = 1e4;
    const auto c = shifted_mass_check(lambda, IntegerSet::at_least(static_cast<std::int64_t>(lambda + 6 * 100)), 0.1);
    CHECK(c.status == ShiftStatus::ok);
    CHECK(c.mass_B.high() < c.delta);
    CHECK(c.mass_B_shifted.high() < 0.1);
    CHECK(c.ratio_bound_ok);
    CHECK(c.chebyshev_ok);
    CHECK(c.b2_bound_ok);
    CHECK(c.union_bound_ok);
    CHECK(c.min_slack >= kCertifiedSlack);
    // Oracle: direct summation of both tails.
    double tail = 0, shifted = 0;
    for (std::uint64_t k = 10600; k < 12000; ++k) {
        tail += pmf(PoissonSpec(lambda), k);
        shifted += pmf(PoissonSpec(lambda), k - 100);
    }
    CHECK(c.mass_B.value == doctest::Approx(tail).epsilon(1e-9));
    CHECK(c.mass_B_shifted.value == doctest::Approx(shifted).epsilon(1e-9));
}

TEST_CASE("pointwise ratio bound at k = lambda + 3 sqrt(lambda)") {
    const double lambda = 1e4;
    const std::uint64_t k = 10300, r = 100;
    const double log_ratio = log_pmf(PoissonSpec(lambda), k - r) - log_pmf(PoissonSpec(lambda), k);
    CHECK(log_ratio <= r * std::log(double(k) / lambda));
    CHECK(log_ratio <= 3.0 + 0.1);
    const auto c = shifted_mass_check(lambda, IntegerSet::at_least(10300), 0.1);
    CHECK(log_ratio < c.t);
}

TEST_CASE("hypothesis violation is a status, not an exception") {
    const auto c = shifted_mass_check(100, IntegerSet::at_least(90), 0.1);
    CHECK(c.status == ShiftStatus::hypothesis_violated);
    CHECK_THROWS_AS(shifted_mass_check(3.9, IntegerSet{}, 0.1), DomainError);
    CHECK_THROWS_AS(shifted_mass_check(100, IntegerSet{}, 1.0), DomainError);
}

TEST_CASE("union bound over the partition") {
    for (double lambda : {1e3, 1e4, 1e5}) {
        for (const char* set : {"empty", "0..5", "5000..5100,200000..", "120..130"}) {
            const auto B = IntegerSet::parse(set);
            const auto c = shifted_mass_check(lambda, B, 0.2);
            CAPTURE(lambda);
            CAPTURE(set);
            CHECK(c.mass_B_shifted.low() <= c.mass_B1_shifted.high() + c.mass_B2_shifted.high());
            if (c.status == ShiftStatus::ok) CHECK(c.mass_B_shifted.high() < 0.2);
        }
    }
}

TEST_CASE("Chebyshev step by direct summation") {
    for (double lambda : {1e3, 1e4, 1e5}) {
        const auto c = shifted_mass_check(lambda, IntegerSet{}, 0.1);
        const double r = std::floor(std::sqrt(lambda));
        const double bound = lambda / ((c.t - 1) * (c.t - 1) * r * r);
        const auto lo = static_cast<std::int64_t>(std::ceil(lambda - (c.t - 1) * r));
        const auto hi = static_cast<std::int64_t>(std::floor(lambda + (c.t - 1) * r));
        const auto outside = mass(PoissonSpec(lambda), IntegerSet::interval(lo, hi).complement());
        CAPTURE(lambda);
        CHECK(outside.high() <= bound);
        CHECK(c.chebyshev_bound == doctest::Approx(bound));
    }
}
