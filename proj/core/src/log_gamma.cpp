#include "chilab/log_gamma.hpp"

#include <array>
#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "chilab/errors.hpp"

namespace chilab {

namespace mp = boost::multiprecision;

namespace {

struct Fraction {
    long long num;
    long long den;
};

// B_2 .. B_32
constexpr std::array<Fraction, 16> kBernoulli{{
    {1, 6},
    {-1, 30},
    {1, 42},
    {-1, 30},
    {5, 66},
    {-691, 2730},
    {7, 6},
    {-3617, 510},
    {43867, 798},
    {-174611, 330},
    {854513, 138},
    {-236364091, 2730},
    {8553103, 6},
    {-23749461029LL, 870},
    {8615841276005LL, 14322},
    {-7709321041217LL, 510},
}};

// |B_34| bounds the truncation error of the series above.
constexpr Fraction kBernoulliNext{2577687858367LL, 6};

constexpr int kStirlingShift = 40;

}  // namespace

BoundedReal log_gamma(const Real& z) {
    if (z <= 0) throw DomainError("log_gamma requires z > 0");
    Real shifted = z;
    Real correction = 0;
    Real product = 1;
    while (shifted < kStirlingShift) {
        product *= shifted;
        shifted += 1;
    }
    if (product != 1) correction = mp::log(product);

    const Real half_log_two_pi = mp::log(boost::math::constants::two_pi<Real>()) / 2;
    Real value = (shifted - Real(0.5)) * mp::log(shifted) - shifted + half_log_two_pi;
    const Real inv = 1 / shifted;
    const Real inv_sq = inv * inv;
    Real power = inv;  // shifted^-(2j-1)
    for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
        const Real b = Real(kBernoulli[j - 1].num) / kBernoulli[j - 1].den;
        value += b / (2 * j * (2 * j - 1)) * power;
        power *= inv_sq;
    }
    const std::size_t next = kBernoulli.size() + 1;
    Real truncation = Real(kBernoulliNext.num) / kBernoulliNext.den / (2 * next * (2 * next - 1)) * power;
    value -= correction;
    // Rounding allowance: a few dozen operations at 2^-126 relative each.
    const Real rounding = (mp::abs(value) + mp::abs(correction) + 1) * mp::ldexp(Real(1), -120);
    return {value, truncation + rounding};
}

BigInt binomial(const BigInt& n, std::uint64_t k) {
    if (n < 0) throw DomainError("binomial requires n >= 0");
    if (BigInt(k) > n) return 0;
    std::uint64_t m = k;
    if (BigInt(2 * k) > n) m = (n - k).convert_to<std::uint64_t>();
    BigInt result = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

Real log2_binomial_exact(const BigInt& n, const BigInt& k) {
    if (k < 0 || k > n) throw DomainError("log2_binomial requires 0 <= k <= n");
    BigInt m = k;
    if (2 * k > n) m = n - k;
    return log2(binomial(n, m.convert_to<std::uint64_t>()));
}

BoundedReal log2_binomial_stirling(const BigInt& n, const BigInt& k) {
    if (k < 0 || k > n) throw DomainError("log2_binomial requires 0 <= k <= n");
    const auto top = log_gamma(Real(n + 1));
    const auto left = log_gamma(Real(k + 1));
    const auto right = log_gamma(Real(n - k + 1));
    const Real value = (top.value - left.value - right.value) / ln2();
    const Real error = (top.error_bound + left.error_bound + right.error_bound) / ln2() +
                       mp::abs(value) * mp::ldexp(Real(1), -120);
    return {value, error};
}

double log_factorial(std::uint64_t k) {
    static const std::array<double, 64> table = [] {
        std::array<double, 64> t{};
        double acc = 0.0;
        for (std::size_t i = 1; i < t.size(); ++i) {
            acc += std::log(static_cast<double>(i));
            t[i] = acc;
        }
        return t;
    }();
    if (k < table.size()) return table[k];
    const double z = static_cast<double>(k) + 1.0;
    const double inv = 1.0 / z;
    const double inv_sq = inv * inv;
    const double series =
        inv * (1.0 / 12.0 - inv_sq * (1.0 / 360.0 - inv_sq * (1.0 / 1260.0 - inv_sq / 1680.0)));
    return (z - 0.5) * std::log(z) - z + 0.91893853320467274178 + series;
}

}  // namespace chilab
