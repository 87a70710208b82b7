#include "chilab/lab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "chilab/asymptotics.hpp"
#include "chilab/coloring.hpp"
#include "chilab/errors.hpp"
#include "chilab/independent_sets.hpp"
#include "chilab/parallel.hpp"

namespace chilab::lab {

XkReport xk_distribution_experiment(std::uint64_t n, std::uint64_t k, std::uint64_t samples, std::uint64_t seed,
                                    const XkOptions& options) {
    if (samples < 100) throw DomainError("xk-dist needs at least 100 samples");
    if (k > n || n < 1 || n > graph::kMaxVertices) throw DomainError("xk-dist needs 0 <= k <= n <= 16384");
    if (options.blocks < 1 || options.blocks > samples) throw DomainError("invalid block count");

    XkReport rep;
    rep.n = n;
    rep.k = k;
    rep.samples = samples;
    rep.seed = seed;
    rep.log2_mu = asymptotics::log2_expected_ksets(BigInt(n), BigInt(k));
    rep.mu = static_cast<double>(exp2(rep.log2_mu));

    std::vector<std::uint64_t> counts(samples);
    const auto t0 = std::chrono::steady_clock::now();
    counts[0] = graph::count_independent_ksets(graph::sample_gnp_half(n, seed, 0), k).count;
    const double probe = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double workers = static_cast<double>(std::max<std::size_t>(1, options.threads));
    if (probe * static_cast<double>(samples) / workers > options.max_estimated_seconds)
        throw DomainError("xk-dist at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                          " is infeasible: one sample took " + std::to_string(probe) +
                          " s; pick k closer to the independence threshold or fewer samples");

    parallel_for(samples - 1, options.threads, [&](std::size_t i) {
        counts[i + 1] = graph::count_independent_ksets(graph::sample_gnp_half(n, seed, i + 1), k).count;
    });

    auto histogram = [](auto first, auto last) {
        poisson::Histogram h;
        for (auto it = first; it != last; ++it) {
            if (*it >= h.size()) h.resize(*it + 1, 0);
            ++h[*it];
        }
        return h;
    };
    rep.histogram = histogram(counts.begin(), counts.end());
    const poisson::PoissonSpec spec(std::max(rep.mu, 1e-300));
    rep.tv = poisson::tv_empirical(rep.histogram, spec);
    for (std::size_t b = 0; b < options.blocks; ++b) {
        const auto lo = counts.begin() + static_cast<std::ptrdiff_t>(b * samples / options.blocks);
        const auto hi = counts.begin() + static_cast<std::ptrdiff_t>((b + 1) * samples / options.blocks);
        rep.block_tv.push_back(poisson::tv_empirical(histogram(lo, hi), spec));
    }

    double sum = 0;
    for (auto c : counts) sum += static_cast<double>(c);
    rep.mean = sum / static_cast<double>(samples);
    double ss = 0;
    for (auto c : counts) ss += (static_cast<double>(c) - rep.mean) * (static_cast<double>(c) - rep.mean);
    rep.variance = ss / static_cast<double>(samples - 1);
    return rep;
}

ChiIntervalReport chi_interval_experiment(std::uint64_t n, std::uint64_t samples, std::uint64_t seed,
                                          const ChiIntervalOptions& options) {
    if (n < 1 || n > 80) throw DomainError("chi-interval needs 1 <= n <= 80");
    if (samples < 50) throw DomainError("chi-interval needs at least 50 samples");

    ChiIntervalReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    rep.node_budget = options.budget_ms * kNodesPerMs;
    rep.tolerance = options.tolerance;
    rep.per_sample.resize(samples);

    const auto budget = graph::SolveBudget::nodes(rep.node_budget);
    parallel_for(samples, options.threads, [&](std::size_t i) {
        const auto g = graph::sample_gnp_half(n, seed, i);
        const auto chi = graph::chromatic_number(g, budget);
        rep.per_sample[i] = {chi.lower, chi.upper, chi.complete, graph::independence_number(g), chi.nodes};
    });

    std::vector<std::size_t> values;
    rep.envelope_ok = true;
    for (const auto& s : rep.per_sample) {
        if (!s.complete) {
            ++rep.incomplete;
            continue;
        }
        values.push_back(s.upper);
        rep.envelope_ok = rep.envelope_ok && s.upper * s.alpha >= n && s.upper <= n;
    }
    rep.unreliable = static_cast<double>(rep.incomplete) > options.unreliable_fraction * static_cast<double>(samples);
    if (values.empty()) return rep;

    std::sort(values.begin(), values.end());
    const std::size_t m = values.size();
    rep.min = values.front();
    rep.max = values.back();
    double sum = 0;
    for (auto v : values) sum += static_cast<double>(v);
    rep.mean = sum / static_cast<double>(m);
    for (double p : {0.05, 0.25, 0.5, 0.75, 0.95}) {
        const auto idx = static_cast<std::size_t>(std::ceil(p * static_cast<double>(m)));
        rep.quantiles.emplace_back(p, values[std::max<std::size_t>(idx, 1) - 1]);
    }
    const auto window = static_cast<std::size_t>(std::ceil(0.9 * static_cast<double>(m)));
    std::size_t best = 0;
    for (std::size_t i = 1; i + window <= m; ++i)
        if (values[i + window - 1] - values[i] < values[best + window - 1] - values[best]) best = i;
    rep.interval90_lo = values[best];
    rep.interval90_hi = values[best + window - 1];
    const auto inside = std::count_if(values.begin(), values.end(),
                                      [&](std::size_t v) { return v >= rep.interval90_lo && v <= rep.interval90_hi; });
    rep.interval90_mass = static_cast<double>(inside) / static_cast<double>(m);

    if (n >= 16) {
        rep.f_n = asymptotics::chromatic_estimate(BigInt(n));
        const double f = static_cast<double>(*rep.f_n);
        rep.relative_deviation = (rep.mean - f) / f;
        rep.within_tolerance = std::fabs(*rep.relative_deviation) <= options.tolerance;
    }
    return rep;
}

}  // namespace chilab::lab
