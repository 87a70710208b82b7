#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include "chilab/asymptotics.hpp"
#include "chilab/coloring.hpp"
#include "chilab/coupling.hpp"
#include "chilab/parallel.hpp"
#include "chilab/philox.hpp"

namespace chilab::coupling {
namespace {

constexpr std::uint64_t kPairDomain = 1;
constexpr std::uint64_t kReferenceDomain = 2;
constexpr std::uint64_t kInvarianceDomain = 3;
constexpr std::uint64_t kResampleDomain = 4;

std::int64_t triangles(const Graph& g) {
    std::int64_t total = 0;
    const std::size_t w = g.words_per_row();
    for (Vertex u = 0; u < g.order(); ++u) {
        auto ru = g.row(u);
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) continue;
            auto rv = g.row(v);
            for (std::size_t i = v / graph::kWordBits; i < w; ++i) {
                graph::Word common = ru[i] & rv[i];
                if (i == v / graph::kWordBits) common &= ~((graph::Word{2} << (v % graph::kWordBits)) - 1);
                total += std::popcount(common);
            }
        }
    }
    return total;
}

double ks_distance(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    // Both inputs sorted.
    std::size_t i = 0, j = 0;
    double best = 0;
    while (i < x.size() && j < y.size()) {
        const std::int64_t t = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == t) ++i;
        while (j < y.size() && y[j] == t) ++j;
        best = std::max(best, std::fabs(double(i) / double(x.size()) - double(j) / double(y.size())));
    }
    return best;
}

std::pair<double, double> mean_se(const std::vector<std::int64_t>& v) {
    const double n = static_cast<double>(v.size());
    double mean = 0;
    for (auto x : v) mean += static_cast<double>(x);
    mean /= n;
    double ss = 0;
    for (auto x : v) ss += (static_cast<double>(x) - mean) * (static_cast<double>(x) - mean);
    const double var = v.size() > 1 ? ss / (n - 1) : 0;
    return {mean, std::sqrt(var / n)};
}

}  // namespace

Statistic parse_statistic(const std::string& name) {
    if (name == "edge_count") return Statistic::edge_count;
    if (name == "chi") return Statistic::chi;
    if (name == "max_degree") return Statistic::max_degree;
    if (name == "triangle_count") return Statistic::triangle_count;
    throw DomainError("unknown statistic '" + name + "'");
}

std::string to_string(Statistic s) {
    switch (s) {
        case Statistic::edge_count: return "edge_count";
        case Statistic::chi: return "chi";
        case Statistic::max_degree: return "max_degree";
        case Statistic::triangle_count: return "triangle_count";
    }
    return "?";
}

std::int64_t evaluate(Statistic s, const Graph& g) {
    switch (s) {
        case Statistic::edge_count: return static_cast<std::int64_t>(g.edge_count());
        case Statistic::chi: return static_cast<std::int64_t>(graph::chromatic_number(g).value());
        case Statistic::max_degree: {
            std::size_t d = 0;
            for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
            return static_cast<std::int64_t>(d);
        }
        case Statistic::triangle_count: return triangles(g);
    }
    return 0;
}

ReferenceSample sample_reference(std::uint64_t n, std::uint64_t a, std::uint64_t A, std::uint64_t seed,
                                 std::uint64_t max_attempts) {
    graph::CountOptions opt;
    opt.enumerate = true;
    opt.cap = A;
    opt.stop_above = A;
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = graph::sample_gnp_half(n, seed, attempt);
        const auto rep = graph::count_independent_ksets(g, a, opt);
        if (rep.count == A && rep.all_disjoint) return {std::move(g), attempt + 1};
    }
    throw BudgetExhausted("reference sampler found no graph with X_a = A and disjoint a-sets",
                          "attempt " + std::to_string(max_attempts));
}

Claim2Report claim2_experiment(std::uint64_t n, std::uint64_t a, std::uint64_t A, std::size_t samples,
                               Statistic statistic, const Claim2Options& options) {
    if (A < 1) throw DomainError("dominance comparison needs A >= 1");
    if (samples < 2) throw DomainError("dominance comparison needs at least 2 samples");

    Claim2Report rep;
    rep.n = n;
    rep.a = a;
    rep.A = A;
    rep.statistic = statistic;
    rep.samples = samples;
    rep.slack = options.slack;
    const Real mu = exp2(asymptotics::log2_expected_ksets(BigInt(n), BigInt(a)));
    rep.r = std::max<std::uint64_t>(1, floor_to_int(sqrt(mu)).convert_to<std::uint64_t>());

    rep.statistic_invariant = true;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const Graph g = graph::sample_gnp_half(n, rng::derive_seed(options.seed, kInvarianceDomain, i), 0);
        const Graph p = permute_labels(g, rng::derive_seed(options.seed, kInvarianceDomain, 1000 + i));
        rep.statistic_invariant = rep.statistic_invariant && evaluate(statistic, g) == evaluate(statistic, p);
    }
    if (!rep.statistic_invariant) throw DomainError("statistic is not invariant under relabelling");

    rep.values_H.resize(samples);
    rep.values_ref.resize(samples);
    std::vector<std::uint64_t> ref_attempts(samples), pair_attempts(samples);
    parallel_for(samples, options.threads, [&](std::size_t i) {
        const auto pair = build_conditioned_pair(n, a, A, rep.r, rng::derive_seed(options.seed, kPairDomain, i),
                                                 options.max_attempts_per_sample);
        rep.values_H[i] = evaluate(statistic, pair.H);
        pair_attempts[i] = pair.attempts;
        const auto ref = sample_reference(n, a, A, rng::derive_seed(options.seed, kReferenceDomain, i),
                                          options.max_attempts_per_sample);
        rep.values_ref[i] = evaluate(statistic, ref.g);
        ref_attempts[i] = ref.attempts;
    });
    rep.ref_attempts = std::accumulate(ref_attempts.begin(), ref_attempts.end(), std::uint64_t{0});
    rep.pair_attempts = std::accumulate(pair_attempts.begin(), pair_attempts.end(), std::uint64_t{0});
    rep.ref_acceptance = double(samples) / double(rep.ref_attempts);
    if (rep.ref_attempts >= 10'000 && rep.ref_acceptance < 1e-4)
        throw BudgetExhausted("reference acceptance rate below 1e-4",
                              std::to_string(rep.ref_attempts) + " attempts for " + std::to_string(samples) +
                                  " samples");

    std::tie(rep.mean_H, rep.se_H) = mean_se(rep.values_H);
    std::tie(rep.mean_ref, rep.se_ref) = mean_se(rep.values_ref);
    rep.pooled_se = std::sqrt(rep.se_H * rep.se_H + rep.se_ref * rep.se_ref);
    rep.mean_gap_in_se = rep.pooled_se > 0 ? std::fabs(rep.mean_H - rep.mean_ref) / rep.pooled_se : 0;

    std::map<std::int64_t, std::pair<std::size_t, std::size_t>> freq;
    for (auto v : rep.values_H) ++freq[v].first;
    for (auto v : rep.values_ref) ++freq[v].second;
    const double m = static_cast<double>(samples);
    for (const auto& [v, c] : freq) rep.tv += 0.5 * std::fabs(double(c.first) / m - double(c.second) / m);

    auto sh = rep.values_H, sr = rep.values_ref;
    std::sort(sh.begin(), sh.end());
    std::sort(sr.begin(), sr.end());
    rep.ks = ks_distance(sh, sr);

    std::vector<std::int64_t> pooled = rep.values_H;
    pooled.insert(pooled.end(), rep.values_ref.begin(), rep.values_ref.end());
    std::size_t extreme = 0;
    for (std::size_t round = 0; round < options.permutation_rounds; ++round) {
        const auto perm = random_permutation(pooled.size(), rng::derive_seed(options.seed, kResampleDomain, round));
        std::vector<std::int64_t> x, y;
        for (std::size_t i = 0; i < pooled.size(); ++i) (i < samples ? x : y).push_back(pooled[perm[i]]);
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (ks_distance(x, y) >= rep.ks) ++extreme;
    }
    rep.ks_permutation_p = double(1 + extreme) / double(1 + options.permutation_rounds);

    rep.all_dominated = true;
    for (const auto& entry : freq) {
        for (bool upper : {true, false}) {
            ThresholdEvent e;
            e.threshold = entry.first;
            e.upper = upper;
            std::size_t h = 0, ref = 0;
            for (auto v : rep.values_H) h += upper ? v >= e.threshold : v <= e.threshold;
            for (auto v : rep.values_ref) ref += upper ? v >= e.threshold : v <= e.threshold;
            e.p_H = double(h) / m;
            e.p_ref = double(ref) / m;
            e.se = std::sqrt((e.p_H * (1 - e.p_H) + e.p_ref * (1 - e.p_ref)) / m);
            e.dominated = e.p_H <= (1 + options.slack) * e.p_ref + 2 * e.se;
            rep.all_dominated = rep.all_dominated && e.dominated;
            rep.events.push_back(e);
        }
    }
    return rep;
}

}  // namespace chilab::coupling
