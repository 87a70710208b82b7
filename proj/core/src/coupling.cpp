#include "chilab/coupling.hpp"

#include <numeric>

#include "chilab/coloring.hpp"
#include "chilab/philox.hpp"

namespace chilab::coupling {
namespace {

VertexSet block(std::uint64_t start, std::uint64_t a) {
    VertexSet s(a);
    std::iota(s.begin(), s.end(), static_cast<Vertex>(start));
    return s;
}

std::uint64_t count_ksets(const Graph& g, std::uint64_t k, std::uint64_t stop_above) {
    graph::CountOptions opt;
    opt.stop_above = stop_above;
    return graph::count_independent_ksets(g, k, opt).count;
}

Graph prefix(const Graph& g, std::uint64_t n) {
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), Vertex{0});
    return g.induced(v);
}

}  // namespace

std::string to_string(Rejection r) {
    switch (r) {
        case Rejection::none: return "none";
        case Rejection::u1: return "U1";
        case Rejection::u2: return "U2";
    }
    return "?";
}

CouplingFailure::CouplingFailure(std::uint64_t attempts, Rejection last)
    : BudgetExhausted("conditioned pair rejected " + std::to_string(attempts) + " times",
                      "attempt " + std::to_string(attempts) + ", last rejection " + to_string(last)),
      attempts_(attempts),
      last_(last) {}

CoupledPair build_conditioned_pair(std::uint64_t n, std::uint64_t a, std::uint64_t A, std::uint64_t r,
                                   std::uint64_t seed, std::uint64_t max_attempts) {
    if (A < 1 || r < 1 || a < 2) throw DomainError("coupling needs A >= 1, r >= 1, a >= 2");
    if (A * a > n) throw DomainError("the A planted sets must fit inside V: need A*a <= n");
    const std::uint64_t n_prime = n + r * a;
    if (n_prime > graph::kMaxVertices) throw DomainError("n' exceeds the vertex cap");

    CoupledPair pair;
    pair.n = n;
    pair.n_prime = n_prime;
    pair.a = a;
    pair.A = A;
    pair.r = r;
    pair.seed = seed;
    for (std::uint64_t i = 0; i < r; ++i) pair.planted.push_back(block(n + i * a, a));
    for (std::uint64_t j = 0; j < A; ++j) pair.planted.push_back(block(j * a, a));

    Rejection last = Rejection::none;
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = graph::sample_gnp_half(n_prime, seed, attempt);
        for (const auto& s : pair.planted)
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) g.remove_edge(s[i], s[j]);

        if (count_ksets(g, a, A + r) == A + r) {
            pair.attempts = attempt + 1;
            pair.H = prefix(g, n);
            pair.H_prime = std::move(g);
            return pair;
        }
        last = count_ksets(prefix(g, n), a, A) > A ? Rejection::u2 : Rejection::u1;
        (last == Rejection::u2 ? pair.rejected_u2 : pair.rejected_u1)++;
    }
    throw CouplingFailure(max_attempts, last);
}

bool PairVerification::ok() const { return planted_disjoint && planted_independent && layout_ok && induced_ok; }

PairVerification verify_pair(const CoupledPair& pair) {
    PairVerification v;
    std::vector<Vertex> all;
    v.planted_independent = pair.planted.size() == pair.A + pair.r;
    v.layout_ok = v.planted_independent;
    for (std::size_t i = 0; i < pair.planted.size(); ++i) {
        const auto& s = pair.planted[i];
        all.insert(all.end(), s.begin(), s.end());
        v.planted_independent = v.planted_independent && s.size() == pair.a && graph::is_independent(pair.H_prime, s);
        const bool outside = i < pair.r;
        for (Vertex u : s) v.layout_ok = v.layout_ok && (u < pair.n_prime) && ((u >= pair.n) == outside);
    }
    std::sort(all.begin(), all.end());
    v.planted_disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
    v.induced_ok = pair.H_prime.order() == pair.n_prime && prefix(pair.H_prime, pair.n) == pair.H;
    v.count_H = graph::count_independent_ksets(pair.H, pair.a).count;
    v.count_H_prime = graph::count_independent_ksets(pair.H_prime, pair.a).count;
    return v;
}

std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    rng::CounterStream stream(seed, 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[stream.next_below(i)]);
    return perm;
}

Graph permute_labels(const Graph& g, std::uint64_t seed) {
    const auto perm = random_permutation(g.order(), seed);
    Graph out(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) out.add_edge(perm[u], perm[v]);
    return out;
}

std::string to_string(GapStatus s) {
    switch (s) {
        case GapStatus::holds: return "holds";
        case GapStatus::violated: return "violated";
        case GapStatus::undecided: return "undecided";
    }
    return "?";
}

ChiGapReport verify_chi_gap(const CoupledPair& pair, const graph::SolveBudget& budget) {
    const auto h = graph::chromatic_number(pair.H, budget);
    const auto hp = graph::chromatic_number(pair.H_prime, budget);
    ChiGapReport rep;
    rep.chi_H_lower = h.lower;
    rep.chi_H_upper = h.upper;
    rep.chi_H_prime_lower = hp.lower;
    rep.chi_H_prime_upper = hp.upper;
    rep.complete = h.complete && hp.complete;
    if (hp.upper <= h.lower + pair.r)
        rep.gap = GapStatus::holds;
    else if (hp.lower > h.upper + pair.r)
        rep.gap = GapStatus::violated;
    rep.monotone = hp.lower >= h.upper;

    std::vector<int> witness(pair.n_prime, -1);
    for (std::size_t v = 0; v < pair.n; ++v) witness[v] = h.colouring[v];
    for (std::size_t i = 0; i < pair.r; ++i)
        for (Vertex v : pair.planted[i]) witness[v] = static_cast<int>(h.upper + i);
    rep.witness_proper = graph::is_proper_colouring(pair.H_prime, witness);
    return rep;
}

}  // namespace chilab::coupling
