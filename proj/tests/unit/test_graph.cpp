#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "chilab/coloring.hpp"
#include "chilab/errors.hpp"
#include "chilab/graph.hpp"
#include "chilab/graph_io.hpp"
#include "chilab/independent_sets.hpp"
#include "chilab/philox.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chilab;
using namespace chilab::graph;

TEST_CASE("Philox4x32-10 known answers") {
    using rng::philox4x32;
    CHECK(philox4x32({0, 0, 0, 0}, {0, 0}) == rng::PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          rng::PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          rng::PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("graph construction and invariants") {
    CHECK_THROWS_AS(Graph(0), DomainError);
    CHECK_THROWS_AS(Graph(16385), DomainError);
    Graph g(70);
    g.add_edge(3, 65);
    CHECK(g.adjacent(65, 3));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(4, 4), DomainError);
    const Graph c = g.complement();
    CHECK(c.edge_count() == 70 * 69 / 2 - 1);
    for (Vertex v = 0; v < 70; ++v) {
        CHECK_FALSE(c.adjacent(v, v));
        CHECK((c.row(v)[1] >> 6) == 0);  // padding bits clear
    }
    CHECK(c.complement() == g);
}

TEST_CASE("G(n,1/2) sampling") {
    const Graph one = sample_gnp_half(1, 5, 0);
    CHECK(one.order() == 1);
    CHECK(one.edge_count() == 0);
    CHECK(sample_gnp_half(300, 9, 2).hash() == sample_gnp_half(300, 9, 2).hash());
    CHECK(sample_gnp_half(300, 9, 2).hash() != sample_gnp_half(300, 9, 3).hash());
    CHECK_THROWS_AS(sample_gnp_half(0, 1, 1), DomainError);

    const Graph g = sample_gnp_half(100, 11, 4);
    for (Vertex u = 0; u < 100; ++u)
        for (Vertex v = u + 1; v < 100; ++v) CHECK(g.adjacent(u, v) == sampled_edge(11, 4, edge_index(100, u, v)));
}

TEST_CASE("G(1000,1/2) edge density within a 6 sigma window") {
    std::uint64_t edges = 0;
    for (std::uint64_t s = 0; s < 200; ++s) edges += sample_gnp_half(1000, 2024, s).edge_count();
    const double trials = 200.0 * 1000 * 999 / 2;
    const double density = static_cast<double>(edges) / trials;
    CHECK(std::fabs(density - 0.5) < 6 * 0.5 / std::sqrt(trials));
    CHECK(std::fabs(density - 0.5) < 0.003);
}

TEST_CASE("k-set counts against subset enumeration") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 14;
        const double p = seed % 3 == 0 ? 0.3 : 0.5;
        const Graph g = oracle::random_graph(n, seed, p);
        for (std::size_t k = 0; k <= n; ++k) {
            CAPTURE(seed);
            CAPTURE(k);
            CHECK(count_independent_ksets(g, k).count == oracle::count_ksets(g, k));
        }
        CHECK(independence_number(g) == oracle::alpha(g));
    }
}

TEST_CASE("k-set counts: trivial sizes and Petersen") {
    const Graph g = sample_gnp_half(57, 3, 0);
    CHECK(count_independent_ksets(g, 0).count == 1);
    CHECK(count_independent_ksets(g, 1).count == 57);
    CHECK(count_independent_ksets(g, 2).count == 57 * 56 / 2 - g.edge_count());
    CHECK(count_independent_ksets(g, 58).count == 0);
    const Graph p = petersen_graph();
    CHECK(oracle::count_ksets(p, 4) == 5);
    CHECK(count_independent_ksets(p, 4).count == 5);
    CHECK(independence_number(p) == 4);
}

TEST_CASE("enumeration lists exactly the independent sets") {
    const Graph g = sample_gnp_half(30, 8, 1);
    CountOptions opt;
    opt.enumerate = true;
    const auto rep = count_independent_ksets(g, 5, opt);
    REQUIRE(rep.sets.has_value());
    CHECK(rep.sets->size() == rep.count);
    for (const auto& s : *rep.sets) {
        CHECK(s.size() == 5);
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(is_independent(g, s));
    }
    opt.cap = rep.count - 1;
    const auto capped = count_independent_ksets(g, 5, opt);
    CHECK(capped.cap_exceeded);
    CHECK_FALSE(capped.sets.has_value());
    CHECK(capped.count == rep.count);
    CHECK_THROWS_AS(all_disjoint(capped), DomainError);
}

TEST_CASE("early stop reports a lower bound") {
    const Graph g = sample_gnp_half(40, 2, 0);
    CountOptions opt;
    opt.stop_above = 3;
    const auto rep = count_independent_ksets(g, 3, opt);
    CHECK(rep.stopped_early);
    CHECK(rep.count == 4);
}

TEST_CASE("all_disjoint") {
    IndependentSetReport r;
    r.sets = std::vector<VertexSet>{};
    CHECK(all_disjoint(r));
    r.sets->push_back({1, 2, 3});
    CHECK(all_disjoint(r));
    r.sets->push_back({3, 4, 5});
    CHECK_FALSE(all_disjoint(r));
    r.sets->back() = {4, 5, 6};
    CHECK(all_disjoint(r));
}

TEST_CASE("event E on G(40,1/2) against direct pair enumeration and the first moment") {
    const std::size_t n = 40, k = 8;
    CountOptions opt;
    opt.enumerate = true;
    std::size_t samples_with_pairs = 0, e_holds = 0, intersecting_samples = 0;
    double pairs_total = 0;
    for (std::uint64_t s = 0; s < 500; ++s) {
        const auto rep = count_independent_ksets(sample_gnp_half(n, 77, s), k, opt);
        REQUIRE(rep.sets.has_value());
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < rep.sets->size(); ++i)
            for (std::size_t j = i + 1; j < rep.sets->size(); ++j) {
                const auto& x = (*rep.sets)[i];
                const auto& y = (*rep.sets)[j];
                std::vector<Vertex> both;
                std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
                pairs += !both.empty();
            }
        samples_with_pairs += rep.sets->size() >= 2;
        intersecting_samples += pairs > 0;
        e_holds += rep.all_disjoint;
        pairs_total += static_cast<double>(pairs);
    }
    CHECK(e_holds == 500 - intersecting_samples);
    // First moment of intersecting pairs: sum over overlap t of
    // C(n,k) C(k,t) C(n-k,k-t) 2^{-(2 C(k,2) - C(t,2))} / 2.
    double expected = 0;
    auto lc = [](double a, double b) { return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1); };
    for (std::size_t t = 1; t < k; ++t) {
        const double l = lc(n, k) + lc(k, t) + lc(n - k, k - t) -
                         std::log(2.0) * (2.0 * k * (k - 1) / 2 - t * (t - 1) / 2.0);
        expected += std::exp(l) / 2;
    }
    const double mean = pairs_total / 500;
    CHECK(mean < 3 * expected);
    CHECK(mean > expected / 3);
    CHECK(samples_with_pairs > 0);
}

TEST_CASE("max clique and independence number") {
    CHECK(independence_number(complete_graph(9)) == 1);
    CHECK(independence_number(cycle_graph(5)) == 2);
    CHECK(independence_number(Graph(6)) == 6);
    CHECK(max_clique(complete_graph(12)).vertices.size() == 12);
    const auto mis = max_independent_set(petersen_graph());
    CHECK(is_independent(petersen_graph(), mis.vertices));
    CHECK(mis.complete);
    const Graph g = sample_gnp_half(200, 1, 1);
    const auto big = max_independent_set(g);
    CHECK(big.complete);
    CHECK(is_independent(g, big.vertices));
    CHECK(count_independent_ksets(g, big.vertices.size() + 1).count == 0);
}

TEST_CASE("independence number is the largest k with a k-set") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = oracle::random_graph(5 + seed % 10, seed + 1000);
        const std::size_t a = independence_number(g);
        CHECK(count_independent_ksets(g, a).count > 0);
        CHECK(count_independent_ksets(g, a + 1).count == 0);
    }
}

TEST_CASE("chromatic number of classical graphs") {
    CHECK(chromatic_number(Graph(7)).value() == 1);
    CHECK(chromatic_number(complete_graph(6)).value() == 6);
    CHECK(chromatic_number(cycle_graph(5)).value() == 3);
    CHECK(chromatic_number(cycle_graph(8)).value() == 2);
    CHECK(chromatic_number(petersen_graph()).value() == 3);
    CHECK(oracle::chromatic(petersen_graph()) == 3);
    CHECK(chromatic_number(Graph(1)).value() == 1);
}

TEST_CASE("chromatic number against brute force") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t n = 1 + seed % 9;
        const Graph g = oracle::random_graph(n, seed + 500, seed % 2 ? 0.5 : 0.7);
        const auto res = chromatic_number(g);
        CAPTURE(seed);
        REQUIRE(res.complete);
        CHECK(res.value() == oracle::chromatic(g));
        CHECK(is_proper_colouring(g, res.colouring));
        CHECK(res.value() * independence_number(g) >= n);
    }
}

TEST_CASE("chromatic number is monotone under induced subgraphs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = sample_gnp_half(24, seed, 0);
        rng::CounterStream s(seed, 1);
        std::vector<Vertex> subset;
        for (Vertex v = 0; v < 24; ++v)
            if (s.next_below(2)) subset.push_back(v);
        if (subset.empty()) subset.push_back(0);
        CHECK(chromatic_number(g.induced(subset)).value() <= chromatic_number(g).value());
    }
}

TEST_CASE("budget exhaustion yields a certified bracket") {
    const Graph g = sample_gnp_half(70, 4, 0);
    const auto res = chromatic_number(g, SolveBudget::nodes(50));
    CHECK_FALSE(res.complete);
    CHECK(res.lower <= res.upper);
    CHECK(is_proper_colouring(g, res.colouring));
    CHECK_THROWS_AS(res.value(), DomainError);
    const auto again = chromatic_number(g, SolveBudget::nodes(50));
    CHECK(again.nodes == res.nodes);
    CHECK(again.upper == res.upper);
}

TEST_CASE("greedy DSATUR is a proper colouring") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Graph g = sample_gnp_half(90, s, 0);
        CHECK(is_proper_colouring(g, dsatur_greedy(g)));
    }
}

TEST_CASE("binary and DIMACS round trips") {
    for (std::size_t n : {1u, 7u, 8u, 64u, 65u, 130u}) {
        const Graph g = sample_gnp_half(n, 12, n);
        std::stringstream bin;
        write_binary(bin, g);
        CHECK(read_binary(bin) == g);
        std::stringstream txt;
        write_dimacs(txt, g, "round trip");
        CHECK(read_dimacs(txt) == g);
    }
    std::stringstream bad("NOTAGRAPH");
    CHECK_THROWS_AS(read_binary(bad), DomainError);
}

TEST_CASE("binary layout is upper triangular, row major, LSB first") {
    Graph g(4);
    g.add_edge(0, 1);  // edge index 0
    g.add_edge(2, 3);  // edge index 5
    std::stringstream bin;
    write_binary(bin, g);
    const std::string s = bin.str();
    REQUIRE(s.size() == 8 + 8 + 1);
    CHECK(s.substr(0, 8) == "CHIGRAPH");
    CHECK(static_cast<unsigned char>(s[8]) == 4);
    CHECK(static_cast<unsigned char>(s[16]) == 0b100001);
}
