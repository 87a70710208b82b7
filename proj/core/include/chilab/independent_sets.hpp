#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chilab/graph.hpp"
#include "chilab/solve_budget.hpp"

namespace chilab::graph {

using VertexSet = std::vector<Vertex>;  ///< sorted ascending

struct IndependentSetReport {
    std::size_t k = 0;
    std::uint64_t count = 0;
    /// Present only when enumeration was requested and count <= cap.
    std::optional<std::vector<VertexSet>> sets;
    bool cap_exceeded = false;
    /// The count stopped at stop_above + 1 and is a lower bound only.
    bool stopped_early = false;
    /// No two listed sets share a vertex; meaningful only when sets is present.
    bool all_disjoint = false;
};

struct CountOptions {
    bool enumerate = false;
    std::uint64_t cap = 1'000'000;
    /// Stop as soon as the count exceeds this value.
    std::optional<std::uint64_t> stop_above;
};

/// Exact number of independent k-sets (k-cliques of the complement) by
/// ordered bitset branching with a clique-cover bound.
IndependentSetReport count_independent_ksets(const Graph& g, std::size_t k, CountOptions options = {});

/// True iff the listed sets are pairwise vertex-disjoint; DomainError if sets are absent.
bool all_disjoint(const IndependentSetReport& report);

struct CliqueResult {
    VertexSet vertices;
    bool complete = true;
    std::uint64_t nodes = 0;
};

/// Maximum clique by colour-bounded branch and bound over bitsets.
CliqueResult max_clique(const Graph& g, const SolveBudget& budget = {});

/// Maximum independent set (maximum clique of the complement).
CliqueResult max_independent_set(const Graph& g, const SolveBudget& budget = {});

std::size_t independence_number(const Graph& g);

}  // namespace chilab::graph
