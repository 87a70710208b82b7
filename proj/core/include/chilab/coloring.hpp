#pragma once

#include <cstdint>
#include <vector>

#include "chilab/graph.hpp"
#include "chilab/solve_budget.hpp"

namespace chilab::graph {

/// Exact chromatic number, or a certified bracket when the budget runs out.
struct ChromaticResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool complete = false;
    std::uint64_t nodes = 0;
    /// A proper colouring using `upper` colours.
    std::vector<int> colouring;

    std::size_t value() const;  ///< DomainError unless complete
};

/// Greedy DSATUR colouring; saturation ties go to the most uncoloured
/// neighbours, then to the lowest index.
std::vector<int> dsatur_greedy(const Graph& g);

/// DSATUR branch and bound seeded with a maximum-clique lower bound.
ChromaticResult chromatic_number(const Graph& g, const SolveBudget& budget = {});

}  // namespace chilab::graph
