#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace chilab::graph {

/// Limits for an exact solve. Node limits make exhaustion reproducible;
/// the wall-clock limit is a safety net.
struct SolveBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> wall;

    static SolveBudget unlimited() { return {}; }
    static SolveBudget nodes(std::uint64_t n) { return {n, std::nullopt}; }
    static SolveBudget millis(std::int64_t ms) { return {std::nullopt, std::chrono::milliseconds(ms)}; }
};

class BudgetTracker {
  public:
    explicit BudgetTracker(const SolveBudget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    /// Counts one node; returns true once the budget is spent.
    bool tick() {
        ++nodes_;
        if (exhausted_) return true;
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes) exhausted_ = true;
        if (budget_.wall && (nodes_ & 1023) == 0 &&
            std::chrono::steady_clock::now() - start_ > *budget_.wall)
            exhausted_ = true;
        return exhausted_;
    }

    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

  private:
    SolveBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace chilab::graph
