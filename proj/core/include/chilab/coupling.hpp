#pragma once

// Conditioned pair (H, H'): H' on n' = n + r*a vertices holds exactly the
// planted independent a-sets S_1..S_{A+r}; H = H'[V] with V = [0, n).
// Planted blocks: S_{r+j} = [(j-1)a, ja) for j = 1..A inside V, and
// S_i = [n + (i-1)a, n + ia) for i = 1..r outside V.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chilab/errors.hpp"
#include "chilab/graph.hpp"
#include "chilab/independent_sets.hpp"
#include "chilab/solve_budget.hpp"

namespace chilab::coupling {

using graph::Graph;
using graph::Vertex;
using graph::VertexSet;

enum class Rejection { none, u1, u2 };

std::string to_string(Rejection r);

struct CoupledPair {
    std::uint64_t n = 0;
    std::uint64_t n_prime = 0;
    std::uint64_t a = 0;
    std::uint64_t A = 0;
    std::uint64_t r = 0;
    std::uint64_t seed = 0;
    std::vector<VertexSet> planted;  ///< S_1..S_{A+r} in that order
    Graph H_prime{1};
    Graph H{1};
    std::uint64_t attempts = 0;
    std::uint64_t rejected_u1 = 0;
    std::uint64_t rejected_u2 = 0;
};

/// Rejection sampling ran out of attempts.
class CouplingFailure : public BudgetExhausted {
  public:
    CouplingFailure(std::uint64_t attempts, Rejection last);
    std::uint64_t attempts() const noexcept { return attempts_; }
    Rejection last_reason() const noexcept { return last_; }

  private:
    std::uint64_t attempts_;
    Rejection last_;
};

/// Attempt j draws every free edge of H' from Philox stream j under `seed`.
CoupledPair build_conditioned_pair(std::uint64_t n, std::uint64_t a, std::uint64_t A, std::uint64_t r,
                                   std::uint64_t seed, std::uint64_t max_attempts = 100'000);

/// Exhaustive re-verification of every CoupledPair invariant.
struct PairVerification {
    bool planted_disjoint = false;
    bool planted_independent = false;
    bool layout_ok = false;
    bool induced_ok = false;
    std::uint64_t count_H = 0;
    std::uint64_t count_H_prime = 0;
    bool ok() const;
};

PairVerification verify_pair(const CoupledPair& pair);

/// Uniform relabelling: vertex v of g becomes perm[v] of the result.
Graph permute_labels(const Graph& g, std::uint64_t seed);
std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed);

enum class GapStatus { holds, violated, undecided };

std::string to_string(GapStatus s);

struct ChiGapReport {
    std::size_t chi_H_lower = 0;
    std::size_t chi_H_upper = 0;
    std::size_t chi_H_prime_lower = 0;
    std::size_t chi_H_prime_upper = 0;
    bool complete = false;
    GapStatus gap = GapStatus::undecided;
    bool witness_proper = false;  ///< optimal colouring of H plus r fresh colours
    bool monotone = false;        ///< chi(H') >= chi(H), decided from brackets
    bool gap_ok() const { return gap == GapStatus::holds; }
};

ChiGapReport verify_chi_gap(const CoupledPair& pair, const graph::SolveBudget& budget = {});

// Comparison of H against G(n, 1/2) conditioned on {X_a = A} and E.

enum class Statistic { edge_count, chi, max_degree, triangle_count };

Statistic parse_statistic(const std::string& name);
std::string to_string(Statistic s);

/// Value of the statistic; chi uses an unbounded exact solve.
std::int64_t evaluate(Statistic s, const Graph& g);

struct Claim2Options {
    std::uint64_t seed = 1;
    double slack = 0.1;
    std::uint64_t max_attempts_per_sample = 100'000;
    std::size_t permutation_rounds = 200;
    std::size_t threads = 1;
};

struct ThresholdEvent {
    std::int64_t threshold = 0;
    bool upper = true;  ///< {statistic >= threshold} when true, else {statistic <= threshold}
    double p_H = 0;
    double p_ref = 0;
    double se = 0;  ///< binomial standard error of p_H - p_ref
    bool dominated = false;  ///< p_H <= (1 + slack) p_ref + 2 se
};

struct Claim2Report {
    std::uint64_t n = 0, a = 0, A = 0, r = 0;
    Statistic statistic = Statistic::edge_count;
    std::size_t samples = 0;
    double slack = 0;
    bool statistic_invariant = false;
    std::vector<std::int64_t> values_H;
    std::vector<std::int64_t> values_ref;
    double mean_H = 0, mean_ref = 0;
    double se_H = 0, se_ref = 0;
    double pooled_se = 0;
    double mean_gap_in_se = 0;
    double tv = 0;
    double ks = 0;
    double ks_permutation_p = 0;
    std::uint64_t ref_attempts = 0;
    double ref_acceptance = 0;
    std::uint64_t pair_attempts = 0;
    std::vector<ThresholdEvent> events;
    bool all_dominated = false;
};

/// Reference sample: rejection from G(n, 1/2) until X_a = A and the a-sets are disjoint.
struct ReferenceSample {
    Graph g{1};
    std::uint64_t attempts = 0;
};
ReferenceSample sample_reference(std::uint64_t n, std::uint64_t a, std::uint64_t A, std::uint64_t seed,
                                 std::uint64_t max_attempts);

Claim2Report claim2_experiment(std::uint64_t n, std::uint64_t a, std::uint64_t A, std::size_t samples,
                               Statistic statistic, const Claim2Options& options = {});

}  // namespace chilab::coupling
