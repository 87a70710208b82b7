#include "chilab/coloring.hpp"

#include <algorithm>

#include "chilab/errors.hpp"
#include "chilab/independent_sets.hpp"

namespace chilab::graph {
namespace {

// Saturation bookkeeping shared by the greedy pass and the search:
// seen[v * cap + c] counts coloured neighbours of v holding colour c.
class DsaturState {
  public:
    DsaturState(const Graph& g, std::size_t cap)
        : g_(g), n_(g.order()), cap_(cap), colour_(n_, -1), seen_(n_ * cap, 0), sat_(n_, 0), free_deg_(n_) {
        for (Vertex v = 0; v < n_; ++v) free_deg_[v] = static_cast<std::uint32_t>(g.degree(v));
    }

    // Highest saturation, then most uncoloured neighbours, then lowest index.
    Vertex select() const {
        Vertex best = 0;
        std::uint64_t best_key = 0;
        bool found = false;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] >= 0) continue;
            const std::uint64_t key = (std::uint64_t{sat_[v]} << 32) | free_deg_[v];
            if (!found || key > best_key) {
                best = v;
                best_key = key;
                found = true;
            }
        }
        return best;
    }

    bool allowed(Vertex v, std::size_t c) const { return seen_[v * cap_ + c] == 0; }

    void assign(Vertex v, std::size_t c) {
        colour_[v] = static_cast<int>(c);
        for_each_neighbour(v, [&](Vertex u) {
            if (seen_[u * cap_ + c]++ == 0) ++sat_[u];
            --free_deg_[u];
        });
    }

    void unassign(Vertex v) {
        const auto c = static_cast<std::size_t>(colour_[v]);
        colour_[v] = -1;
        for_each_neighbour(v, [&](Vertex u) {
            if (--seen_[u * cap_ + c] == 0) --sat_[u];
            ++free_deg_[u];
        });
    }

    const std::vector<int>& colours() const { return colour_; }

  private:
    template <class F>
    void for_each_neighbour(Vertex v, F&& f) const {
        auto row = g_.row(v);
        for (std::size_t i = 0; i < row.size(); ++i)
            for (Word bits = row[i]; bits != 0; bits &= bits - 1)
                f(static_cast<Vertex>(i * kWordBits + std::countr_zero(bits)));
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t cap_;
    std::vector<int> colour_;
    std::vector<std::uint32_t> seen_;
    std::vector<std::uint32_t> sat_;
    std::vector<std::uint32_t> free_deg_;
};

class ColouringSearch {
  public:
    ColouringSearch(const Graph& g, std::size_t lower, std::vector<int> incumbent, BudgetTracker& tracker)
        : g_(g), lower_(lower), tracker_(tracker), best_(std::move(incumbent)) {
        upper_ = 1 + static_cast<std::size_t>(*std::max_element(best_.begin(), best_.end()));
    }

    void run(const VertexSet& clique) {
        if (upper_ <= lower_) return;
        DsaturState state(g_, upper_);
        for (std::size_t i = 0; i < clique.size(); ++i) state.assign(clique[i], i);
        search(state, clique.size(), clique.size());
    }

    std::size_t upper() const { return upper_; }
    const std::vector<int>& best() const { return best_; }

  private:
    void search(DsaturState& state, std::size_t coloured, std::size_t used) {
        if (tracker_.tick()) return;
        if (coloured == g_.order()) {
            upper_ = used;
            best_ = state.colours();
            return;
        }
        const Vertex v = state.select();
        for (std::size_t c = 0; c < std::min(used + 1, upper_ - 1); ++c) {
            if (!state.allowed(v, c)) continue;
            state.assign(v, c);
            search(state, coloured + 1, std::max(used, c + 1));
            state.unassign(v);
            if (upper_ <= lower_ || tracker_.exhausted()) return;
        }
    }

    const Graph& g_;
    std::size_t lower_;
    BudgetTracker& tracker_;
    std::vector<int> best_;
    std::size_t upper_ = 0;
};

}  // namespace

std::size_t ChromaticResult::value() const {
    if (!complete) throw DomainError("chromatic number is only bracketed");
    return upper;
}

std::vector<int> dsatur_greedy(const Graph& g) {
    DsaturState state(g, g.order());
    for (std::size_t step = 0; step < g.order(); ++step) {
        const Vertex v = state.select();
        std::size_t c = 0;
        while (!state.allowed(v, c)) ++c;
        state.assign(v, c);
    }
    return state.colours();
}

ChromaticResult chromatic_number(const Graph& g, const SolveBudget& budget) {
    BudgetTracker tracker(budget);
    ChromaticResult out;
    const CliqueResult clique = max_clique(g, budget);
    out.lower = std::max<std::size_t>(1, clique.vertices.size());

    ColouringSearch search(g, out.lower, dsatur_greedy(g), tracker);
    if (clique.complete) search.run(clique.vertices);
    out.upper = search.upper();
    out.colouring = search.best();
    out.nodes = clique.nodes + tracker.nodes();
    out.complete = clique.complete && !tracker.exhausted();
    if (out.complete) out.lower = out.upper;
    return out;
}

}  // namespace chilab::graph
