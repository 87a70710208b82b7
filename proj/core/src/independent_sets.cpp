#include "chilab/independent_sets.hpp"

#include <algorithm>
#include <numeric>

#include "chilab/errors.hpp"

namespace chilab::graph {
namespace {

// Enumerates k-cliques of the non-adjacency relation. At each node the
// candidates are greedily partitioned into cliques of G (each holds at most
// one vertex of an independent set); vertices are branched on from the last
// class down, and a vertex in class c can complete a set only if c >= need.
class KSetCounter {
  public:
    KSetCounter(const Graph& g, std::size_t k, const CountOptions& opt)
        : g_(g), n_(g.order()), w_(g.words_per_row()), k_(k), opt_(opt) {
        free_.resize(n_ * w_);
        for (Vertex v = 0; v < n_; ++v) {
            auto row = g.row(v);
            for (std::size_t i = 0; i < w_; ++i) free_[v * w_ + i] = ~row[i];
            free_[v * w_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
            if (const std::size_t tail = n_ % kWordBits; tail != 0) free_[v * w_ + w_ - 1] &= (Word{1} << tail) - 1;
        }
        const std::size_t levels = k_ + 1;
        cand_.assign(levels * w_, 0);
        order_.assign(levels * n_, 0);
        colour_.assign(levels * n_, 0);
        scratch_.assign(2 * w_, 0);
    }

    IndependentSetReport run() {
        IndependentSetReport rep;
        rep.k = k_;
        if (k_ == 0) {
            count_ = 1;
            if (opt_.enumerate) sets_.emplace_back();
        } else if (k_ <= n_) {
            Word* p0 = cand(0);
            for (std::size_t i = 0; i < w_; ++i) p0[i] = ~Word{0};
            if (const std::size_t tail = n_ % kWordBits; tail != 0) p0[w_ - 1] = (Word{1} << tail) - 1;
            current_.reserve(k_);
            recurse(0);
        }
        rep.count = count_;
        rep.cap_exceeded = cap_exceeded_;
        rep.stopped_early = stopped_;
        if (opt_.enumerate && !cap_exceeded_) {
            std::sort(sets_.begin(), sets_.end());
            rep.sets = std::move(sets_);
            rep.all_disjoint = all_disjoint(rep);
        }
        return rep;
    }

  private:
    Word* cand(std::size_t depth) { return cand_.data() + depth * w_; }
    const Word* free_row(Vertex v) const { return free_.data() + v * w_; }

    // Writes P in class order into order/colour; returns the vertex count.
    std::size_t clique_cover(const Word* p, Vertex* order, std::uint32_t* colour) {
        Word* u = scratch_.data();
        Word* q = scratch_.data() + w_;
        std::copy(p, p + w_, u);
        std::size_t filled = 0;
        std::uint32_t cls = 0;
        for (std::size_t i0 = 0; i0 < w_; ++i0) {
            while (u[i0] != 0) {
                ++cls;
                std::copy(u + i0, u + w_, q + i0);
                for (std::size_t j = i0; j < w_; ++j) {
                    while (q[j] != 0) {
                        const auto v = static_cast<Vertex>(j * kWordBits + std::countr_zero(q[j]));
                        const Word bit = Word{1} << (v % kWordBits);
                        q[j] &= ~bit;
                        u[j] &= ~bit;
                        auto adj = g_.row(v);
                        for (std::size_t m = j; m < w_; ++m) q[m] &= adj[m];
                        order[filled] = v;
                        colour[filled] = cls;
                        ++filled;
                    }
                }
            }
        }
        return filled;
    }

    void emit(Vertex last) {
        ++count_;
        if (opt_.enumerate && !cap_exceeded_) {
            if (count_ > opt_.cap) {
                cap_exceeded_ = true;
                sets_.clear();
                sets_.shrink_to_fit();
            } else {
                VertexSet s = current_;
                s.push_back(last);
                std::sort(s.begin(), s.end());
                sets_.push_back(std::move(s));
            }
        }
        if (opt_.stop_above && count_ > *opt_.stop_above) stopped_ = true;
    }

    bool listing() const { return (opt_.enumerate && !cap_exceeded_) || opt_.stop_above.has_value(); }

    void recurse(std::size_t depth) {
        Word* p = cand(depth);
        const std::size_t need = k_ - depth;

        if (need == 1) {
            if (!listing()) {
                for (std::size_t i = 0; i < w_; ++i) count_ += static_cast<std::uint64_t>(std::popcount(p[i]));
                return;
            }
            for (std::size_t i = 0; i < w_; ++i)
                for (Word bits = p[i]; bits != 0; bits &= bits - 1) {
                    emit(static_cast<Vertex>(i * kWordBits + std::countr_zero(bits)));
                    if (stopped_) return;
                }
            return;
        }

        if (need == 2 && !listing()) {
            // Non-adjacent pairs inside P.
            for (std::size_t i = 0; i < w_; ++i)
                for (Word bits = p[i]; bits != 0; bits &= bits - 1) {
                    const auto v = static_cast<Vertex>(i * kWordBits + std::countr_zero(bits));
                    const Word* f = free_row(v);
                    const Word above = (v % kWordBits == kWordBits - 1) ? 0 : ~((Word{2} << (v % kWordBits)) - 1);
                    count_ += static_cast<std::uint64_t>(std::popcount(p[i] & f[i] & above));
                    for (std::size_t j = i + 1; j < w_; ++j) count_ += static_cast<std::uint64_t>(std::popcount(p[j] & f[j]));
                }
            return;
        }

        Vertex* order = order_.data() + depth * n_;
        std::uint32_t* colour = colour_.data() + depth * n_;
        const std::size_t size = clique_cover(p, order, colour);
        Word* q = cand(depth + 1);
        for (std::size_t idx = size; idx-- > 0;) {
            if (colour[idx] < need) return;
            const Vertex v = order[idx];
            p[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
            const Word* f = free_row(v);
            for (std::size_t j = 0; j < w_; ++j) q[j] = p[j] & f[j];
            current_.push_back(v);
            recurse(depth + 1);
            current_.pop_back();
            if (stopped_) return;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t w_;
    std::size_t k_;
    CountOptions opt_;
    std::vector<Word> free_;
    std::vector<Word> cand_;
    std::vector<Vertex> order_;
    std::vector<std::uint32_t> colour_;
    std::vector<Word> scratch_;
    VertexSet current_;
    std::vector<VertexSet> sets_;
    std::uint64_t count_ = 0;
    bool cap_exceeded_ = false;
    bool stopped_ = false;
};

// Colour-bounded maximum clique over vertices relabelled by non-increasing
// degree, so bit order equals search order.
class CliqueSolver {
  public:
    CliqueSolver(const Graph& g, const SolveBudget& budget) : n_(g.order()), w_(g.words_per_row()), tracker_(budget) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&g](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
        adj_.assign(n_ * w_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && g.adjacent(order_[i], order_[j])) adj_[i * w_ + j / kWordBits] |= Word{1} << (j % kWordBits);
    }

    CliqueResult run() {
        std::vector<Word> p(w_, ~Word{0});
        if (const std::size_t tail = n_ % kWordBits; tail != 0) p[w_ - 1] = (Word{1} << tail) - 1;
        expand(p);
        CliqueResult out;
        for (Vertex v : best_) out.vertices.push_back(order_[v]);
        std::sort(out.vertices.begin(), out.vertices.end());
        out.complete = !tracker_.exhausted();
        out.nodes = tracker_.nodes();
        return out;
    }

  private:
    void expand(std::vector<Word>& p) {
        if (tracker_.tick()) return;
        std::vector<Vertex> verts;
        std::vector<std::size_t> colour;
        std::vector<Word> u = p;
        std::vector<Word> q(w_);
        std::size_t k = 0;
        for (std::size_t i0 = 0; i0 < w_; ++i0) {
            while (u[i0] != 0) {
                ++k;
                q = u;
                for (std::size_t i = i0; i < w_; ++i) {
                    while (q[i] != 0) {
                        const auto v = static_cast<Vertex>(i * kWordBits + std::countr_zero(q[i]));
                        const Word bit = Word{1} << (v % kWordBits);
                        q[i] &= ~bit;
                        u[i] &= ~bit;
                        const Word* a = adj_.data() + v * w_;
                        for (std::size_t j = i; j < w_; ++j) q[j] &= ~a[j];
                        verts.push_back(v);
                        colour.push_back(k);
                    }
                }
            }
        }
        std::vector<Word> next(w_);
        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (current_.size() + colour[idx] <= best_.size()) return;
            const Vertex v = verts[idx];
            const Word* a = adj_.data() + v * w_;
            bool empty = true;
            for (std::size_t j = 0; j < w_; ++j) {
                next[j] = p[j] & a[j];
                empty = empty && next[j] == 0;
            }
            current_.push_back(v);
            if (empty) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            p[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
            if (tracker_.exhausted()) return;
        }
    }

    std::size_t n_;
    std::size_t w_;
    BudgetTracker tracker_;
    std::vector<Vertex> order_;
    std::vector<Word> adj_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

}  // namespace

IndependentSetReport count_independent_ksets(const Graph& g, std::size_t k, CountOptions options) {
    return KSetCounter(g, k, options).run();
}

bool all_disjoint(const IndependentSetReport& report) {
    if (!report.sets) throw DomainError("all_disjoint requires an enumerated report");
    std::vector<Vertex> seen;
    for (const auto& s : *report.sets) seen.insert(seen.end(), s.begin(), s.end());
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

CliqueResult max_clique(const Graph& g, const SolveBudget& budget) { return CliqueSolver(g, budget).run(); }

CliqueResult max_independent_set(const Graph& g, const SolveBudget& budget) {
    return max_clique(g.complement(), budget);
}

std::size_t independence_number(const Graph& g) { return max_independent_set(g).vertices.size(); }

}  // namespace chilab::graph
