#pragma once

// Dense undirected graph stored as a symmetric bit matrix: one row of
// ceil(n/64) words per vertex, zero diagonal, zero padding bits.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace chilab::graph {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 16384;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) noexcept { return (n + kWordBits - 1) / kWordBits; }

class Graph {
  public:
    /// Edgeless graph on n vertices; throws DomainError outside [1, 16384].
    explicit Graph(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (rows_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1u;
    }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v) noexcept;

    std::span<const Word> row(Vertex v) const noexcept { return {rows_.data() + v * words_, words_}; }

    std::size_t degree(Vertex v) const noexcept;
    std::size_t edge_count() const noexcept;

    Graph complement() const;
    /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const;

    /// FNV-1a over the row words; stable across platforms.
    std::uint64_t hash() const noexcept;

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::size_t n_;
    std::size_t words_;
    std::vector<Word> rows_;
};

/// Index of edge {u, v}, u < v, in row-major upper-triangular order.
constexpr std::uint64_t edge_index(std::uint64_t n, std::uint64_t u, std::uint64_t v) noexcept {
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

/// G(n, 1/2): edge e is bit e of the Philox stream keyed by (seed, stream).
Graph sample_gnp_half(std::size_t n, std::uint64_t seed, std::uint64_t stream);

/// Whether edge index e is present in the G(n, 1/2) draw for (seed, stream).
bool sampled_edge(std::uint64_t seed, std::uint64_t stream, std::uint64_t e) noexcept;

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();

/// Proper colouring check: colour[v] >= 0 for every v, adjacent vertices differ.
bool is_proper_colouring(const Graph& g, std::span<const int> colour);

bool is_independent(const Graph& g, std::span<const Vertex> vertices);

}  // namespace chilab::graph
