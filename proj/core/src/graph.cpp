#include "chilab/graph.hpp"

#include <string>

#include "chilab/errors.hpp"
#include "chilab/philox.hpp"

namespace chilab::graph {

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)) {
    if (n < 1 || n > kMaxVertices)
        throw DomainError("graph order must be in [1, 16384], got " + std::to_string(n));
    rows_.assign(n_ * words_, 0);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw DomainError("self loops are not allowed");
    rows_[u * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
    rows_[v * words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
}

void Graph::remove_edge(Vertex u, Vertex v) noexcept {
    rows_[u * words_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    rows_[v * words_ + u / kWordBits] &= ~(Word{1} << (u % kWordBits));
}

std::size_t Graph::degree(Vertex v) const noexcept {
    std::size_t d = 0;
    for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
}

std::size_t Graph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (Word w : rows_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
}

Graph Graph::complement() const {
    Graph out(n_);
    for (std::size_t v = 0; v < n_; ++v) {
        for (std::size_t w = 0; w < words_; ++w) out.rows_[v * words_ + w] = ~rows_[v * words_ + w];
        out.rows_[v * words_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
        if (const std::size_t tail = n_ % kWordBits; tail != 0)
            out.rows_[v * words_ + words_ - 1] &= (Word{1} << tail) - 1;
    }
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    Graph out(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

std::uint64_t Graph::hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    mix(n_);
    for (Word w : rows_) mix(w);
    return h;
}

bool sampled_edge(std::uint64_t seed, std::uint64_t stream, std::uint64_t e) noexcept {
    const auto b = rng::block(seed, stream, e / 128);
    return (b[(e / 32) % 4] >> (e % 32)) & 1u;
}

Graph sample_gnp_half(std::size_t n, std::uint64_t seed, std::uint64_t stream) {
    Graph g(n);
    std::uint64_t e = 0;
    std::uint64_t cached_block = ~std::uint64_t{0};
    rng::PhiloxCounter bits{};
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v, ++e) {
            if (e / 128 != cached_block) {
                cached_block = e / 128;
                bits = rng::block(seed, stream, cached_block);
            }
            if ((bits[(e / 32) % 4] >> (e % 32)) & 1u)
                g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v)
        g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

bool is_proper_colouring(const Graph& g, std::span<const int> colour) {
    if (colour.size() != g.order()) return false;
    for (std::size_t u = 0; u < g.order(); ++u) {
        if (colour[u] < 0) return false;
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) && colour[u] == colour[v])
                return false;
    }
    return true;
}

bool is_independent(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

}  // namespace chilab::graph
