#pragma once

// Binary layout: 8-byte magic "CHIGRAPH", n as little-endian uint64, then
// the C(n,2) upper-triangular adjacency bits in row-major order, packed
// least-significant-bit first, zero padded to a whole byte.
//
// Text layout: DIMACS "p edge n m" header and 1-based "e u v" lines.

#include <array>
#include <iosfwd>
#include <string>

#include "chilab/graph.hpp"

namespace chilab::graph {

inline constexpr std::array<char, 8> kBinaryMagic{'C', 'H', 'I', 'G', 'R', 'A', 'P', 'H'};

void write_binary(std::ostream& out, const Graph& g);
Graph read_binary(std::istream& in);

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = {});
Graph read_dimacs(std::istream& in);

void save_binary(const std::string& path, const Graph& g);
Graph load_binary(const std::string& path);

}  // namespace chilab::graph
