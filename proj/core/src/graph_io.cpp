#include "chilab/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "chilab/errors.hpp"

namespace chilab::graph {

void write_binary(std::ostream& out, const Graph& g) {
    out.write(kBinaryMagic.data(), kBinaryMagic.size());
    const std::uint64_t n = g.order();
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((n >> (8 * i)) & 0xff));
    const std::uint64_t edges = n * (n - 1) / 2;
    std::vector<unsigned char> bytes((edges + 7) / 8, 0);
    std::uint64_t e = 0;
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t v = u + 1; v < n; ++v, ++e)
            if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                bytes[e / 8] |= static_cast<unsigned char>(1u << (e % 8));
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("failed writing graph");
}

Graph read_binary(std::istream& in) {
    std::array<char, 8> magic{};
    in.read(magic.data(), magic.size());
    if (!in || magic != kBinaryMagic) throw DomainError("not a chilab binary graph (bad magic)");
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i) {
        const int c = in.get();
        if (c == EOF) throw DomainError("truncated graph header");
        n |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    if (n < 1 || n > kMaxVertices) throw DomainError("graph order out of range in header");
    const std::uint64_t edges = n * (n - 1) / 2;
    std::vector<unsigned char> bytes((edges + 7) / 8, 0);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (static_cast<std::uint64_t>(in.gcount()) != bytes.size()) throw DomainError("truncated graph body");
    Graph g(n);
    std::uint64_t e = 0;
    for (std::uint64_t u = 0; u < n; ++u)
        for (std::uint64_t v = u + 1; v < n; ++v, ++e)
            if ((bytes[e / 8] >> (e % 8)) & 1u) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (edges % 8 != 0 && (bytes.back() >> (edges % 8)) != 0) throw DomainError("non-zero padding bits");
    return g;
}

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment) {
    if (!comment.empty()) out << "c " << comment << '\n';
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_dimacs(std::istream& in) {
    std::string line;
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream fields(line);
        char tag = 0;
        fields >> tag;
        if (tag == 'p') {
            std::string format;
            std::size_t m = 0;
            fields >> format >> n >> m;
            if (!fields || (format != "edge" && format != "col")) throw DomainError("bad DIMACS header: " + line);
            header = true;
        } else if (tag == 'e') {
            std::size_t u = 0;
            std::size_t v = 0;
            fields >> u >> v;
            if (!fields || !header || u < 1 || v < 1 || u > n || v > n || u == v)
                throw DomainError("bad DIMACS edge: " + line);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw DomainError("unrecognised DIMACS line: " + line);
        }
    }
    if (!header) throw DomainError("DIMACS input has no p line");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return g;
}

void save_binary(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_binary(out, g);
}

Graph load_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_binary(in);
}

}  // namespace chilab::graph
