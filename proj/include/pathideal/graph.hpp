#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathideal/monomial.hpp"

namespace pathideal {

/// Thrown by the text parsers. `position` is a 0-based byte offset for
/// graph6 input and a 1-based line number for edge-list input.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what), position(pos) {}
};

/// graph6 short form carries the order in a single byte, so 62 is the ceiling.
inline constexpr int kMaxVertices = 62;

/// Simple undirected graph; adjacency is one 64-bit neighbor mask per vertex.
/// No loops, symmetric by construction, immutable once built in practice.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::uint64_t neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
    std::uint64_t vertex_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    int degree(int u) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // (u,v) with u < v, lexicographic

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Decodes one graph6 line (optional ">>graph6<<" header allowed).
/// Only the short form (n <= 62) is supported.
Graph parse_graph6(std::string_view line);

/// Encodes to the canonical short-form graph6 string; inverse of parse_graph6.
std::string write_graph6(const Graph& g);

/// Text format: first non-comment line "n <count>", then one "u v" edge per
/// line, 0-based; "#" starts a comment; duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

Graph complement(const Graph& g);

/// Keeps exactly the vertices in `keep`, re-indexed in ascending original order.
Graph induced_subgraph(const Graph& g, std::uint64_t keep);

/// Applies the relabeling v -> perm[v]; perm must be a permutation of [0, n).
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Vertex-set monomials of simple paths on t distinct vertices (t >= 2;
/// t = 2 gives the edges). A path, its reverse, and any other ordering of the
/// same vertex set contribute one monomial. Sorted, duplicate-free; NOT
/// divisibility-minimalized.
std::vector<SqfMonomial> enumerate_path_monomials(const Graph& g, int t);

} // namespace pathideal
