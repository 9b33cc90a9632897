#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "pathideal/graph.hpp"

namespace testsupport {

using pathideal::Graph;

inline Graph make_path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph make_cycle(int n) {
    Graph g = make_path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// K_{1,k}: vertex 0 is the center
inline Graph make_star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph make_disjoint_edges(int k) {
    Graph g(2 * k);
    for (int e = 0; e < k; ++e) g.add_edge(2 * e, 2 * e + 1);
    return g;
}

// triangle 2-3-4 with independent pendants 0 and 1 on vertex 2
inline Graph make_cricket() {
    return Graph::from_edges(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// independent path-monomial oracle: walk every ordered vertex tuple
inline std::vector<std::uint64_t> oracle_path_masks(const Graph& g, int t) {
    std::vector<std::uint64_t> found;
    std::vector<int> tuple;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(tuple.size()) == t) {
            std::uint64_t mask = 0;
            for (int v : tuple) mask |= 1ull << v;
            found.push_back(mask);
            return;
        }
        for (int v = 0; v < g.order(); ++v) {
            if (std::find(tuple.begin(), tuple.end(), v) != tuple.end()) continue;
            if (!tuple.empty() && !g.has_edge(tuple.back(), v)) continue;
            tuple.push_back(v);
            self(self);
            tuple.pop_back();
        }
    };
    rec(rec);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

// subset scan: W induces a cycle iff the induced subgraph is connected and 2-regular
inline std::vector<int> oracle_induced_cycle_lengths(const Graph& g) {
    std::vector<int> lengths;
    int n = g.order();
    for (std::uint64_t w = 0; w < (1ull << n); ++w) {
        int size = std::popcount(w);
        if (size < 3) continue;
        Graph sub = pathideal::induced_subgraph(g, w);
        bool regular2 = true;
        for (int v = 0; v < sub.order(); ++v)
            if (sub.degree(v) != 2) {
                regular2 = false;
                break;
            }
        if (!regular2) continue;
        // connectivity
        std::uint64_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= sub.neighbors(v);
            }
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == sub.vertex_mask()) lengths.push_back(size);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

inline bool oracle_chordal(const Graph& g) {
    for (int len : oracle_induced_cycle_lengths(g))
        if (len >= 4) return false;
    return true;
}

// brute-force isomorphism for small graphs
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (pathideal::relabel(a, p) == b) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

} // namespace testsupport
