#include "pathideal/props.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pathideal {

bool is_gap_free(const Graph& g) {
    auto es = g.edges();
    for (std::size_t a = 0; a < es.size(); ++a) {
        auto [u1, v1] = es[a];
        std::uint64_t e1 = (1ull << u1) | (1ull << v1);
        std::uint64_t reach = g.neighbors(u1) | g.neighbors(v1);
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            auto [u2, v2] = es[b];
            std::uint64_t e2 = (1ull << u2) | (1ull << v2);
            if (e1 & e2) continue;
            if (!(reach & e2)) return false;
        }
    }
    return true;
}

bool has_induced_c4(const Graph& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            if (g.has_edge(a, c)) continue;
            std::uint64_t common = g.neighbors(a) & g.neighbors(c);
            // two non-adjacent vertices in the common neighborhood close a C4
            std::uint64_t w = common;
            while (w) {
                int b = std::countr_zero(w);
                w &= w - 1;
                if (common & ~g.neighbors(b) & ~((2ull << b) - 1)) return true;
            }
        }
    }
    return false;
}

bool is_gap_free_via_complement(const Graph& g) { return !has_induced_c4(complement(g)); }

bool is_claw_free(const Graph& g) {
    int n = g.order();
    for (int c = 0; c < n; ++c) {
        std::uint64_t nb = g.neighbors(c);
        if (std::popcount(nb) < 3) continue;
        std::uint64_t w1 = nb;
        while (w1) {
            int a = std::countr_zero(w1);
            w1 &= w1 - 1;
            std::uint64_t w2 = nb & ~g.neighbors(a) & ~((2ull << a) - 1);
            while (w2) {
                int b = std::countr_zero(w2);
                w2 &= w2 - 1;
                if (nb & ~g.neighbors(a) & ~g.neighbors(b) & ~((2ull << b) - 1)) return false;
            }
        }
    }
    return true;
}

bool is_cricket_free(const Graph& g) {
    int n = g.order();
    for (int c = 0; c < n; ++c) {
        std::uint64_t nb = g.neighbors(c);
        if (std::popcount(nb) < 4) continue;
        // triangle c-d-e plus two pendants on c, all non-edges induced
        std::uint64_t wd = nb;
        while (wd) {
            int d = std::countr_zero(wd);
            wd &= wd - 1;
            std::uint64_t we = nb & g.neighbors(d) & ~((2ull << d) - 1);
            while (we) {
                int e = std::countr_zero(we);
                we &= we - 1;
                std::uint64_t pend = nb & ~g.neighbors(d) & ~g.neighbors(e) &
                                     ~(1ull << d) & ~(1ull << e);
                std::uint64_t wa = pend;
                while (wa) {
                    int a = std::countr_zero(wa);
                    wa &= wa - 1;
                    if (pend & ~g.neighbors(a) & ~((2ull << a) - 1)) return false;
                }
            }
        }
    }
    return true;
}

bool is_chordal(const Graph& g) {
    int n = g.order();
    if (n == 0) return true;
    // maximum cardinality search, filling the elimination order back to front
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> order(static_cast<std::size_t>(n), -1);
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    for (int slot = n - 1; slot >= 0; --slot) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[static_cast<std::size_t>(v)] &&
                (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        numbered[static_cast<std::size_t>(best)] = true;
        order[static_cast<std::size_t>(slot)] = best;
        pos[static_cast<std::size_t>(best)] = slot;
        std::uint64_t nb = g.neighbors(best);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (!numbered[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
        }
    }
    // Tarjan-Yannakakis: the earliest later neighbor must cover the rest
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        std::uint64_t later = 0;
        std::uint64_t nb = g.neighbors(v);
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (pos[static_cast<std::size_t>(u)] > i) later |= 1ull << u;
        }
        if (!later) continue;
        int parent = -1;
        std::uint64_t w = later;
        while (w) {
            int u = std::countr_zero(w);
            w &= w - 1;
            if (parent < 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(parent)])
                parent = u;
        }
        if ((later & ~(1ull << parent)) & ~g.neighbors(parent)) return false;
    }
    return true;
}

std::vector<std::vector<int>> induced_cycles(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    // DFS over induced paths [s, p1, ..., pk] with every vertex > s; a
    // candidate adjacent to s closes a cycle and is never extended past.
    auto dfs = [&](auto&& self, int s, std::uint64_t onpath, std::uint64_t interior_adj) -> void {
        int tip = path.back();
        std::uint64_t cand = g.neighbors(tip) & ~onpath & ~interior_adj & ~((2ull << s) - 1);
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (g.has_edge(s, w)) {
                if (path.size() >= 2 && path[1] < w) {
                    std::vector<int> cyc = path;
                    cyc.push_back(w);
                    cycles.push_back(std::move(cyc));
                }
                continue;
            }
            path.push_back(w);
            self(self, s, onpath | (1ull << w), interior_adj | g.neighbors(tip));
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        std::uint64_t nb = g.neighbors(s) & ~((2ull << s) - 1);
        while (nb) {
            int p1 = std::countr_zero(nb);
            nb &= nb - 1;
            path.assign({s, p1});
            dfs(dfs, s, (1ull << s) | (1ull << p1), 0);
        }
    }
    return cycles;
}

std::vector<int> induced_cycle_lengths(const Graph& g) {
    std::vector<int> lengths;
    for (const auto& c : induced_cycles(g)) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& seq) {
    int m = static_cast<int>(seq.size());
    if (m < 3) return false;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            bool consecutive = (b == a + 1) || (a == 0 && b == m - 1);
            if (g.has_edge(seq[static_cast<std::size_t>(a)], seq[static_cast<std::size_t>(b)]) != consecutive)
                return false;
        }
    return true;
}

PropertyFlags compute_properties(const Graph& g) {
    PropertyFlags f;
    f.gap_free = is_gap_free(g);
    f.claw_free = is_claw_free(g);
    f.cricket_free = is_cricket_free(g);
    f.chordal = is_chordal(g);
    f.complement_chordal = is_chordal(complement(g));
    return f;
}

LinearitySteps predicted_linearity_steps(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("predicted_linearity_steps needs at least one edge");
    Graph gc = complement(g);
    if (is_chordal(gc)) return LinearitySteps::inf();
    int shortest = 0;
    for (int len : induced_cycle_lengths(gc)) {
        if (len <= 3) continue;
        if (shortest == 0 || len < shortest) shortest = len;
    }
    // non-chordal guarantees an induced cycle of length >= 4
    return LinearitySteps::finite(shortest - 3);
}

} // namespace pathideal
