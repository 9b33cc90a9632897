#include "pathideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace pathideal {

std::string render(SqfMonomial m) {
    if (m.is_one()) return "1";
    std::string out;
    std::uint64_t s = m.support;
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(v);
    }
    return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [0, 62], got " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    return u != v && (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= 1ull << v;
    adj_[static_cast<std::size_t>(v)] |= 1ull << u;
}

int Graph::degree(int u) const { return std::popcount(adj_[static_cast<std::size_t>(u)]); }

int Graph::edge_count() const {
    int twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

// graph6 packs the upper triangle column-major -- bit k encodes the pair
// (u, v), u < v, with k = v(v-1)/2 + u -- six bits per byte, high bit first,
// each byte offset by 63.
namespace {
constexpr int kG6Offset = 63;

int g6_body_bytes(int n) { return (n * (n - 1) / 2 + 5) / 6; }
} // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) {
        line.remove_prefix(header.size());
        base = header.size();
    }
    if (line.empty()) throw ParseError("empty graph6 string", base);
    unsigned char first = static_cast<unsigned char>(line[0]);
    if (first == 126)
        throw ParseError("long-form graph6 (n > 62) is not supported", base);
    if (first < kG6Offset || first > 126)
        throw ParseError("malformed graph6 length byte", base);
    int n = first - kG6Offset;
    int body = g6_body_bytes(n);
    if (static_cast<int>(line.size()) - 1 < body)
        throw ParseError("graph6 body truncated: expected " + std::to_string(body) +
                             " bytes after the length byte",
                         base + line.size());
    if (static_cast<int>(line.size()) - 1 > body)
        throw ParseError("trailing garbage after graph6 body", base + 1 + body);

    Graph g(n);
    int k = 0;
    for (int b = 0; b < body; ++b) {
        unsigned char c = static_cast<unsigned char>(line[static_cast<std::size_t>(1 + b)]);
        if (c < kG6Offset || c > 126)
            throw ParseError("graph6 body byte out of range", base + 1 + b);
        int bits = c - kG6Offset;
        for (int s = 5; s >= 0 && k < n * (n - 1) / 2; --s, ++k) {
            if (!((bits >> s) & 1)) continue;
            // invert k = v(v-1)/2 + u
            int v = 1;
            while ((v + 1) * v / 2 <= k) ++v;
            int u = k - v * (v - 1) / 2;
            g.add_edge(u, v);
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    if (n > kMaxVertices) throw std::invalid_argument("graph6 supports at most 62 vertices");
    std::string out;
    out += static_cast<char>(n + kG6Offset);
    int body = g6_body_bytes(n);
    std::vector<int> bytes(static_cast<std::size_t>(body), 0);
    for (auto [u, v] : g.edges()) {
        int k = v * (v - 1) / 2 + u;
        bytes[static_cast<std::size_t>(k / 6)] |= 1 << (5 - k % 6);
    }
    for (int b : bytes) out += static_cast<char>(b + kG6Offset);
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    bool have_header = false;
    Graph g;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (line.empty()) continue;

        if (!have_header) {
            std::istringstream hs{std::string(line)};
            std::string tag;
            int n = -1;
            if (!(hs >> tag >> n) || tag != "n" || n < 0 || (hs >> tag))
                throw ParseError("expected header line \"n <count>\"", lineno);
            if (n > kMaxVertices) throw ParseError("vertex count exceeds 62", lineno);
            g = Graph(n);
            have_header = true;
            continue;
        }
        std::istringstream es{std::string(line)};
        int u = -1, v = -1;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra))
            throw ParseError("unparsable edge line", lineno);
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
            throw ParseError("vertex index out of range", lineno);
        if (u == v) throw ParseError("loop edge not allowed", lineno);
        g.add_edge(u, v); // duplicates collapse
    }
    if (!have_header) throw ParseError("missing header line \"n <count>\"", lineno);
    return g;
}

Graph complement(const Graph& g) {
    Graph out(g.order());
    std::uint64_t all = g.vertex_mask();
    for (int u = 0; u < g.order(); ++u) {
        std::uint64_t row = all & ~g.neighbors(u) & ~(1ull << u);
        std::uint64_t higher = row >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            higher &= higher - 1;
            out.add_edge(u, v);
        }
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep) {
    keep &= g.vertex_mask();
    std::vector<int> verts;
    std::uint64_t w = keep;
    while (w) {
        verts.push_back(std::countr_zero(w));
        w &= w - 1;
    }
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size mismatch");
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<SqfMonomial> enumerate_path_monomials(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("path monomials need t >= 2");
    std::vector<std::uint64_t> masks;
    if (t <= g.order()) {
        // DFS over simple vertex sequences; dedupe by vertex-set mask.
        std::vector<int> stack;
        auto dfs = [&](auto&& self, int last, std::uint64_t used, int depth) -> void {
            if (depth == t) {
                masks.push_back(used);
                return;
            }
            std::uint64_t cand = g.neighbors(last) & ~used;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                self(self, v, used | (1ull << v), depth + 1);
            }
        };
        for (int s = 0; s < g.order(); ++s) dfs(dfs, s, 1ull << s, 1);
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    }
    std::vector<SqfMonomial> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(SqfMonomial(m));
    return out;
}

} // namespace pathideal
