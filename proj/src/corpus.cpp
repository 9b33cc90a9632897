#include "pathideal/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "pathideal/report.hpp"

namespace pathideal {

namespace {

Graph graph_from_edge_mask(int n, std::uint32_t mask) {
    Graph g(n);
    while (mask) {
        int k = std::countr_zero(mask);
        mask &= mask - 1;
        int v = 1;
        while ((v + 1) * v / 2 <= k) ++v;
        g.add_edge(k - v * (v - 1) / 2, v);
    }
    return g;
}

} // namespace

std::vector<Graph> enumerate_graph_classes(int n, const std::function<bool(const Graph&)>& keep) {
    if (n < 0 || n > 8)
        throw std::invalid_argument("class enumeration supports n <= 8");
    if (n == 0) {
        std::vector<Graph> out;
        Graph g(0);
        if (!keep || keep(g)) out.push_back(g);
        return out;
    }
    const int m = n * (n - 1) / 2;
    // one bit-relabeling table per vertex permutation: edge bit k -> image bit
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<std::uint8_t>> edge_maps;
    do {
        std::vector<std::uint8_t> map(static_cast<std::size_t>(m));
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
                if (a > b) std::swap(a, b);
                map[static_cast<std::size_t>(v * (v - 1) / 2 + u)] =
                    static_cast<std::uint8_t>(b * (b - 1) / 2 + a);
            }
        edge_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<bool> seen(1ull << m, false);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (seen[mask]) continue;
        // mask is the minimum of a fresh isomorphism class: mark its orbit
        for (const auto& map : edge_maps) {
            std::uint32_t image = 0;
            std::uint32_t bits = mask;
            while (bits) {
                int k = std::countr_zero(bits);
                bits &= bits - 1;
                image |= 1u << map[static_cast<std::size_t>(k)];
            }
            seen[image] = true;
        }
        Graph g = graph_from_edge_mask(n, mask);
        if (!keep || keep(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> generate_all_graphs(int n) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("built-in generation is capped at n <= 7; ingest larger corpora from graph6 files");
    return enumerate_graph_classes(n, nullptr);
}

bool CorpusRecord::has_failed_verdict() const {
    for (const auto& c : claims)
        if (c.verdict == Verdict::failed) return true;
    return false;
}

namespace {

CorpusRecord analyze_one(const Graph& g, const RunnerConfig& cfg, const BettiCache* cache) {
    CorpusRecord rec;
    rec.graph6 = write_graph6(g);
    rec.n = g.order();
    try {
        GraphContext ctx(g, cfg.field, cfg.engine_cap, cfg.faults);
        if (cache) {
            const std::string field_name = cfg.field.name();
            ctx.cache_lookup = [&, field_name](int t, std::vector<std::array<long long, 3>>& triples) {
                auto it = cache->entries.find({rec.graph6, t, field_name});
                if (it == cache->entries.end()) return false;
                triples = it->second;
                return true;
            };
        }
        rec.props = ctx.props();
        rec.claims = evaluate_claims(ctx, cfg.claims, cfg.t_max);
        for (int t = 2; t <= cfg.t_max; ++t) rec.ideals.push_back(ctx.summary(t));
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    return rec;
}

} // namespace

RunResult run_corpus(const std::vector<Graph>& graphs, const RunnerConfig& cfg) {
    if (cfg.t_max < 3) throw std::invalid_argument("t_max must be at least 3");
    if (cfg.jobs < 1) throw std::invalid_argument("jobs must be at least 1");

    BettiCache cache;
    bool use_cache = cfg.cache_path.has_value();
    if (use_cache) cache = BettiCache::load(*cfg.cache_path);

    std::vector<CorpusRecord> records(graphs.size());
    int jobs = cfg.jobs;
    if (static_cast<std::size_t>(jobs) > graphs.size()) jobs = static_cast<int>(graphs.size());
    if (jobs < 1) jobs = 1;
    if (jobs <= 1) {
        for (std::size_t k = 0; k < graphs.size(); ++k)
            records[k] = analyze_one(graphs[k], cfg, use_cache ? &cache : nullptr);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t k = next.fetch_add(1);
                if (k >= graphs.size()) break;
                records[k] = analyze_one(graphs[k], cfg, use_cache ? &cache : nullptr);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // single writer after the parallel phase; sorted keys keep the file
    // deterministic; fault-injected runs never persist their mutated tables
    if (use_cache && cfg.faults.empty()) {
        for (const auto& rec : records)
            for (const auto& s : rec.ideals)
                if (s.betti_computed && s.engine_error.empty())
                    cache.entries[{rec.graph6, s.t, cfg.field.name()}] = s.betti;
        cache.save(*cfg.cache_path);
    }

    RunResult out;
    out.records = std::move(records);
    out.summary.graphs = static_cast<long>(out.records.size());
    for (auto id : cfg.claims) out.summary.per_claim[id]; // stable key set
    for (const auto& rec : out.records) {
        if (rec.has_failed_verdict()) ++out.summary.failed_records;
        for (const auto& c : rec.claims) {
            auto& tally = out.summary.per_claim[c.claim];
            switch (c.verdict) {
                case Verdict::holds: ++tally.holds; break;
                case Verdict::vacuous: ++tally.vacuous; break;
                case Verdict::failed: ++tally.failed; break;
            }
        }
    }
    return out;
}

} // namespace pathideal
