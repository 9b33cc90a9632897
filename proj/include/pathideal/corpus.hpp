#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pathideal/claims.hpp"
#include "pathideal/graph.hpp"

namespace pathideal {

/// One representative per isomorphism class of simple graphs on n vertices,
/// n <= 7, in deterministic order (ascending minimal edge mask). Counts:
/// 1, 1, 2, 4, 11, 34, 156, 1044 for n = 0..7.
std::vector<Graph> generate_all_graphs(int n);

/// Same enumeration up to n = 8, emitting only classes whose representative
/// satisfies `keep` (must be isomorphism-invariant). Dedup is by marking each
/// new class's whole permutation orbit of edge masks as seen.
std::vector<Graph> enumerate_graph_classes(int n, const std::function<bool(const Graph&)>& keep);

struct RunnerConfig {
    FieldSpec field = FieldSpec::gf(2);
    int t_max = 5;
    int jobs = 1;
    int engine_cap = kDefaultEngineCap;
    std::vector<ClaimId> claims{kAllClaims.begin(), kAllClaims.end()};
    std::vector<InjectedFault> faults;
    std::optional<std::string> cache_path;
};

/// Full analysis of one corpus graph.
struct CorpusRecord {
    std::string graph6;
    int n = 0;
    PropertyFlags props;
    std::vector<IdealSummary> ideals; // t = 2..t_max
    std::vector<ClaimResult> claims;
    std::string error; // per-graph engine failure, recorded rather than fatal

    bool has_failed_verdict() const;
};

struct ClaimTally {
    long holds = 0, vacuous = 0, failed = 0;
};

struct RunSummary {
    long graphs = 0;
    long failed_records = 0;
    std::map<ClaimId, ClaimTally> per_claim;
};

struct RunResult {
    RunSummary summary;
    std::vector<CorpusRecord> records;
};

/// Evaluates every graph (in parallel when jobs > 1) and merges records in
/// input order; output is byte-identical across runs and parallelism levels.
RunResult run_corpus(const std::vector<Graph>& graphs, const RunnerConfig& cfg);

} // namespace pathideal
