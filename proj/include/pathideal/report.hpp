#pragma once

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "pathideal/corpus.hpp"

namespace pathideal {

/// Key order is fixed so reports are byte-identical across runs.
using Json = nlohmann::ordered_json;

Json report_json(const RunResult& result, const RunnerConfig& cfg);
std::string render_report(const RunResult& result, const RunnerConfig& cfg);

/// JSONL Betti cache, keyed by (graph6, t, field name). Entries written by a
/// different tool version are ignored on load.
struct BettiCache {
    std::map<std::tuple<std::string, int, std::string>, std::vector<std::array<long long, 3>>> entries;

    static BettiCache load(const std::string& path); // missing file -> empty cache
    void save(const std::string& path) const;        // sorted by key, one JSON object per line
};

} // namespace pathideal
