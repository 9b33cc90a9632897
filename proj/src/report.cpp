#include "pathideal/report.hpp"

#include <fstream>

#include "pathideal/version.hpp"

namespace pathideal {

namespace {

Json props_json(const PropertyFlags& p) {
    Json j;
    j["gap_free"] = p.gap_free;
    j["claw_free"] = p.claw_free;
    j["cricket_free"] = p.cricket_free;
    j["chordal"] = p.chordal;
    j["complement_chordal"] = p.complement_chordal;
    return j;
}

Json ideal_json(const IdealSummary& s) {
    Json j;
    j["t"] = s.t;
    j["zero"] = s.ideal.is_zero();
    j["gens"] = s.ideal.generator_count();
    j["degrees"] = generated_in_degrees(s.ideal);
    if (s.betti_computed) {
        Json triples = Json::array();
        for (const auto& e : s.betti) triples.push_back({e[0], e[1], e[2]});
        j["betti"] = triples;
        j["reg"] = s.reg ? Json(*s.reg) : Json(nullptr);
        j["steps"] = s.steps ? Json(s.steps->str()) : Json(nullptr);
        j["consistent"] = s.consistent;
    } else {
        j["betti"] = nullptr;
        j["reg"] = nullptr;
        j["steps"] = nullptr;
        j["consistent"] = nullptr;
    }
    if (!s.engine_error.empty()) j["error"] = s.engine_error;
    return j;
}

Json claim_json(const ClaimResult& c) {
    Json j;
    j["claim"] = std::string(claim_name(c.claim));
    j["t"] = c.t ? Json(*c.t) : Json(nullptr);
    j["verdict"] = std::string(verdict_name(c.verdict));
    if (c.verdict == Verdict::failed) j["witness"] = c.witness;
    return j;
}

} // namespace

Json report_json(const RunResult& result, const RunnerConfig& cfg) {
    Json root;
    root["version"] = kVersion;
    root["betti_convention"] = "ideal"; // quotient tables differ by an index shift of one

    Json config;
    config["field"] = cfg.field.name();
    config["t_max"] = cfg.t_max;
    config["jobs"] = cfg.jobs;
    config["engine_cap"] = cfg.engine_cap;
    config["cache"] = cfg.cache_path ? Json(*cfg.cache_path) : Json(nullptr);
    Json claim_list = Json::array();
    for (auto id : cfg.claims) claim_list.push_back(std::string(claim_name(id)));
    config["claims"] = claim_list;
    root["config"] = config;

    Json summary;
    summary["graphs"] = result.summary.graphs;
    summary["failed_records"] = result.summary.failed_records;
    Json per_claim;
    for (const auto& [id, tally] : result.summary.per_claim) {
        Json t;
        t["holds"] = tally.holds;
        t["vacuous"] = tally.vacuous;
        t["failed"] = tally.failed;
        per_claim[std::string(claim_name(id))] = t;
    }
    summary["per_claim"] = per_claim;
    root["summary"] = summary;

    Json records = Json::array();
    for (const auto& rec : result.records) {
        Json r;
        r["graph6"] = rec.graph6;
        r["n"] = rec.n;
        r["props"] = props_json(rec.props);
        Json ideals = Json::array();
        for (const auto& s : rec.ideals) ideals.push_back(ideal_json(s));
        r["ideals"] = ideals;
        Json claims = Json::array();
        for (const auto& c : rec.claims) claims.push_back(claim_json(c));
        r["claims"] = claims;
        if (!rec.error.empty()) r["error"] = rec.error;
        records.push_back(r);
    }
    root["records"] = records;
    return root;
}

std::string render_report(const RunResult& result, const RunnerConfig& cfg) {
    return report_json(result, cfg).dump(2) + "\n";
}

BettiCache BettiCache::load(const std::string& path) {
    BettiCache cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;
        if (!j.contains("v") || j["v"] != kVersion) continue; // other engine versions never mix
        if (!j.contains("graph6") || !j.contains("t") || !j.contains("field") || !j.contains("betti"))
            continue;
        std::vector<std::array<long long, 3>> triples;
        for (const auto& e : j["betti"])
            triples.push_back({e[0].get<long long>(), e[1].get<long long>(), e[2].get<long long>()});
        cache.entries[{j["graph6"].get<std::string>(), j["t"].get<int>(),
                       j["field"].get<std::string>()}] = std::move(triples);
    }
    return cache;
}

void BettiCache::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    for (const auto& [key, triples] : entries) {
        Json j;
        j["v"] = kVersion;
        j["graph6"] = std::get<0>(key);
        j["t"] = std::get<1>(key);
        j["field"] = std::get<2>(key);
        Json b = Json::array();
        for (const auto& e : triples) b.push_back({e[0], e[1], e[2]});
        j["betti"] = b;
        out << j.dump() << "\n";
    }
}

} // namespace pathideal
