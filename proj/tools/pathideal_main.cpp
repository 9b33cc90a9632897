#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "pathideal/corpus.hpp"
#include "pathideal/report.hpp"
#include "pathideal/version.hpp"

using namespace pathideal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailedVerdicts = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        return line.compare(first, 2, "n ") == 0;
    }
    return false;
}

std::vector<Graph> load_graphs(const std::string& input, const std::string& format) {
    if (std::filesystem::exists(input)) {
        std::string text = read_file(input);
        bool edges = format == "edges" || (format == "auto" && looks_like_edge_list(text));
        if (edges) return {parse_edge_list(text)};
        std::vector<Graph> graphs;
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            try {
                graphs.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(input + ":" + std::to_string(lineno) + ": " + e.what(), e.position);
            }
        }
        if (graphs.empty()) throw std::runtime_error(input + ": no graphs found");
        return graphs;
    }
    if (format == "edges") throw std::runtime_error("edge-list input must be a file: " + input);
    return {parse_graph6(input)};
}

InjectedFault parse_fault(const std::string& spec) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    InjectedFault f;
    if (parts.size() == 5 && parts[0] == "bump") {
        f.kind = InjectedFault::Kind::bump_betti;
        f.graph6 = parts[1];
        f.t = std::stoi(parts[2]);
        f.i = std::stoi(parts[3]);
        f.j = std::stoi(parts[4]);
        return f;
    }
    if (parts.size() == 4 && parts[0] == "drop") {
        f.kind = InjectedFault::Kind::drop_generator;
        f.graph6 = parts[1];
        f.t = std::stoi(parts[2]);
        f.gen_index = std::stoi(parts[3]);
        return f;
    }
    throw std::runtime_error("bad fault spec (want bump:<g6>:<t>:<i>:<j> or drop:<g6>:<t>:<k>): " + spec);
}

std::vector<ClaimId> parse_claims(const std::string& spec) {
    if (spec == "all") return {kAllClaims.begin(), kAllClaims.end()};
    std::vector<ClaimId> out;
    std::string cur;
    std::istringstream in(spec);
    while (std::getline(in, cur, ',')) {
        auto id = parse_claim(cur);
        if (!id) throw std::runtime_error("unknown claim id: " + cur);
        out.push_back(*id);
    }
    if (out.empty()) throw std::runtime_error("empty claim list");
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int cmd_props(const std::string& input, const std::string& format) {
    for (const auto& g : load_graphs(input, format)) {
        PropertyFlags p = compute_properties(g);
        std::cout << write_graph6(g) << " gap_free=" << bool_str(p.gap_free)
                  << " claw_free=" << bool_str(p.claw_free)
                  << " cricket_free=" << bool_str(p.cricket_free)
                  << " chordal=" << bool_str(p.chordal)
                  << " complement_chordal=" << bool_str(p.complement_chordal) << "\n";
    }
    return kExitOk;
}

void print_table_line(const BettiTable& table, const MonomialIdeal& ideal) {
    for (const auto& e : table.triples())
        std::cout << "(" << e[0] << "," << e[1] << "):" << e[2] << " ";
    std::cout << "reg=" << table.regularity();
    auto degs = generated_in_degrees(ideal);
    if (degs.size() == 1) std::cout << " steps=" << linearity_steps(table, degs[0]).str();
    std::cout << "\n";
}

int cmd_betti(const std::string& input, const std::string& format, int t, const FieldSpec& field,
              int engine_cap, bool compare_fields) {
    if (t < 2) throw std::runtime_error("t must be >= 2 (2 selects the edge ideal)");
    for (const auto& g : load_graphs(input, format)) {
        std::string tag = write_graph6(g) + " t=" + std::to_string(t) + " ";
        MonomialIdeal ideal = t == 2 ? edge_ideal(g) : path_ideal(g, t);
        if (ideal.is_zero()) {
            std::cout << tag << "ZERO IDEAL\n";
            continue;
        }
        BettiOptions opts;
        opts.ambient_cap = engine_cap;
        if (compare_fields) {
            // characteristic check: GF(2) against the rationals, discrepancies
            // reported rather than assumed away
            BettiTable two = betti_hochster(ideal, FieldSpec::gf(2), opts);
            BettiTable rat = betti_hochster(ideal, FieldSpec::rationals(), opts);
            if (two.triples() == rat.triples()) {
                std::cout << tag << "FIELDS AGREE ";
                print_table_line(two, ideal);
            } else {
                std::cout << tag << "FIELDS DIFFER\n" << tag << "GF(2): ";
                print_table_line(two, ideal);
                std::cout << tag << "QQ: ";
                print_table_line(rat, ideal);
            }
            continue;
        }
        BettiTable table = betti_hochster(ideal, field, opts);
        std::cout << tag;
        print_table_line(table, ideal);
    }
    return kExitOk;
}

int cmd_verify(const std::vector<Graph>& graphs, const RunnerConfig& cfg,
               const std::string& report_path) {
    RunResult result = run_corpus(graphs, cfg);
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::trunc | std::ios::binary);
        if (!out) throw std::runtime_error("cannot write report to " + report_path);
        out << render_report(result, cfg);
    }
    std::cout << "graphs: " << result.summary.graphs << "\n";
    for (const auto& [id, tally] : result.summary.per_claim)
        std::cout << "claim " << claim_name(id) << ": holds=" << tally.holds
                  << " vacuous=" << tally.vacuous << " failed=" << tally.failed << "\n";
    std::cout << "failed records: " << result.summary.failed_records << "\n";
    if (result.summary.failed_records > 0) {
        for (const auto& rec : result.records)
            for (const auto& c : rec.claims)
                if (c.verdict == Verdict::failed)
                    std::cout << "FAILED " << claim_name(c.claim)
                              << (c.t ? " t=" + std::to_string(*c.t) : "") << " on " << rec.graph6
                              << ": " << c.witness << "\n";
        return kExitFailedVerdicts;
    }
    return kExitOk;
}

int cmd_gen(int n, bool gap_free_only, const std::string& out_path) {
    if (n > 8 || (n == 8 && !gap_free_only))
        throw std::runtime_error("gen supports n <= 7 unfiltered, n = 8 only with --gap-free");
    std::vector<Graph> graphs =
        gap_free_only ? enumerate_graph_classes(n, [](const Graph& g) { return is_gap_free(g); })
                      : enumerate_graph_classes(n, nullptr);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc | std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        out = &file;
    }
    for (const auto& g : graphs) *out << write_graph6(g) << "\n";
    std::cerr << "generated " << graphs.size() << " isomorphism classes on " << n << " vertices"
              << (gap_free_only ? " (gap-free only)" : "") << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Betti numbers, regularity and structural checks for graph edge and path ideals"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string input, format = "auto", field_str = "gf2", report_path, cache_path, config_path;
    std::string claims_str = "all";
    int t = 2, t_max = 5, gen_n = -1, engine_cap = kDefaultEngineCap;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool gap_free_only = false, compare_fields = false;
    std::vector<std::string> fault_specs;

    auto* props = app.add_subcommand("props", "print the graph-class flags, one line per graph");
    props->add_option("input", input, "graph6 string, graph6 file, or edge-list file")->required();
    props->add_option("--format", format, "auto|g6|edges")->check(CLI::IsMember({"auto", "g6", "edges"}));

    auto* betti = app.add_subcommand("betti", "print Betti triples, regularity and linear steps");
    betti->add_option("input", input, "graph6 string, graph6 file, or edge-list file")->required();
    betti->add_option("--t", t, "2 = edge ideal, >= 3 = path ideal")->required();
    betti->add_option("--format", format, "auto|g6|edges")->check(CLI::IsMember({"auto", "g6", "edges"}));
    betti->add_option("--field", field_str, "gf2 | gf<p> | qq");
    betti->add_option("--engine-cap", engine_cap, "max ambient variables for the exact engine");
    betti->add_flag("--compare", compare_fields, "compute over GF(2) and QQ, report discrepancies");

    auto* verify = app.add_subcommand("verify", "run the claim checkers over a corpus");
    verify->add_option("input", input, "graph6 string, graph6 file, or edge-list file");
    verify->add_option("--gen-n", gen_n, "generate all isomorphism classes on n vertices (n <= 7)");
    verify->add_option("--format", format, "auto|g6|edges")->check(CLI::IsMember({"auto", "g6", "edges"}));
    verify->add_option("--claims", claims_str, "all or a comma-separated claim list");
    verify->add_option("--t-max", t_max, "largest path length analyzed (>= 3)");
    verify->add_option("--field", field_str, "gf2 | gf<p> | qq");
    verify->add_option("--jobs", jobs, "parallel workers");
    verify->add_option("--engine-cap", engine_cap, "max ambient variables for the exact engine");
    verify->add_option("--cache", cache_path, "JSONL Betti cache file");
    verify->add_option("--report", report_path, "write the JSON report here");
    verify->add_option("--config", config_path, "JSON config file; explicit flags win");
    verify->add_option("--inject-fault", fault_specs,
                       "test hook: bump:<g6>:<t>:<i>:<j> or drop:<g6>:<t>:<k>");

    auto* gen = app.add_subcommand("gen", "emit one graph6 line per isomorphism class");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_flag("--gap-free", gap_free_only, "emit only gap-free classes (required for n = 8)");
    gen->add_option("-o,--output", report_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (props->parsed()) return cmd_props(input, format);
        if (betti->parsed())
            return cmd_betti(input, format, t, FieldSpec::parse(field_str), engine_cap,
                             compare_fields);
        if (gen->parsed()) return cmd_gen(gen_n, gap_free_only, report_path);

        // verify: optional JSON config supplies defaults for flags not given
        if (!config_path.empty()) {
            nlohmann::json cj = nlohmann::json::parse(read_file(config_path));
            if (verify->count("--field") == 0 && cj.contains("field"))
                field_str = cj["field"].get<std::string>();
            if (verify->count("--t-max") == 0 && cj.contains("t_max")) t_max = cj["t_max"].get<int>();
            if (verify->count("--jobs") == 0 && cj.contains("jobs")) jobs = cj["jobs"].get<int>();
            if (verify->count("--engine-cap") == 0 && cj.contains("engine_cap"))
                engine_cap = cj["engine_cap"].get<int>();
            if (verify->count("--cache") == 0 && cj.contains("cache") && !cj["cache"].is_null())
                cache_path = cj["cache"].get<std::string>();
            if (verify->count("--claims") == 0 && cj.contains("claims") && cj["claims"].is_string())
                claims_str = cj["claims"].get<std::string>();
        }
        RunnerConfig cfg;
        cfg.field = FieldSpec::parse(field_str);
        cfg.t_max = t_max;
        cfg.jobs = jobs;
        cfg.engine_cap = engine_cap;
        cfg.claims = parse_claims(claims_str);
        if (!cache_path.empty()) cfg.cache_path = cache_path;
        for (const auto& spec : fault_specs) cfg.faults.push_back(parse_fault(spec));

        std::vector<Graph> graphs;
        if (verify->count("--gen-n")) {
            graphs = generate_all_graphs(gen_n);
        } else if (!input.empty()) {
            graphs = load_graphs(input, format);
        } else {
            throw std::runtime_error("verify needs an input or --gen-n");
        }
        return cmd_verify(graphs, cfg, report_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (at position " << e.position << ")\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
