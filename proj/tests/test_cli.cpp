#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "pathideal/graph.hpp"
#include "support.hpp"

namespace {

std::string g_binary;

struct RunOutput {
    int exit_code = -1;
    std::string out; // stdout + stderr
};

RunOutput run_cli(const std::string& args) {
    RunOutput r;
    std::string cmd = "'" + g_binary + "' " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_path(const std::string& stem) {
    return std::filesystem::temp_directory_path() / (stem + std::to_string(::getpid()));
}

} // namespace

using namespace pathideal;
using namespace testsupport;

TEST_CASE("props prints one flag line per graph") {
    auto r = run_cli("props Bw");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "Bw gap_free=true claw_free=true cricket_free=true chordal=true complement_chordal=true\n");

    auto gap = run_cli("props '" + write_graph6(make_disjoint_edges(2)) + "'");
    CHECK(gap.exit_code == 0);
    CHECK(gap.out.find("gap_free=false") != std::string::npos);

    auto bad = run_cli("props 'not graph6 at all'");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("props reads edge-list files") {
    auto path = temp_path("pathideal_edges_");
    std::ofstream(path) << "# three-path\nn 3\n0 1\n1 2\n";
    auto r = run_cli("props " + path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(write_graph6(make_path(3))) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("betti prints triples, regularity and steps") {
    auto p4 = run_cli("betti '" + write_graph6(make_path(4)) + "' --t 3");
    CHECK(p4.exit_code == 0);
    CHECK(p4.out.find("(0,3):2 (1,4):1 reg=3 steps=INF") != std::string::npos);

    auto star = run_cli("betti '" + write_graph6(make_star(3)) + "' --t 4");
    CHECK(star.exit_code == 0);
    CHECK(star.out.find("ZERO IDEAL") != std::string::npos);

    auto two = run_cli("betti '" + write_graph6(make_disjoint_edges(2)) + "' --t 2");
    CHECK(two.exit_code == 0);
    CHECK(two.out.find("(0,2):2 (1,4):1 reg=3 steps=0") != std::string::npos);

    auto qq = run_cli("betti Bw --t 2 --field qq");
    CHECK(qq.exit_code == 0);
    CHECK(qq.out.find("(0,2):3 (1,3):2 reg=2 steps=INF") != std::string::npos);

    auto cmp = run_cli("betti '" + write_graph6(make_cycle(5)) + "' --t 2 --compare");
    CHECK(cmp.exit_code == 0);
    CHECK(cmp.out.find("FIELDS AGREE (0,2):5 (1,3):5 (2,5):1 reg=3 steps=1") != std::string::npos);

    // engine refusal on a large ambient is an input error
    auto big = run_cli("betti '" + write_graph6(make_path(18)) + "' --t 2");
    CHECK(big.exit_code == 2);
    CHECK(big.out.find("cap") != std::string::npos);
}

TEST_CASE("verify over the generated n=5 corpus passes") {
    auto r = run_cli("verify --gen-n 5 --claims all");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graphs: 34") != std::string::npos);
    CHECK(r.out.find("failed records: 0") != std::string::npos);
}

TEST_CASE("verify exit codes distinguish failures from input errors") {
    CHECK(run_cli("verify missing_file.g6").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
    CHECK(run_cli("verify --gen-n 4 --t-max 2").exit_code == 2);
    CHECK(run_cli("verify --gen-n 4 --claims NOPE").exit_code == 2);
    CHECK(run_cli("totally-unknown-subcommand").exit_code == 2);

    auto c5 = write_graph6(make_cycle(5));
    auto faulty = run_cli("verify '" + c5 + "' --inject-fault bump:" + c5 + ":2:0:2");
    CHECK(faulty.exit_code == 1);
    CHECK(faulty.out.find("FAILED") != std::string::npos);

    auto dropped = run_cli("verify '" + c5 + "' --inject-fault drop:" + c5 + ":3:0");
    CHECK(dropped.exit_code == 1);
}

TEST_CASE("verify writes a schema-shaped report and honors the cache") {
    auto report_path = temp_path("pathideal_report_").string() + ".json";
    auto cache_path = temp_path("pathideal_clicache_").string() + ".jsonl";
    std::filesystem::remove(report_path);
    std::filesystem::remove(cache_path);

    auto cold = run_cli("verify --gen-n 4 --report " + report_path + " --cache " + cache_path);
    CHECK(cold.exit_code == 0);
    std::ifstream in(report_path);
    REQUIRE(in.good());
    nlohmann::json report = nlohmann::json::parse(in);
    CHECK(report.contains("version"));
    CHECK(report["summary"]["graphs"] == 11);
    CHECK(report["config"]["field"] == "GF(2)");
    in.close();

    std::string cold_bytes;
    {
        std::ifstream f(report_path, std::ios::binary);
        cold_bytes.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    auto warm = run_cli("verify --gen-n 4 --report " + report_path + " --cache " + cache_path);
    CHECK(warm.exit_code == 0);
    std::string warm_bytes;
    {
        std::ifstream f(report_path, std::ios::binary);
        warm_bytes.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    CHECK(cold_bytes == warm_bytes);
    std::filesystem::remove(report_path);
    std::filesystem::remove(cache_path);
}

TEST_CASE("config file supplies defaults and flags win") {
    auto config_path = temp_path("pathideal_config_").string() + ".json";
    std::ofstream(config_path) << R"({"field": "qq", "t_max": 4, "jobs": 1})";
    auto report_path = temp_path("pathideal_cfgreport_").string() + ".json";

    auto r = run_cli("verify --gen-n 3 --config " + config_path + " --report " + report_path);
    CHECK(r.exit_code == 0);
    nlohmann::json report;
    {
        std::ifstream f(report_path);
        report = nlohmann::json::parse(f);
    }
    CHECK(report["config"]["field"] == "QQ");
    CHECK(report["config"]["t_max"] == 4);

    auto over = run_cli("verify --gen-n 3 --config " + config_path + " --field gf2 --report " +
                        report_path);
    CHECK(over.exit_code == 0);
    {
        std::ifstream f(report_path);
        report = nlohmann::json::parse(f);
    }
    CHECK(report["config"]["field"] == "GF(2)");
    std::filesystem::remove(config_path);
    std::filesystem::remove(report_path);
}

TEST_CASE("gen emits graph6 classes that verify can ingest") {
    auto corpus_path = temp_path("pathideal_gen_").string() + ".g6";
    auto r = run_cli("gen --n 4 -o " + corpus_path);
    CHECK(r.exit_code == 0);
    std::ifstream in(corpus_path);
    std::string line;
    int count = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++count;
    CHECK(count == 11);
    in.close();
    auto v = run_cli("verify " + corpus_path);
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("graphs: 11") != std::string::npos);
    std::filesystem::remove(corpus_path);

    CHECK(run_cli("gen --n 8").exit_code == 2); // n = 8 needs --gap-free
}

int main(int argc, char** argv) {
    for (int k = 1; k < argc; ++k) {
        std::string arg = argv[k];
        if (arg.rfind("--", 0) != 0 && g_binary.empty()) g_binary = arg;
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: cli_tests <path-to-pathideal-binary>\n");
        return 1;
    }
    doctest::Context ctx;
    return ctx.run();
}
