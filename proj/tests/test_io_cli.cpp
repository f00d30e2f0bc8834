#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "burnside/io.hpp"
#include "burnside/report.hpp"
#include "test_util.hpp"

using namespace burnside;
using testutil::data_path;
using testutil::golden_path;

namespace {

struct CliResult {
    int status;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BURNSIDE_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("group JSON loading") {
    FiniteGroup d8 = load_group(data_path("d8.json"));
    CHECK(d8.order() == 8);
    CHECK(d8.name() == "D8");
    CHECK(d8.label(1) == "r");
    // the bundled Cayley table agrees with the presentation-built copy
    FiniteGroup ref = testutil::make_d8();
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) CHECK(d8.mul(a, b) == ref.mul(a, b));

    FiniteGroup s4 = load_group(data_path("s4.json"));
    CHECK(s4.order() == 24);
    FiniteGroup a6 = load_group(data_path("a6.json"));
    CHECK(a6.order() == 360);

    CHECK_THROWS_AS(load_group("/nonexistent/file.json"), InvalidInput);
    CHECK_THROWS_AS(group_from_json(nlohmann::json{{"name", "X"}}), InvalidInput);
}

TEST_CASE("fusion spec loading resolves relative paths and pins") {
    FusionSpec spec = load_fusion_spec(data_path("fusion/d8_s4.json"));
    CHECK(spec.ambient.order() == 24);
    CHECK(spec.p == 2);
    REQUIRE(spec.sylow_members.has_value());
    CHECK(spec.sylow_members->size() == 8);
    REQUIRE(spec.labels.has_value());
    CHECK(spec.labels->size() == 8);
    REQUIRE(spec.sylow_name.has_value());
    CHECK(*spec.sylow_name == "D8");
    FusionSystem f = build_fusion(spec);
    CHECK(f.S.name() == "D8");
    CHECK(f.class_count() == 7);

    CHECK_THROWS_AS(fusion_spec_from_json(nlohmann::json{{"p", 2}}), InvalidInput);
    CHECK_THROWS_AS(labels_from_json(nlohmann::json::array({nlohmann::json::array({1})})),
                    InvalidInput);
}

TEST_CASE("CLI: marks report matches the golden file") {
    CliResult r = run_cli("marks " + data_path("d8.json"));
    CHECK(r.status == 0);
    CHECK(r.out == read_file(golden_path("marks_d8.txt")));
}

TEST_CASE("CLI: fusion report matches the golden file") {
    CliResult r = run_cli("fusion " + data_path("fusion/d8_s4.json"));
    CHECK(r.status == 0);
    CHECK(r.out == read_file(golden_path("fusion_s4.txt")));
}

TEST_CASE("CLI: alpha reports match the golden files") {
    CliResult s4 = run_cli("alpha " + data_path("fusion/d8_s4.json"));
    CHECK(s4.status == 0);
    CHECK(s4.out == read_file(golden_path("alpha_s4.txt")));
    CliResult a6 = run_cli("alpha " + data_path("fusion/d8_a6.json"));
    CHECK(a6.status == 0);
    CHECK(a6.out == read_file(golden_path("alpha_a6.txt")));
}

TEST_CASE("CLI: localized ideal listings match the golden files") {
    CliResult s4 = run_cli("ideals " + data_path("fusion/d8_s4.json") + " --localized");
    CHECK(s4.status == 0);
    CHECK(s4.out == read_file(golden_path("ideals_s4_local.txt")));
    CliResult a6 = run_cli("ideals " + data_path("fusion/d8_a6.json") + " --localized");
    CHECK(a6.status == 0);
    CHECK(a6.out == read_file(golden_path("ideals_a6_local.txt")));
}

TEST_CASE("CLI: integral ideal listing with extra primes matches the golden file") {
    CliResult r = run_cli("ideals " + data_path("fusion/d8_s4.json") + " --primes 3");
    CHECK(r.status == 0);
    CHECK(r.out == read_file(golden_path("ideals_s4_z3.txt")));
}

TEST_CASE("CLI output is deterministic across runs") {
    for (const std::string& args :
         {std::string("marks ") + data_path("d8.json"),
          std::string("alpha ") + data_path("fusion/d8_a6.json"),
          std::string("ideals ") + data_path("fusion/d8_s4.json") + " --localized --format json"}) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("CLI: JSON output parses and carries the expected structure") {
    CliResult r = run_cli("ideals " + data_path("fusion/d8_a6.json") + " --localized --format json");
    REQUIRE(r.status == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 7);  // 1 type-2 + 6 type-0
    for (const auto& e : j) {
        CHECK(e.contains("ideal"));
        CHECK(e["ideal"]["ring"] == "Z_(p)");
        CHECK(e.contains("generators"));
        CHECK(!e["generators"].empty());
    }
    CliResult m = run_cli("marks " + data_path("d8.json") + " --format json");
    REQUIRE(m.status == 0);
    nlohmann::json mj = nlohmann::json::parse(m.out);
    CHECK(mj["matrix"].size() == 8);
    CHECK(mj["matrix"][0][0] == 8);
    CHECK(mj["classes"][7] == "D8");
}

TEST_CASE("CLI: check subcommand passes on all bundled specs") {
    CliResult r = run_cli("check --all " + data_path("fusion"));
    CHECK(r.status == 0);
    CHECK(r.out.find("ok") != std::string::npos);
    // one line per spec
    int lines = 0;
    for (char ch : r.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 3);
}

TEST_CASE("CLI: ad-hoc fusion via --ambient and --sylow") {
    CliResult r = run_cli("fusion --ambient " + data_path("s4.json") + " --p 2");
    CHECK(r.status == 0);
    CHECK(r.out.find("|Cl(F)| = 7") != std::string::npos);
    CliResult r3 = run_cli("fusion --ambient " + data_path("s4.json") + " --p 3");
    CHECK(r3.status == 0);
    CHECK(r3.out.find("|Cl(F)| = 2") != std::string::npos);
}

TEST_CASE("CLI: failure modes exit nonzero with a diagnostic") {
    CliResult missing = run_cli("marks /nonexistent.json");
    CHECK(missing.status == 1);
    CHECK(missing.out.find("error:") != std::string::npos);
    CliResult badfmt = run_cli("marks " + data_path("d8.json") + " --format yaml");
    CHECK(badfmt.status == 1);
    CliResult nosylow = run_cli("fusion --ambient " + data_path("s4.json") +
                                " --p 2 --sylow 0,1");
    CHECK(nosylow.status == 1);
    CHECK(nosylow.out.find("error:") != std::string::npos);
}
