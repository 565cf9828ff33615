#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli_helpers.hpp"

using json = nlohmann::json;
using ado::test::run_cli;

namespace {

std::string cli() {
    const char* p = std::getenv("ADO_CLI");
    REQUIRE_MESSAGE(p != nullptr, "ADO_CLI must point at the built binary");
    return ado::test::shell_quote(p);
}

std::string source_dir() {
    const char* p = std::getenv("ADO_SOURCE_DIR");
    REQUIRE_MESSAGE(p != nullptr, "ADO_SOURCE_DIR must point at the repository root");
    return p;
}

// Structural equality with tolerant numeric leaves.
void check_same_shape(const json& a, const json& b, const std::string& path) {
    INFO("at ", path);
    if (a.is_number() && b.is_number()) {
        CHECK(std::abs(a.get<double>() - b.get<double>()) <= 1e-12);
        return;
    }
    REQUIRE(a.type() == b.type());
    if (a.is_object()) {
        REQUIRE(a.size() == b.size());
        for (const auto& [k, v] : a.items()) {
            REQUIRE_MESSAGE(b.contains(k), "missing key " << k);
            check_same_shape(v, b.at(k), path + "/" + k);
        }
    } else if (a.is_array()) {
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i)
            check_same_shape(a[i], b[i], path + "[" + std::to_string(i) + "]");
    } else {
        CHECK(a == b);
    }
}

}  // namespace

TEST_CASE("invariant JSON matches the golden file") {
    const auto r = run_cli(cli() + " invariant --N 2 --braid '1 1' --colors '0.5+0i,0.3+0i'");
    REQUIRE(r.exit_code == 0);
    const json got = json::parse(r.stdout_text);
    std::ifstream golden_file(source_dir() + "/tests/data/golden_invariant.json");
    REQUIRE_MESSAGE(golden_file.good(), "golden file missing");
    const json golden = json::parse(golden_file);
    check_same_shape(golden, got, "");
}

TEST_CASE("invariant JSON schema fields") {
    const auto r = run_cli(cli() + " invariant --N 3 --braid '1 1 1' --colors '0.4+0.2i'");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.stdout_text);
    for (const char* key : {"N", "braid", "components", "colors", "value", "per_cut", "residuals"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j.size() == 7);
    CHECK(j["value"].contains("re"));
    CHECK(j["value"].contains("im"));
    CHECK(j["per_cut"].is_array());
    CHECK(j["per_cut"].size() == 2);  // both strands of the single component
    CHECK(j["residuals"].contains("max_disagreement"));
}

TEST_CASE("exit code contract") {
    CHECK(run_cli(cli() + " invariant --N 2 --braid '1 1' --colors '0.5+0i,0.3+0i'").exit_code == 0);
    // missing color for the second component
    const auto missing = run_cli(cli() + " invariant --N 2 --braid '1 1' --colors '0.5'");
    CHECK(missing.exit_code == 1);
    CHECK(json::parse(missing.stdout_text)["error"]["type"] == "ParseError");
    // braid grammar violation
    CHECK(run_cli(cli() + " invariant --N 2 --braid '0 1' --colors '0.5'").exit_code == 1);
    // atypical color
    const auto atypical = run_cli(cli() + " invariant --N 3 --braid '1 1' --colors '1,0.5'");
    CHECK(atypical.exit_code == 1);
    CHECK(json::parse(atypical.stdout_text)["error"]["type"] == "TypicalityError");
    // N = 1 rejected
    CHECK(run_cli(cli() + " verify --N 1").exit_code == 1);
    // unknown flag
    CHECK(run_cli(cli() + " invariant --frobnicate 2>/dev/null").exit_code == 1);
    // help exits cleanly
    CHECK(run_cli(cli() + " --help >/dev/null").exit_code == 0);
    // disagreement maps to 2: a color 1e-8 from an atypical integer makes one
    // cut path cancel catastrophically, and tightened tolerances flag the spread
    const auto tight = run_cli(cli() + " invariant --N 2 --braid '1 1' --colors '1e-8+0i,0.5+0i'" +
                               " --eps-abs 1e-10 --eps-rel 0");
    CHECK(tight.exit_code == 2);
    CHECK(json::parse(tight.stdout_text)["error"]["type"] == "DisagreementError");
    // injected check failure maps to 3
    CHECK(run_cli(cli() + " verify --N 2 --inject-failure >/dev/null").exit_code == 3);
}

TEST_CASE("ADO_EPS_ABS environment default is honored") {
    const auto r = run_cli("ADO_EPS_ABS=1e-10 " + cli() +
                           " invariant --N 2 --braid '1 1' --colors '1e-8+0i,0.5+0i'"
                           " --eps-rel 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify prints its seed and passes on defaults") {
    const auto r = run_cli(cli() + " verify --N 2 --seed 7 --format plain");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("seed 7") != std::string::npos);
    const auto j = run_cli(cli() + " verify --N 2,3 --seed 42");
    CHECK(j.exit_code == 0);
    const json parsed = json::parse(j.stdout_text);
    CHECK(parsed["all_passed"] == true);
    CHECK(parsed["seed"] == 42);
    CHECK(parsed["checks"].size() >= 10);
}

TEST_CASE("table CSV round-trips bit-identically") {
    const auto r = run_cli(cli() + " table --N 3 --lambdas '0.4,1,2.25' --format csv");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.stdout_text);
    std::string line;
    std::getline(lines, line);  // header
    CHECK(line.rfind("lambda_re,", 0) == 0);
    int rows = 0, atypical = 0;
    while (std::getline(lines, line)) {
        ++rows;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (line.find("atypical") != std::string::npos) {
            ++atypical;
            continue;
        }
        REQUIRE(cells.size() == 9);
        // recompute through a second invocation of the single-value command
        // and compare the printed doubles exactly
        const auto sp = run_cli(cli() + " sprime --N 3 --lambda '" + cells[0] + "+" + cells[1] +
                                "i' --lambda-prime '" + cells[2] + "+" + cells[3] + "i' --format csv");
        REQUIRE(sp.exit_code == 0);
        std::istringstream sl(sp.stdout_text);
        std::string h, v;
        std::getline(sl, h);
        std::getline(sl, v);
        CHECK(v == cells[5] + "," + cells[6]);
    }
    CHECK(rows == 9);
    CHECK(atypical == 3);  // lambda = 1 is atypical at N = 3
}

TEST_CASE("mdim command agrees with the table column") {
    const auto md = run_cli(cli() + " mdim --N 3 --lambda '0.4' --format csv");
    const auto tb = run_cli(cli() + " table --N 3 --lambdas '0.4' --format csv");
    REQUIRE(md.exit_code == 0);
    REQUIRE(tb.exit_code == 0);
    std::string mdline = md.stdout_text.substr(md.stdout_text.find('\n') + 1);
    mdline.pop_back();  // trailing newline
    CHECK(tb.stdout_text.find("," + mdline + "\n") != std::string::npos);
}

TEST_CASE("mirror flag flips crossing signs") {
    const auto plus = run_cli(cli() + " invariant --N 3 --braid '-1' --colors '0.3+0.2i'");
    const auto mirrored =
        run_cli(cli() + " invariant --N 3 --braid '1' --colors '0.3+0.2i' --mirror");
    REQUIRE(plus.exit_code == 0);
    REQUIRE(mirrored.exit_code == 0);
    const json a = json::parse(plus.stdout_text), b = json::parse(mirrored.stdout_text);
    CHECK(std::abs(a["value"]["re"].get<double>() - b["value"]["re"].get<double>()) <= 1e-12);
    CHECK(std::abs(a["value"]["im"].get<double>() - b["value"]["im"].get<double>()) <= 1e-12);
}

TEST_CASE("braid fuzz through the CLI neither crashes nor hangs") {
    std::mt19937_64 gen(99);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> chr(0, 16);
    const char alphabet[] = "0123456789-+: .xe";
    for (int t = 0; t < 25; ++t) {
        std::string s;
        const int L = len(gen);
        for (int i = 0; i < L; ++i) s.push_back(alphabet[size_t(chr(gen))]);
        const auto r = run_cli(cli() + " invariant --N 2 --braid " + ado::test::shell_quote(s) +
                               " --colors '0.5+0.1i' 2>/dev/null");
        CHECK_FALSE(r.crashed);
        CHECK((r.exit_code == 0 || r.exit_code == 1));
    }
}

TEST_CASE("plain format prints a readable report") {
    const auto r = run_cli(cli() + " invariant --N 2 --braid '1 1 1' --colors '0.5+0.2i'"
                                   " --format plain");
    REQUIRE(r.exit_code == 0);
    CHECK(r.stdout_text.find("F' = ") != std::string::npos);
    CHECK(r.stdout_text.find("writhe 3") != std::string::npos);
    // non-finite colors are malformed input
    CHECK(run_cli(cli() + " invariant --N 2 --braid '1 1 1' --colors 'nan' 2>/dev/null").exit_code == 1);
}
