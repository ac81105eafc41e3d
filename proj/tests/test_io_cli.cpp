#include "coapprox/io.hpp"

#include "coapprox/errors.hpp"

#include "support/fixtures.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace coapprox;
using namespace coapprox::testing;
using nlohmann::json;

namespace {

std::string fixture_path(const std::string& name) {
    const char* dir = std::getenv("COAPPROX_FIXTURES");
    REQUIRE_MESSAGE(dir != nullptr, "COAPPROX_FIXTURES must point at tests/fixtures");
    return std::string(dir) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("COAPPROX_CLI");
    REQUIRE_MESSAGE(cli != nullptr, "COAPPROX_CLI must point at the built binary");
    const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_CASE("problem files parse numbers, strings and fractions exactly") {
    const auto pf = parse_problem(R"({"n": 2, "basis": [["1/2", 0.1], [3, "2.5"]],
                                      "target": [[1, 2], ["-3/4", 0]]})");
    CHECK(pf.n == 2);
    CHECK(pf.mode == ProblemFile::Mode::Diag);
    CHECK(pf.basis_rows[0][0] == Rational(1, 2));
    CHECK(pf.basis_rows[0][1] == Rational(1, 10));
    CHECK(pf.basis_rows[1][1] == Rational(5, 2));
    REQUIRE(pf.target.has_value());
    CHECK((*pf.target)(1, 0) == Rational(-3, 4));
}

TEST_CASE("problem file validation errors") {
    CHECK_THROWS_AS(parse_problem("not json"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"({"basis": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"({"n": 0, "basis": [[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"({"n": 2, "basis": []})"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"({"n": 2, "basis": [[1, 2, 3]]})"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"({"n": 2, "mode": "bogus", "basis": [[1, 2]]})"), ParseError);
    CHECK_THROWS_AS(parse_problem(R"({"n": 2, "basis": [[1, 2]], "target": [[1, 2]]})"), ParseError);
}

TEST_CASE("linf targets become diagonal matrices") {
    const auto pf = parse_problem(R"({"n": 2, "mode": "linf", "basis": [[1, 1]], "target": [1, 3]})");
    REQUIRE(pf.target.has_value());
    CHECK((*pf.target)(0, 0) == Rational(1));
    CHECK((*pf.target)(1, 1) == Rational(3));
    CHECK((*pf.target)(0, 1) == Rational(0));
}

TEST_CASE("solve report JSON round-trips byte-identically") {
    const auto basis = example_basis();
    const auto table = build_component_table(basis);
    const auto report = best_coapproximation(basis, example_target_family());
    const std::string text = solve_report_json(table, report);

    const json parsed = json::parse(text);
    CHECK(parsed.dump(2) == text);

    CHECK(parsed["solution"]["kind"] == "Family");
    CHECK(parsed["solution"]["diag_ranges"][0]["lo"] == "1/2");
    CHECK(parsed["solution"]["diag_ranges"][0]["hi"] == "11/2");
    CHECK(parsed["system"]["intervals"][0]["lo"] == "-7/2");
    CHECK(parsed["classification"]["coproximinal"] == false);
    CHECK(parsed["star_report"]["p"] == 4);
}

TEST_CASE("verify report JSON round-trips and text mentions the verdicts") {
    const auto basis = example_basis();
    const auto table = build_component_table(basis);
    const auto star = star_report(table);
    const std::vector<Rational> alpha{Rational(12, 17), Rational(0), Rational(-11, 17)};
    const auto t2 = [] {
        RatMatrix t(7, 7);
        t(0, 0) = 3;
        t(0, 4) = -5;
        t(1, 1) = 1;
        t(1, 5) = 3;
        t(2, 2) = 4;
        t(3, 3) = 1;
        t(4, 0) = -5;
        t(4, 4) = -3;
        t(5, 1) = 2;
        t(5, 5) = 1;
        return t;
    }();
    const auto definition = verify_by_definition(alpha, t2, basis, 50, 3);
    const auto directions = verify_bj_directions(alpha, t2, basis, star, 3);
    const std::string text = verify_report_json(definition, directions);
    CHECK(json::parse(text).dump(2) == text);

    const std::string human = verify_report_text(definition, directions);
    CHECK(human.find("definition check: Pass") != std::string::npos);
    CHECK(human.find("orthogonality-direction check: Pass") != std::string::npos);

    const std::string classify_text = classification_report_text(table, star, classify_subspace(star, table));
    CHECK(classify_text.find("coproximinal: no") != std::string::npos);
}

TEST_CASE("cli: verify without --seed is an input error") {
    const auto r = run_cli("verify " + fixture_path("example_t2.json") + " " +
                           fixture_path("candidate_case2.json"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: classify the worked example") {
    const auto r = run_cli("classify " + fixture_path("example_basis.json"));
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["classification"]["coproximinal"] == false);
    CHECK(out["classification"]["p"] == 4);
    CHECK(out["classification"]["m"] == 3);
}

TEST_CASE("cli: classify the standard basis as co-Chebyshev") {
    const auto r = run_cli("classify " + fixture_path("standard_basis_5.json"));
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["classification"]["co_chebyshev"] == true);
}

TEST_CASE("cli: dependent basis exits 2") {
    const auto r = run_cli("classify " + fixture_path("dependent_basis.json"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli: solve all three worked targets") {
    const auto unique = run_cli("solve " + fixture_path("example_t2.json"));
    CHECK(unique.exit_code == 0);
    const json u = json::parse(unique.output);
    CHECK(u["solution"]["kind"] == "Unique");
    CHECK(u["solution"]["diag_ranges"][0]["lo"] == "3");
    CHECK(u["solution"]["diag_ranges"][4]["lo"] == "-3");

    const auto family = run_cli("solve " + fixture_path("example_t1.json"));
    const json f = json::parse(family.output);
    CHECK(family.exit_code == 0);
    CHECK(f["solution"]["kind"] == "Family");

    const auto empty = run_cli("solve " + fixture_path("example_t3.json"));
    const json e = json::parse(empty.output);
    CHECK(empty.exit_code == 0);  // Empty is a successful outcome
    CHECK(e["solution"]["kind"] == "Empty");
}

TEST_CASE("cli: star-report emits the satisfying classes") {
    const auto r = run_cli("star-report " + fixture_path("example_basis.json"));
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    REQUIRE(out.contains("star_report"));
    CHECK(out["star_report"]["satisfying"].size() == 4);
    CHECK(out["star_report"]["non_satisfying"] == json::array({5}));
}

TEST_CASE("cli: zero components are reported as a flagged non-satisfying class") {
    const auto r = run_cli("classify " + fixture_path("zero_component.json"));
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    const auto& classes = out["star_report"]["classes"];
    REQUIRE(classes.size() == 2);
    CHECK(classes[1]["is_zero"] == true);
    CHECK(out["star_report"]["non_satisfying"] == json::array({2}));
    CHECK(out["classification"]["coproximinal"] == true);  // p = 1 = m
}

TEST_CASE("cli: linf fixtures classify as in the l_inf remarks") {
    const auto y1 = run_cli("linf " + fixture_path("linf_y1.json"));
    CHECK(y1.exit_code == 0);
    CHECK(json::parse(y1.output)["classification"]["coproximinal"] == true);

    const auto y2 = run_cli("linf " + fixture_path("linf_y2.json"));
    CHECK(y2.exit_code == 0);
    CHECK(json::parse(y2.output)["classification"]["coproximinal"] == false);

    const auto pair = run_cli("linf " + fixture_path("linf_pair.json"));
    CHECK(pair.exit_code == 0);
    const json p = json::parse(pair.output);
    CHECK(p["solution"]["kind"] == "Family");
    CHECK(p["solution"]["alpha_box"][0]["lo"] == "1");
    CHECK(p["solution"]["alpha_box"][0]["hi"] == "3");
}

TEST_CASE("cli: float-mode system reports inexact endpoints") {
    const auto r = run_cli("solve " + fixture_path("float_family.json"));
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["solution"]["kind"] == "Family");
    CHECK(out["solution"]["exact"] == false);
    // W of the target is [(1-sqrt5)/2, (1+sqrt5)/2]
    CHECK(std::stod(out["solution"]["alpha_box"][0]["lo"].get<std::string>()) ==
          doctest::Approx(-0.6180339887498949).epsilon(1e-7));
    CHECK(std::stod(out["solution"]["alpha_box"][0]["hi"].get<std::string>()) ==
          doctest::Approx(1.6180339887498949).epsilon(1e-7));
}

TEST_CASE("cli: linf forces vector-mode parsing regardless of the file's mode field") {
    // diag mode rejects a vector target ...
    const auto as_diag = run_cli("solve " + fixture_path("linf_forced.json"));
    CHECK(as_diag.exit_code == 2);
    // ... but the linf command reads the same file as an l_inf problem
    const auto as_linf = run_cli("linf " + fixture_path("linf_forced.json"));
    CHECK(as_linf.exit_code == 0);
    const json out = json::parse(as_linf.output);
    CHECK(out["solution"]["kind"] == "Family");
    CHECK(out["solution"]["alpha_box"][0]["lo"] == "1");
}

TEST_CASE("cli: verify passes the true candidate and fails the perturbed one") {
    const std::string file = fixture_path("example_t2.json");
    const auto good = run_cli("verify " + file + " " + fixture_path("candidate_case2.json") + " --seed 42");
    CHECK(good.exit_code == 0);
    const json g = json::parse(good.output);
    CHECK(g["oracle"]["by_definition"]["verdict"] == "Pass");
    CHECK(g["oracle"]["bj_directions"]["verdict"] == "Pass");

    // candidate given as n = 7 diagonal entries instead of m = 3 coefficients
    const auto diag = run_cli("verify " + file + " " + fixture_path("candidate_case2_diag.json") + " --seed 42");
    CHECK(diag.exit_code == 0);

    const auto bad = run_cli("verify " + file + " " + fixture_path("candidate_case2_bad.json") + " --seed 42");
    CHECK(bad.exit_code == 1);
    const json b = json::parse(bad.output);
    CHECK(b["oracle"]["bj_directions"]["verdict"] == "Fail");
    CHECK(b["oracle"]["bj_directions"]["failing_class"] == 1);

    const auto mismatched = run_cli("verify " + file + " " + fixture_path("candidate_bad_dim.json") + " --seed 42");
    CHECK(mismatched.exit_code == 2);
}

TEST_CASE("cli: --samples controls the definition check") {
    const auto r = run_cli("verify " + fixture_path("example_t2.json") + " " +
                           fixture_path("candidate_case2.json") + " --seed 9 --samples 50");
    CHECK(r.exit_code == 0);
    const json out = json::parse(r.output);
    CHECK(out["oracle"]["by_definition"]["samples_checked"] == 50);
}

TEST_CASE("cli: identical runs are byte-identical") {
    const std::string args = "solve " + fixture_path("example_t1.json");
    CHECK(run_cli(args).output == run_cli(args).output);
    const std::string verify_args =
        "verify " + fixture_path("example_t2.json") + " " + fixture_path("candidate_case2.json") + " --seed 7";
    CHECK(run_cli(verify_args).output == run_cli(verify_args).output);
}

TEST_CASE("cli: missing target for verify exits 2") {
    const auto r = run_cli("verify " + fixture_path("example_basis.json") + " " +
                           fixture_path("candidate_case2.json") + " --seed 1");
    CHECK(r.exit_code == 2);
}
