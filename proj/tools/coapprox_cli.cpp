// Command-line driver: classify / solve / star-report / verify / linf on
// JSON problem files. Exit codes: 0 success (including Empty solutions),
// 1 verification failure, 2 malformed input, 3 numerical failure.

#include "coapprox/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using namespace coapprox;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

struct CommonFlags {
    bool text = false;
    double tol_w = 1e-9;
    double tol_unique = 1e-7;
};

void add_format_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_flag("--text,!--json", flags.text, "human-readable output (default: JSON)");
}

void add_tol_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--tol-w", flags.tol_w, "widening of float-mode numerical-range endpoints");
    cmd->add_option("--tol-unique", flags.tol_unique, "max coefficient-box width still reported Unique");
}

int run_classify(const std::string& path, const CommonFlags& flags, bool star_only) {
    const ProblemFile pf = load_problem(path);
    const ComponentTable table = build_component_table(to_basis(pf));
    const StarReport star = star_report(table);
    const Classification cls = classify_subspace(star, table);
    if (star_only)
        std::cout << star_report_json(table, star) << "\n";
    else if (flags.text)
        std::cout << classification_report_text(table, star, cls);
    else
        std::cout << classification_report_json(table, star, cls) << "\n";
    return kExitOk;
}

int run_solve(const std::string& path, const CommonFlags& flags, bool force_linf) {
    const ProblemFile pf = load_problem(
        path, force_linf ? std::optional{ProblemFile::Mode::Linf} : std::nullopt);

    const Basis basis = to_basis(pf);
    const ComponentTable table = build_component_table(basis);
    if (!pf.target) return run_classify(path, flags, false);

    SolverOptions opts;
    opts.tol_w = flags.tol_w;
    opts.tol_unique = flags.tol_unique;
    const CoapproxReport report = ::coapprox::best_coapproximation(basis, *pf.target, opts);
    if (flags.text)
        std::cout << solve_report_text(table, report);
    else
        std::cout << solve_report_json(table, report) << "\n";
    return kExitOk;
}

int run_verify(const std::string& path, const std::string& candidate_path, std::size_t samples,
               std::uint64_t seed, const CommonFlags& flags) {
    const ProblemFile pf = load_problem(path);
    if (!pf.target) throw ParseError("verify needs a problem file with a target");

    const Basis basis = to_basis(pf);
    const ComponentTable table = build_component_table(basis);
    const std::vector<Rational> alpha = load_candidate(candidate_path, table);

    const StarReport star = star_report(table);
    const VerificationReport definition = verify_by_definition(alpha, *pf.target, basis, samples, seed);
    const VerificationReport directions = verify_bj_directions(alpha, *pf.target, basis, star, seed + 1);

    if (flags.text)
        std::cout << verify_report_text(definition, directions);
    else
        std::cout << verify_report_json(definition, directions) << "\n";
    return definition.verdict == Verdict::Pass && directions.verdict == Verdict::Pass ? kExitOk
                                                                                      : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"best-coapproximation solver for subspaces of diagonal matrices"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string path, candidate_path;
    std::size_t samples = 200;
    std::uint64_t seed = 0;

    auto* classify = app.add_subcommand("classify", "component classes, *-Property, coproximinal / co-Chebyshev");
    classify->add_option("file", path, "problem file")->required();
    add_format_flags(classify, flags);

    auto* star = app.add_subcommand("star-report", "per-class *-Property verdicts with witnesses");
    star->add_option("file", path, "problem file")->required();

    auto* solve = app.add_subcommand("solve", "full best-coapproximation set for the target");
    solve->add_option("file", path, "problem file")->required();
    add_format_flags(solve, flags);
    add_tol_flags(solve, flags);

    auto* linf = app.add_subcommand("linf", "solve, forcing l_inf vector mode");
    linf->add_option("file", path, "problem file")->required();
    add_format_flags(linf, flags);
    add_tol_flags(linf, flags);

    auto* verify = app.add_subcommand("verify", "independent oracle checks of a candidate");
    verify->add_option("file", path, "problem file")->required();
    verify->add_option("candidate", candidate_path, "candidate coefficients or diagonal (JSON array)")->required();
    verify->add_option("--samples", samples, "sample count for the definition check");
    verify->add_option("--seed", seed, "RNG seed (required for reproducibility)")->required();
    add_format_flags(verify, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (classify->parsed()) return run_classify(path, flags, false);
        if (star->parsed()) return run_classify(path, flags, true);
        if (solve->parsed()) return run_solve(path, flags, false);
        if (linf->parsed()) return run_solve(path, flags, true);
        if (verify->parsed()) return run_verify(path, candidate_path, samples, seed, flags);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DependentBasis& e) {
        std::cerr << "input error: dependent basis: " << e.what() << "\n";
        return kExitInput;
    } catch (const DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitInput;
}
