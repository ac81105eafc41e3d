#pragma once

#include "coapprox/oracle.hpp"
#include "coapprox/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coapprox {

/// Parsed problem file. In diag mode the target is an n x n grid; in linf
/// mode basis rows and the target are length-n vectors (embedded as
/// diagonal matrices).
struct ProblemFile {
    enum class Mode { Diag, Linf };

    std::size_t n = 0;
    Mode mode = Mode::Diag;
    std::vector<std::vector<Rational>> basis_rows;  // m rows of length n
    std::optional<RatMatrix> target;                // n x n
};

/// force_mode overrides the file's "mode" before the target is
/// interpreted (the `linf` command reads any file as vector-mode).
ProblemFile parse_problem(const std::string& json_text,
                          std::optional<ProblemFile::Mode> force_mode = std::nullopt);
ProblemFile load_problem(const std::string& path,
                         std::optional<ProblemFile::Mode> force_mode = std::nullopt);

Basis to_basis(const ProblemFile& pf);

/// Candidate file: a JSON array, either m coefficients (taken verbatim) or
/// n diagonal entries (solved back to coefficients; ParseError when the
/// diagonal is outside the subspace). When m == n the coefficient reading
/// wins.
std::vector<Rational> load_candidate(const std::string& path, const ComponentTable& table);

struct ReportOptions {
    int indent = 2;
};

/// Canonical JSON (sorted keys, rationals as "p/q" strings, floats with 17
/// significant digits); parsing and re-dumping the result is byte-identical.
std::string classification_report_json(const ComponentTable& table, const StarReport& star,
                                       const Classification& cls, const ReportOptions& opts = {});
std::string star_report_json(const ComponentTable& table, const StarReport& star,
                             const ReportOptions& opts = {});
std::string solve_report_json(const ComponentTable& table, const CoapproxReport& report,
                              const ReportOptions& opts = {});
std::string verify_report_json(const VerificationReport& definition, const VerificationReport& directions,
                               const ReportOptions& opts = {});

/// Compact human-readable variants of the same reports.
std::string classification_report_text(const ComponentTable& table, const StarReport& star,
                                       const Classification& cls);
std::string solve_report_text(const ComponentTable& table, const CoapproxReport& report);
std::string verify_report_text(const VerificationReport& definition, const VerificationReport& directions);

}  // namespace coapprox
