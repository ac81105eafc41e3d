#include "coapprox/io.hpp"

#include "coapprox/eigen.hpp"
#include "coapprox/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace coapprox {

using nlohmann::json;

namespace {

Rational parse_scalar(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number()) return parse_rational(j.dump());  // shortest decimal round-trip
    throw ParseError("expected a number or numeric string, got " + j.dump());
}

std::vector<Rational> parse_vector(const json& j, std::size_t expected, const char* what) {
    if (!j.is_array() || j.size() != expected)
        throw ParseError(std::string(what) + " must be an array of length " + std::to_string(expected));
    std::vector<Rational> out;
    out.reserve(expected);
    for (const auto& e : j) out.push_back(parse_scalar(e));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

std::string scalar_string(const Interval& iv, bool lo) {
    if (iv.exact()) return rational_to_string(lo ? iv.exact_lo() : iv.exact_hi());
    return format_double(lo ? iv.lo() : iv.hi());
}

json interval_json(const Interval& iv) {
    return json{{"lo", scalar_string(iv, true)}, {"hi", scalar_string(iv, false)}};
}

json rational_vector_json(const std::vector<Rational>& v, bool exact) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(exact ? rational_to_string(x) : format_double(to_double(x)));
    return arr;
}

json indices_json(const std::vector<std::size_t>& v) {
    json arr = json::array();
    for (std::size_t i : v) arr.push_back(i + 1);  // reports use 1-based indices
    return arr;
}

json classes_json(const ComponentTable& table) {
    json arr = json::array();
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        const auto& cls = table.classes[c];
        arr.push_back(json{{"id", c + 1},
                           {"representative", cls.representative + 1},
                           {"p_plus", indices_json(cls.p_plus)},
                           {"p_minus", indices_json(cls.p_minus)},
                           {"is_zero", cls.is_zero}});
    }
    return arr;
}

json star_json(const ComponentTable& table, const StarReport& star) {
    json satisfying = json::array();
    for (const auto& w : star.satisfying)
        satisfying.push_back(json{{"class", w.class_id + 1},
                                  {"representative", table.classes[w.class_id].representative + 1},
                                  {"witness", rational_vector_json(w.beta, true)},
                                  {"margin", rational_to_string(w.margin)}});
    json non_satisfying = json::array();
    for (std::size_t c : star.non_satisfying) non_satisfying.push_back(c + 1);
    return json{{"p", star.p},
                {"m", star.m},
                {"classes", classes_json(table)},
                {"satisfying", satisfying},
                {"non_satisfying", non_satisfying}};
}

json classification_json(const Classification& cls) {
    return json{{"coproximinal", cls.coproximinal},
                {"co_chebyshev", cls.co_chebyshev},
                {"p", cls.p},
                {"m", cls.m},
                {"singleton_classes", cls.singleton_classes}};
}

json system_json(const ConstraintSystem& sys) {
    json rows = json::array();
    for (std::size_t s = 0; s < sys.p(); ++s) {
        json row = json::array();
        for (std::size_t k = 0; k < sys.m(); ++k) row.push_back(rational_to_string(sys.rows(s, k)));
        rows.push_back(row);
    }
    json intervals = json::array();
    for (const auto& iv : sys.intervals) intervals.push_back(interval_json(iv));
    json classes = json::array();
    for (std::size_t c : sys.class_ids) classes.push_back(c + 1);
    return json{{"rows", rows}, {"intervals", intervals}, {"class_ids", classes}};
}

const char* kind_name(SolutionKind k) {
    switch (k) {
        case SolutionKind::Empty: return "Empty";
        case SolutionKind::Unique: return "Unique";
        default: return "Family";
    }
}

json solution_json(const SolutionSet& sol) {
    json out{{"kind", kind_name(sol.kind)}, {"exact", sol.exact}};
    if (sol.kind != SolutionKind::Empty) {
        out["point"] = rational_vector_json(sol.point, sol.exact);
        json alpha = json::array();
        for (const auto& iv : sol.alpha_box) alpha.push_back(interval_json(iv));
        out["alpha_box"] = alpha;
        json diag = json::array();
        for (const auto& iv : sol.diag_ranges) diag.push_back(interval_json(iv));
        out["diag_ranges"] = diag;
    }
    return out;
}

json verification_json(const VerificationReport& r) {
    json out{{"verdict", r.verdict == Verdict::Pass ? "Pass" : "Fail"},
             {"samples_checked", r.samples_checked},
             {"worst_violation", format_double(r.worst_violation)},
             {"inconclusive", r.inconclusive}};
    if (r.failing_direction) out["failing_direction"] = rational_vector_json(*r.failing_direction, true);
    if (r.failing_class) out["failing_class"] = *r.failing_class + 1;
    if (r.failing_point) {
        json arr = json::array();
        for (double x : *r.failing_point) arr.push_back(format_double(x));
        out["failing_point"] = arr;
    }
    return out;
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text, std::optional<ProblemFile::Mode> force_mode) {
    const json j = parse_json(json_text);
    if (!j.is_object()) throw ParseError("problem file must be a JSON object");

    ProblemFile pf;
    if (!j.contains("n") || !j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
        throw ParseError("'n' must be a positive integer");
    pf.n = j["n"].get<std::size_t>();

    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw ParseError("mode must be \"diag\" or \"linf\"");
        const std::string mode = j["mode"].get<std::string>();
        if (mode == "diag")
            pf.mode = ProblemFile::Mode::Diag;
        else if (mode == "linf")
            pf.mode = ProblemFile::Mode::Linf;
        else
            throw ParseError("mode must be \"diag\" or \"linf\"");
    }
    if (force_mode) pf.mode = *force_mode;

    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
        throw ParseError("'basis' must be a non-empty array of rows");
    for (const auto& row : j["basis"]) pf.basis_rows.push_back(parse_vector(row, pf.n, "basis row"));

    if (j.contains("target") && !j["target"].is_null()) {
        if (pf.mode == ProblemFile::Mode::Linf) {
            const auto v = parse_vector(j["target"], pf.n, "linf target");
            RatMatrix t(pf.n, pf.n);
            for (std::size_t i = 0; i < pf.n; ++i) t(i, i) = v[i];
            pf.target = std::move(t);
        } else {
            const json& t = j["target"];
            if (!t.is_array() || t.size() != pf.n) throw ParseError("target must be an n x n grid");
            RatMatrix m(pf.n, pf.n);
            for (std::size_t i = 0; i < pf.n; ++i) {
                const auto row = parse_vector(t[i], pf.n, "target row");
                for (std::size_t k = 0; k < pf.n; ++k) m(i, k) = row[k];
            }
            pf.target = std::move(m);
        }
    }
    return pf;
}

ProblemFile load_problem(const std::string& path, std::optional<ProblemFile::Mode> force_mode) {
    return parse_problem(read_file(path), force_mode);
}

Basis to_basis(const ProblemFile& pf) {
    Basis basis;
    basis.n = pf.n;
    for (const auto& row : pf.basis_rows) basis.matrices.push_back(DiagonalMatrix{row});
    return basis;
}

std::vector<Rational> load_candidate(const std::string& path, const ComponentTable& table) {
    const json j = parse_json(read_file(path));
    if (!j.is_array()) throw ParseError("candidate file must be a JSON array");

    if (j.size() == table.m()) {
        std::vector<Rational> alpha;
        for (const auto& e : j) alpha.push_back(parse_scalar(e));
        return alpha;
    }
    if (j.size() == table.n()) {
        std::vector<Rational> diag;
        for (const auto& e : j) diag.push_back(parse_scalar(e));
        const auto alpha = solve_exact(table.a_tilde, diag);
        if (!alpha) throw ParseError("candidate diagonal lies outside the subspace");
        return *alpha;
    }
    throw ParseError("candidate must have m=" + std::to_string(table.m()) + " coefficients or n=" +
                     std::to_string(table.n()) + " diagonal entries");
}

std::string classification_report_json(const ComponentTable& table, const StarReport& star,
                                       const Classification& cls, const ReportOptions& opts) {
    const json out{{"classification", classification_json(cls)}, {"star_report", star_json(table, star)}};
    return out.dump(opts.indent);
}

std::string star_report_json(const ComponentTable& table, const StarReport& star, const ReportOptions& opts) {
    const json out{{"star_report", star_json(table, star)}};
    return out.dump(opts.indent);
}

std::string solve_report_json(const ComponentTable& table, const CoapproxReport& report,
                              const ReportOptions& opts) {
    const json out{{"classification", classification_json(report.classification)},
                   {"star_report", star_json(table, report.star)},
                   {"system", system_json(report.system)},
                   {"solution", solution_json(report.solution)}};
    return out.dump(opts.indent);
}

std::string verify_report_json(const VerificationReport& definition, const VerificationReport& directions,
                               const ReportOptions& opts) {
    const json out{{"oracle", json{{"by_definition", verification_json(definition)},
                                   {"bj_directions", verification_json(directions)}}}};
    return out.dump(opts.indent);
}

namespace {

std::string interval_text(const Interval& iv) {
    return "[" + scalar_string(iv, true) + ", " + scalar_string(iv, false) + "]";
}

void append_star_text(std::ostringstream& ss, const ComponentTable& table, const StarReport& star) {
    ss << "components: " << table.n() << ", basis size m = " << star.m << ", satisfying p = " << star.p << "\n";
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        const auto& cls = table.classes[c];
        ss << "  class " << c + 1 << " (rep " << cls.representative + 1 << "): P+ = {";
        for (std::size_t i = 0; i < cls.p_plus.size(); ++i) ss << (i ? "," : "") << cls.p_plus[i] + 1;
        ss << "}, P- = {";
        for (std::size_t i = 0; i < cls.p_minus.size(); ++i) ss << (i ? "," : "") << cls.p_minus[i] + 1;
        ss << "}";
        if (cls.is_zero) ss << " [zero]";
        ss << "\n";
    }
    ss << "  satisfying classes:";
    for (const auto& w : star.satisfying) ss << " " << w.class_id + 1;
    ss << "\n";
}

void append_verification_text(std::ostringstream& ss, const char* name, const VerificationReport& r) {
    ss << name << ": " << (r.verdict == Verdict::Pass ? "Pass" : "Fail");
    if (r.inconclusive) ss << " (inconclusive: violation between pass slack and failure threshold)";
    ss << ", samples = " << r.samples_checked << ", worst violation = " << format_double(r.worst_violation)
       << "\n";
    if (r.failing_class) ss << "  failing class: " << *r.failing_class + 1 << "\n";
}

}  // namespace

std::string classification_report_text(const ComponentTable& table, const StarReport& star,
                                       const Classification& cls) {
    std::ostringstream ss;
    append_star_text(ss, table, star);
    ss << "coproximinal: " << (cls.coproximinal ? "yes" : "no")
       << ", co-Chebyshev: " << (cls.co_chebyshev ? "yes" : "no") << "\n";
    return ss.str();
}

std::string solve_report_text(const ComponentTable& table, const CoapproxReport& report) {
    std::ostringstream ss;
    append_star_text(ss, table, report.star);
    ss << "coproximinal: " << (report.classification.coproximinal ? "yes" : "no")
       << ", co-Chebyshev: " << (report.classification.co_chebyshev ? "yes" : "no") << "\n";
    ss << "membership system:\n";
    for (std::size_t s = 0; s < report.system.p(); ++s) {
        ss << "  <(";
        for (std::size_t k = 0; k < report.system.m(); ++k)
            ss << (k ? "," : "") << rational_to_string(report.system.rows(s, k));
        ss << "), alpha> in " << interval_text(report.system.intervals[s]) << "\n";
    }
    const auto& sol = report.solution;
    ss << "solution: " << kind_name(sol.kind) << "\n";
    if (sol.kind != SolutionKind::Empty) {
        ss << "  alpha =";
        for (const auto& x : sol.point)
            ss << " " << (sol.exact ? rational_to_string(x) : format_double(to_double(x)));
        ss << "\n  diagonal ranges:";
        for (const auto& iv : sol.diag_ranges) ss << " " << interval_text(iv);
        ss << "\n";
    }
    return ss.str();
}

std::string verify_report_text(const VerificationReport& definition, const VerificationReport& directions) {
    std::ostringstream ss;
    append_verification_text(ss, "definition check", definition);
    append_verification_text(ss, "orthogonality-direction check", directions);
    return ss.str();
}

}  // namespace coapprox
