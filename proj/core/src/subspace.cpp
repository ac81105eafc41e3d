#include "coapprox/subspace.hpp"

#include "coapprox/eigen.hpp"
#include "coapprox/errors.hpp"
#include "coapprox/lp.hpp"

#include <algorithm>

namespace coapprox {

namespace {

bool rows_equal(std::span<const Rational> a, std::span<const Rational> b, int sign) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != (sign > 0 ? b[k] : -b[k])) return false;
    return true;
}

bool row_is_zero(std::span<const Rational> a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

ComponentTable build_component_table(const Basis& basis) {
    const std::size_t n = basis.n, m = basis.m();
    if (n == 0 || m == 0) throw DimensionMismatch("empty basis");
    for (const auto& mat : basis.matrices)
        if (mat.n() != n) throw DimensionMismatch("diagonal length != n");

    ComponentTable table;
    table.a_tilde = RatMatrix(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) table.a_tilde(i, k) = basis.matrices[k].entries[i];

    if (rank(table.a_tilde) < m) throw DependentBasis("component matrix rank < m");

    table.class_of.assign(n, {0, 0});
    std::size_t zero_class = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = table.component(i);
        if (row_is_zero(row)) {
            if (zero_class == static_cast<std::size_t>(-1)) {
                zero_class = table.classes.size();
                table.classes.push_back({i, {i}, {}, true});
            } else {
                table.classes[zero_class].p_plus.push_back(i);
            }
            table.class_of[i] = {zero_class, +1};
            continue;
        }
        bool placed = false;
        for (std::size_t c = 0; c < table.classes.size() && !placed; ++c) {
            auto& cls = table.classes[c];
            if (cls.is_zero) continue;
            const auto rep = table.component(cls.representative);
            if (rows_equal(row, rep, +1)) {
                cls.p_plus.push_back(i);
                table.class_of[i] = {c, +1};
                placed = true;
            } else if (rows_equal(row, rep, -1)) {
                cls.p_minus.push_back(i);
                table.class_of[i] = {c, -1};
                placed = true;
            }
        }
        if (!placed) {
            table.class_of[i] = {table.classes.size(), +1};
            table.classes.push_back({i, {i}, {}, false});
        }
    }
    return table;
}

std::optional<StarWitness> star_property_witness(const ComponentTable& table, std::size_t class_id) {
    if (class_id >= table.classes.size()) throw DimensionMismatch("class id out of range");
    const EquivClass& cls = table.classes[class_id];
    if (cls.is_zero) throw ZeroClass("the zero class never satisfies the *-Property");

    const std::size_t m = table.m();
    const auto rep = table.component(cls.representative);

    // Variables (beta_1..beta_m, t); maximize t.
    std::vector<Rational> objective(m + 1, Rational(0));
    objective[m] = 1;

    std::vector<LinearConstraint<Rational>> cons;
    auto add_domination = [&](std::span<const Rational> other, int sign) {
        LinearConstraint<Rational> c;
        c.coeffs.resize(m + 1);
        for (std::size_t k = 0; k < m; ++k)
            c.coeffs[k] = rep[k] + (sign > 0 ? other[k] : -other[k]);
        c.coeffs[m] = -1;
        c.rel = Relation::GreaterEq;
        c.rhs = 0;
        return c;
    };

    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        if (c == class_id) continue;
        const auto other = table.component(table.classes[c].representative);
        cons.push_back(add_domination(other, -1));  // <beta, rep - other> >= t
        cons.push_back(add_domination(other, +1));  // <beta, rep + other> >= t
    }
    {
        // <beta, rep> >= t; implied when other classes exist, binding when
        // the class is the only one.
        LinearConstraint<Rational> c;
        c.coeffs.assign(rep.begin(), rep.end());
        c.coeffs.push_back(Rational(-1));
        c.rel = Relation::GreaterEq;
        c.rhs = 0;
        cons.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < m; ++k) {
        LinearConstraint<Rational> lo, hi;
        lo.coeffs.assign(m + 1, Rational(0));
        lo.coeffs[k] = 1;
        lo.rel = Relation::GreaterEq;
        lo.rhs = -1;
        hi.coeffs.assign(m + 1, Rational(0));
        hi.coeffs[k] = 1;
        hi.rel = Relation::LessEq;
        hi.rhs = 1;
        cons.push_back(std::move(lo));
        cons.push_back(std::move(hi));
    }

    const auto res = solve_lp(objective, cons);
    if (res.status != LPStatus::Optimal)
        throw InternalInvariantViolated("*-Property LP must be bounded and feasible");
    if (res.objective <= 0) return std::nullopt;

    StarWitness w;
    w.class_id = class_id;
    w.beta.assign(res.point.begin(), res.point.begin() + static_cast<std::ptrdiff_t>(m));
    w.margin = res.objective;
    return w;
}

std::optional<StarWitness> star_fast_path(const ComponentTable& table, std::size_t class_id) {
    const EquivClass& cls = table.classes[class_id];
    if (cls.is_zero) return std::nullopt;

    const std::size_t m = table.m();
    const auto rep = table.component(cls.representative);

    std::vector<std::span<const Rational>> others;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        if (c == class_id || table.classes[c].is_zero) continue;
        others.push_back(table.component(table.classes[c].representative));
    }

    RatMatrix span_rows(others.size(), m);
    for (std::size_t i = 0; i < others.size(); ++i)
        for (std::size_t k = 0; k < m; ++k) span_rows(i, k) = others[i][k];

    for (auto& v : nullspace(span_rows)) {
        Rational value = dot(std::span<const Rational>(v), rep);
        if (value == 0) continue;
        if (value < 0) {
            for (auto& x : v) x = -x;
            value = -value;
        }
        // normalize into the unit box for a margin comparable to the LP's
        Rational scale(0);
        for (const auto& x : v) scale = std::max(scale, static_cast<Rational>(abs(x)));
        for (auto& x : v) x /= scale;
        StarWitness w;
        w.class_id = class_id;
        w.margin = value / scale;
        w.beta = std::move(v);
        return w;
    }
    return std::nullopt;
}

namespace {

// Certifies a guessed direction by checking strict domination exactly.
// Far cheaper than a simplex run and sound either way; the LP stays the
// authoritative decision when no guess validates.
std::optional<StarWitness> certify_guess(const ComponentTable& table, std::size_t class_id,
                                         std::vector<Rational> beta) {
    const EquivClass& cls = table.classes[class_id];
    Rational value = dot(table.component(cls.representative), std::span<const Rational>(beta));
    if (value == 0) return std::nullopt;
    if (value < 0) {
        for (auto& x : beta) x = -x;
        value = -value;
    }
    Rational margin = value;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        if (c == class_id) continue;
        Rational v = dot(table.component(table.classes[c].representative), std::span<const Rational>(beta));
        if (v < 0) v = -v;
        if (v >= value) return std::nullopt;
        margin = std::min(margin, static_cast<Rational>(value - v));
    }
    Rational scale(0);
    for (const auto& x : beta) scale = std::max(scale, static_cast<Rational>(abs(x)));
    for (auto& x : beta) x /= scale;
    return StarWitness{class_id, std::move(beta), margin / scale};
}

// Float run of the witness LP; its beta, snapped back to rationals, is a
// guess candidate whenever the margin is comfortably positive.
std::optional<std::vector<Rational>> float_lp_guess(const ComponentTable& table, std::size_t class_id) {
    const std::size_t m = table.m();
    const auto rep = table.component(table.classes[class_id].representative);

    std::vector<double> objective(m + 1, 0.0);
    objective[m] = 1;
    std::vector<LinearConstraint<double>> cons;
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        if (c == class_id) continue;
        const auto other = table.component(table.classes[c].representative);
        for (int sign : {-1, +1}) {
            LinearConstraint<double> lc;
            lc.coeffs.resize(m + 1);
            for (std::size_t k = 0; k < m; ++k)
                lc.coeffs[k] = to_double(rep[k]) + sign * to_double(other[k]);
            lc.coeffs[m] = -1;
            lc.rel = Relation::GreaterEq;
            lc.rhs = 0;
            cons.push_back(std::move(lc));
        }
    }
    {
        LinearConstraint<double> lc;
        lc.coeffs.resize(m + 1);
        for (std::size_t k = 0; k < m; ++k) lc.coeffs[k] = to_double(rep[k]);
        lc.coeffs[m] = -1;
        lc.rel = Relation::GreaterEq;
        lc.rhs = 0;
        cons.push_back(std::move(lc));
    }
    for (std::size_t k = 0; k < m; ++k) {
        LinearConstraint<double> lo{std::vector<double>(m + 1, 0.0), Relation::GreaterEq, -1.0};
        lo.coeffs[k] = 1;
        LinearConstraint<double> hi{std::vector<double>(m + 1, 0.0), Relation::LessEq, 1.0};
        hi.coeffs[k] = 1;
        cons.push_back(std::move(lo));
        cons.push_back(std::move(hi));
    }

    const auto res = solve_lp(objective, cons);
    if (res.status != LPStatus::Optimal || res.objective < 1e-4) return std::nullopt;
    std::vector<Rational> beta(m);
    for (std::size_t k = 0; k < m; ++k) beta[k] = snap_to_rational(res.point[k], 1e-7);
    return beta;
}

std::optional<StarWitness> guessed_witness(const ComponentTable& table, std::size_t class_id) {
    const auto rep = table.component(table.classes[class_id].representative);
    std::vector<Rational> as_is(rep.begin(), rep.end());
    if (auto w = certify_guess(table, class_id, std::move(as_is))) return w;
    std::vector<Rational> signs(rep.size());
    for (std::size_t k = 0; k < rep.size(); ++k) signs[k] = rep[k] > 0 ? 1 : rep[k] < 0 ? -1 : 0;
    if (auto w = certify_guess(table, class_id, std::move(signs))) return w;
    if (auto beta = float_lp_guess(table, class_id)) return certify_guess(table, class_id, std::move(*beta));
    return std::nullopt;
}

// Exact refutation: the domination system { <beta, v_c> >= 1 } over the
// vectors v_c = rep, rep - other, rep + other is infeasible iff some
// y >= 0 combines the v_c to zero with total weight one (Farkas). The
// certificate system has only m + 1 equality rows, so the exact simplex
// on it stays small no matter how many classes there are.
bool star_refuted(const ComponentTable& table, std::size_t class_id) {
    const std::size_t m = table.m();
    const auto rep = table.component(table.classes[class_id].representative);

    std::vector<std::vector<Rational>> vectors;
    vectors.emplace_back(rep.begin(), rep.end());
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        if (c == class_id) continue;
        const auto other = table.component(table.classes[c].representative);
        std::vector<Rational> minus(m), plus(m);
        for (std::size_t k = 0; k < m; ++k) {
            minus[k] = rep[k] - other[k];
            plus[k] = rep[k] + other[k];
        }
        vectors.push_back(std::move(minus));
        vectors.push_back(std::move(plus));
    }

    const std::size_t cols = vectors.size();
    std::vector<LinearConstraint<Rational>> cons;
    for (std::size_t k = 0; k < m; ++k) {
        LinearConstraint<Rational> row;
        row.coeffs.resize(cols);
        for (std::size_t c = 0; c < cols; ++c) row.coeffs[c] = vectors[c][k];
        row.rel = Relation::Equal;
        row.rhs = 0;
        cons.push_back(std::move(row));
    }
    LinearConstraint<Rational> total{std::vector<Rational>(cols, Rational(1)), Relation::Equal, Rational(1)};
    cons.push_back(std::move(total));

    const auto res = solve_lp_nonneg(std::vector<Rational>(cols, Rational(0)), cons);
    return res.status == LPStatus::Optimal;
}

}  // namespace

StarReport star_report(const ComponentTable& table) {
    StarReport report;
    report.m = table.m();
    for (std::size_t c = 0; c < table.classes.size(); ++c) {
        if (table.classes[c].is_zero) {
            report.non_satisfying.push_back(c);
            continue;
        }
        auto witness = star_fast_path(table, c);
        if (!witness) witness = guessed_witness(table, c);
        if (!witness && !star_refuted(table, c)) {
            witness = star_property_witness(table, c);
            if (!witness)
                throw InternalInvariantViolated("witness LP and Farkas refutation disagree");
        }
        if (witness)
            report.satisfying.push_back(std::move(*witness));
        else
            report.non_satisfying.push_back(c);
    }
    report.p = report.satisfying.size();
    if (report.p < 1)
        throw InternalInvariantViolated("no component satisfies the domination property; at least one always does");
    if (report.p < report.m)
        throw InternalInvariantViolated("fewer satisfying classes than the basis dimension; p >= m always holds");
    return report;
}

Classification classify_subspace(const StarReport& report, const ComponentTable& table) {
    Classification c;
    c.p = report.p;
    c.m = report.m;
    c.coproximinal = report.p == report.m;
    c.singleton_classes = std::all_of(report.satisfying.begin(), report.satisfying.end(),
                                      [&](const StarWitness& w) { return table.classes[w.class_id].size() == 1; });
    c.co_chebyshev = c.coproximinal && c.singleton_classes;
    return c;
}

std::vector<Rational> combine_diagonal(const ComponentTable& table, std::span<const Rational> beta) {
    if (beta.size() != table.m()) throw DimensionMismatch("beta length != m");
    std::vector<Rational> diag(table.n());
    for (std::size_t i = 0; i < table.n(); ++i) diag[i] = dot(table.component(i), beta);
    return diag;
}

}  // namespace coapprox
