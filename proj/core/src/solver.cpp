#include "coapprox/solver.hpp"

#include "coapprox/errors.hpp"
#include "coapprox/lp.hpp"

#include <algorithm>
#include <cmath>

namespace coapprox {

ConstraintSystem build_constraint_system(const ComponentTable& table, const StarReport& report,
                                         const RatMatrix& T) {
    if (T.rows() != T.cols() || T.rows() != table.n())
        throw DimensionMismatch("target must be n x n for the table's n");

    ConstraintSystem sys;
    sys.a_tilde = table.a_tilde;
    sys.rows = RatMatrix(report.satisfying.size(), table.m());
    sys.class_ids.reserve(report.satisfying.size());
    sys.intervals.reserve(report.satisfying.size());

    for (std::size_t s = 0; s < report.satisfying.size(); ++s) {
        const std::size_t cid = report.satisfying[s].class_id;
        const EquivClass& cls = table.classes[cid];
        const auto rep = table.component(cls.representative);
        for (std::size_t k = 0; k < table.m(); ++k) sys.rows(s, k) = rep[k];
        sys.class_ids.push_back(cid);
        sys.intervals.push_back(real_numerical_range(star_associated_matrix(T, cls, cid).matrix));
    }
    return sys;
}

namespace {

template <typename T>
struct ProbeProblem {
    std::vector<LinearConstraint<T>> cons;
    std::size_t m = 0;

    LPResult<T> optimize(const std::vector<T>& objective) const { return solve_lp(objective, cons); }

    // min and max of <coeffs, alpha> over the feasible set
    std::pair<T, T> range(const std::vector<T>& coeffs) const {
        std::vector<T> neg(coeffs.size());
        for (std::size_t k = 0; k < coeffs.size(); ++k) neg[k] = -coeffs[k];
        const auto lo = optimize(neg), hi = optimize(coeffs);
        if (lo.status != LPStatus::Optimal || hi.status != LPStatus::Optimal)
            throw InternalInvariantViolated("bounded membership polyhedron probed as unbounded");
        return {-lo.objective, hi.objective};
    }
};

template <typename T>
ProbeProblem<T> make_probe(const Matrix<T>& rows, const std::vector<std::pair<T, T>>& bounds) {
    ProbeProblem<T> pp;
    pp.m = rows.cols();
    for (std::size_t s = 0; s < rows.rows(); ++s) {
        LinearConstraint<T> lo, hi;
        lo.coeffs.assign(rows.row(s).begin(), rows.row(s).end());
        hi.coeffs = lo.coeffs;
        lo.rel = Relation::GreaterEq;
        lo.rhs = bounds[s].first;
        hi.rel = Relation::LessEq;
        hi.rhs = bounds[s].second;
        pp.cons.push_back(std::move(lo));
        pp.cons.push_back(std::move(hi));
    }
    return pp;
}

template <typename T>
std::vector<T> matrix_row(const Matrix<T>& m, std::size_t i) {
    return {m.row(i).begin(), m.row(i).end()};
}

}  // namespace

SolutionSet solve_constraints(const ConstraintSystem& system, const SolverOptions& opts) {
    if (system.p() < system.m())
        throw InternalInvariantViolated("constraint system has p < m");

    SolutionSet sol;
    sol.exact = system.all_exact();

    if (sol.exact) {
        std::vector<std::pair<Rational, Rational>> bounds;
        bounds.reserve(system.p());
        for (const auto& iv : system.intervals) bounds.emplace_back(iv.exact_lo(), iv.exact_hi());
        const auto probe = make_probe(system.rows, bounds);

        const auto feas = probe.optimize(std::vector<Rational>(system.m(), Rational(0)));
        if (feas.status == LPStatus::Infeasible) return sol;  // Empty
        if (feas.status != LPStatus::Optimal)
            throw InternalInvariantViolated("feasibility probe unbounded");

        sol.point = feas.point;
        bool unique = true;
        for (std::size_t k = 0; k < system.m(); ++k) {
            std::vector<Rational> e(system.m(), Rational(0));
            e[k] = 1;
            const auto [lo, hi] = probe.range(e);
            if (lo != hi) unique = false;
            sol.alpha_box.push_back(Interval::from_rational(lo, hi));
        }
        for (std::size_t i = 0; i < system.a_tilde.rows(); ++i) {
            const auto [lo, hi] = probe.range(matrix_row(system.a_tilde, i));
            sol.diag_ranges.push_back(Interval::from_rational(lo, hi));
        }
        if (unique)
            for (std::size_t k = 0; k < system.m(); ++k) sol.point[k] = sol.alpha_box[k].exact_lo();
        sol.kind = unique ? SolutionKind::Unique : SolutionKind::Family;
        return sol;
    }

    // float mode: every endpoint widened by tol_w
    FloatMatrix rows = to_float(system.rows);
    std::vector<std::pair<double, double>> bounds;
    bounds.reserve(system.p());
    for (const auto& iv : system.intervals) bounds.emplace_back(iv.lo() - opts.tol_w, iv.hi() + opts.tol_w);
    const auto probe = make_probe(rows, bounds);

    const auto feas = probe.optimize(std::vector<double>(system.m(), 0.0));
    if (feas.status == LPStatus::Infeasible) return sol;  // Empty
    if (feas.status != LPStatus::Optimal)
        throw InternalInvariantViolated("feasibility probe unbounded");

    sol.point.reserve(system.m());
    for (double x : feas.point) sol.point.push_back(rational_from_double(x));
    // two independent LP runs can order a pinned coordinate's endpoints
    // backwards by an ulp; collapse such inversions
    const auto as_interval = [](double lo, double hi) {
        return Interval::from_double(std::min(lo, hi), std::max(lo, hi));
    };
    bool unique = true;
    for (std::size_t k = 0; k < system.m(); ++k) {
        std::vector<double> e(system.m(), 0.0);
        e[k] = 1;
        const auto [lo, hi] = probe.range(e);
        if (hi - lo > opts.tol_unique) unique = false;
        sol.alpha_box.push_back(as_interval(lo, hi));
    }
    const FloatMatrix a_tilde_f = to_float(system.a_tilde);
    for (std::size_t i = 0; i < a_tilde_f.rows(); ++i) {
        const auto [lo, hi] = probe.range(matrix_row(a_tilde_f, i));
        sol.diag_ranges.push_back(as_interval(lo, hi));
    }
    sol.kind = unique ? SolutionKind::Unique : SolutionKind::Family;
    return sol;
}

CoapproxReport best_coapproximation(const Basis& basis, const RatMatrix& T, const SolverOptions& opts) {
    CoapproxReport report;
    const ComponentTable table = build_component_table(basis);
    report.star = star_report(table);
    report.classification = classify_subspace(report.star, table);
    report.system = build_constraint_system(table, report.star, T);
    report.solution = solve_constraints(report.system, opts);
    return report;
}

namespace {

bool is_orthogonal(const FloatMatrix& P, double tol) {
    if (P.rows() != P.cols()) return false;
    const FloatMatrix gram = P.transposed() * P;
    FloatMatrix residual = gram - FloatMatrix::identity(P.rows());
    return max_abs(residual) <= tol;
}

}  // namespace

std::pair<Basis, RatMatrix> reduce_via_orthogonal(const FloatMatrix& P, const FloatMatrix& Q,
                                                  const std::vector<FloatMatrix>& a_list,
                                                  const FloatMatrix& T, double tol) {
    if (!is_orthogonal(P, tol)) throw NotOrthogonal("P is not orthogonal within tolerance");
    if (!is_orthogonal(Q, tol)) throw NotOrthogonal("Q is not orthogonal within tolerance");
    const std::size_t n = P.rows();
    if (T.rows() != n || T.cols() != n) throw DimensionMismatch("target shape");

    const FloatMatrix Pt = P.transposed();
    Basis basis;
    basis.n = n;
    for (const auto& A : a_list) {
        if (A.rows() != n || A.cols() != n) throw DimensionMismatch("basis matrix shape");
        const FloatMatrix D = Pt * A * Q;
        DiagonalMatrix diag;
        diag.entries.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && std::abs(D(i, j)) > tol)
                    throw NotSimultaneouslyDiagonalized("P^t A Q has an off-diagonal residue");
            diag.entries.push_back(snap_to_rational(D(i, i), tol));
        }
        basis.matrices.push_back(std::move(diag));
    }

    const FloatMatrix TD = Pt * T * Q;
    RatMatrix target(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) target(i, j) = snap_to_rational(TD(i, j), tol);
    return {std::move(basis), std::move(target)};
}

CoapproxReport linf_coapprox(const std::vector<std::vector<Rational>>& spanning,
                             const std::vector<Rational>& target, const SolverOptions& opts) {
    if (spanning.empty()) throw DimensionMismatch("empty spanning set");
    const std::size_t n = spanning.front().size();

    Basis basis;
    basis.n = n;
    for (const auto& v : spanning) {
        if (v.size() != n) throw DimensionMismatch("spanning vectors must share a length");
        basis.matrices.push_back(DiagonalMatrix{v});
    }
    if (target.size() != n) throw DimensionMismatch("target length != n");
    RatMatrix T(n, n);
    for (std::size_t i = 0; i < n; ++i) T(i, i) = target[i];
    return best_coapproximation(basis, T, opts);
}

}  // namespace coapprox
