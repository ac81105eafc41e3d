#include "coapprox/lp.hpp"

#include "coapprox/errors.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace coapprox {

namespace {

template <typename T>
struct Eps {
    static bool positive(const T& x) { return x > 0; }
    static bool negative(const T& x) { return x < 0; }
    static bool feasible_zero(const T& x) { return x == 0; }
};

template <>
struct Eps<double> {
    static constexpr double lp_eps = 1e-9;
    static bool positive(double x) { return x > lp_eps; }
    static bool negative(double x) { return x < -lp_eps; }
    static bool feasible_zero(double x) { return x > -lp_eps; }
};

// Dense tableau simplex. Columns: structural vars (free vars already split
// into u - v by the caller-facing wrapper), then slacks, then artificials,
// then rhs. Row `z` (last) carries reduced costs z_j = c_B B^-1 A_j - c_j
// and objective value in the rhs cell; optimal when all z_j >= 0.
template <typename T>
class Simplex {
public:
    Simplex(std::size_t n_rows, std::size_t n_cols)
        : rows_(n_rows), cols_(n_cols), tab_(n_rows + 1, std::vector<T>(n_cols + 1, T{})), basis_(n_rows, 0) {}

    T& at(std::size_t i, std::size_t j) { return tab_[i][j]; }
    T& rhs(std::size_t i) { return tab_[i][cols_]; }
    T& z(std::size_t j) { return tab_[rows_][j]; }
    T& z_rhs() { return tab_[rows_][cols_]; }
    std::size_t& basis(std::size_t i) { return basis_[i]; }

    void pivot(std::size_t r, std::size_t c) {
        const T p = tab_[r][c];
        for (std::size_t j = 0; j <= cols_; ++j) tab_[r][j] /= p;
        tab_[r][c] = T(1);
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == r) continue;
            const T f = tab_[i][c];
            if (f == T(0)) continue;
            for (std::size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[r][j];
            tab_[i][c] = T(0);
        }
        basis_[r] = c;
    }

    // Bland's rule iteration until optimal or unbounded. `allowed` masks the
    // columns eligible to enter (artificials are banned in phase 2).
    // Returns false on unbounded.
    bool iterate(const std::vector<bool>& allowed, std::size_t& budget) {
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allowed[j]) continue;
                if (Eps<T>::negative(tab_[rows_][j])) {
                    enter = j;
                    break;  // smallest index
                }
            }
            if (enter == cols_) return true;  // optimal

            std::size_t leave = rows_;
            std::optional<T> best;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (!Eps<T>::positive(tab_[i][enter])) continue;
                T ratio = tab_[i][cols_] / tab_[i][enter];
                if (!best || ratio < *best ||
                    (ratio == *best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == rows_) return false;  // unbounded

            if (budget-- == 0)
                throw CycleGuardExceeded("simplex pivot budget exhausted; Bland's rule should preclude cycling");
            pivot(leave, enter);
        }
    }

    std::size_t rows_, cols_;
    std::vector<std::vector<T>> tab_;
    std::vector<std::size_t> basis_;
};

}  // namespace

namespace {

template <typename T>
LPResult<T> solve_impl(const std::vector<T>& objective, const std::vector<LinearConstraint<T>>& constraints,
                       bool split_free) {
    const std::size_t n_free = objective.size();
    for (const auto& c : constraints)
        if (c.coeffs.size() != n_free) throw DimensionMismatch("constraint arity != objective arity");

    const std::size_t m = constraints.size();
    const std::size_t n_struct = split_free ? 2 * n_free : n_free;  // x = u - v when free

    // Count slack and artificial columns.
    std::size_t n_slack = 0, n_art = 0;
    std::vector<int> row_sign(m, 1);
    std::vector<Relation> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
        rel[i] = constraints[i].rel;
        if (constraints[i].rhs < T(0)) {
            row_sign[i] = -1;
            if (rel[i] == Relation::LessEq)
                rel[i] = Relation::GreaterEq;
            else if (rel[i] == Relation::GreaterEq)
                rel[i] = Relation::LessEq;
        }
        if (rel[i] != Relation::Equal) ++n_slack;
        if (rel[i] != Relation::LessEq) ++n_art;
    }

    const std::size_t cols = n_struct + n_slack + n_art;
    Simplex<T> sx(m, cols);

    std::vector<bool> is_artificial(cols, false);
    std::size_t slack_at = n_struct, art_at = n_struct + n_slack;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& con = constraints[i];
        for (std::size_t k = 0; k < n_free; ++k) {
            T a = con.coeffs[k];
            if (row_sign[i] < 0) a = -a;
            sx.at(i, k) = a;
            if (split_free) sx.at(i, n_free + k) = -a;
        }
        sx.rhs(i) = row_sign[i] < 0 ? -con.rhs : con.rhs;
        if (rel[i] == Relation::LessEq) {
            sx.at(i, slack_at) = T(1);
            sx.basis(i) = slack_at++;
        } else if (rel[i] == Relation::GreaterEq) {
            sx.at(i, slack_at++) = T(-1);
            is_artificial[art_at] = true;
            sx.at(i, art_at) = T(1);
            sx.basis(i) = art_at++;
        } else {
            is_artificial[art_at] = true;
            sx.at(i, art_at) = T(1);
            sx.basis(i) = art_at++;
        }
    }

    std::size_t budget = (1u << 20);
    std::vector<bool> allow_all(cols, true);

    // Phase 1: maximize -sum(artificials). z-row = -c, then eliminate basic
    // artificial costs by adding their rows.
    if (n_art > 0) {
        for (std::size_t j = 0; j < cols; ++j) sx.z(j) = is_artificial[j] ? T(1) : T(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (!is_artificial[sx.basis(i)]) continue;
            for (std::size_t j = 0; j <= cols; ++j) sx.tab_[m][j] -= sx.tab_[i][j];
        }
        if (!sx.iterate(allow_all, budget))
            throw InternalInvariantViolated("phase-1 objective unbounded");
        if (!Eps<T>::feasible_zero(sx.z_rhs())) return {LPStatus::Infeasible, T{}, {}};

        // Drive basic artificials out; drop rows that are identically zero
        // over the structural and slack columns (redundant constraints).
        for (std::size_t i = 0; i < sx.rows_;) {
            if (!is_artificial[sx.basis(i)]) {
                ++i;
                continue;
            }
            std::size_t piv = cols;
            for (std::size_t j = 0; j < n_struct + n_slack; ++j) {
                const T& v = sx.at(i, j);
                if (Eps<T>::positive(v) || Eps<T>::negative(v)) {
                    piv = j;
                    break;
                }
            }
            if (piv != cols) {
                sx.pivot(i, piv);
                ++i;
            } else {
                sx.tab_.erase(sx.tab_.begin() + static_cast<std::ptrdiff_t>(i));
                sx.basis_.erase(sx.basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --sx.rows_;
            }
        }
    }

    // Phase 2: original objective on the u/v split; artificials never re-enter.
    const std::size_t mr = sx.rows_;
    for (std::size_t j = 0; j <= cols; ++j) sx.tab_[mr][j] = T{};
    for (std::size_t k = 0; k < n_free; ++k) {
        sx.tab_[mr][k] = -objective[k];
        if (split_free) sx.tab_[mr][n_free + k] = objective[k];
    }
    for (std::size_t i = 0; i < mr; ++i) {
        const std::size_t b = sx.basis(i);
        T cb{};
        if (b < n_free)
            cb = objective[b];
        else if (split_free && b < n_struct)
            cb = -objective[b - n_free];
        if (cb == T(0)) continue;
        for (std::size_t j = 0; j <= cols; ++j) sx.tab_[mr][j] += cb * sx.tab_[i][j];
    }
    for (std::size_t j = 0; j < cols; ++j)
        if (is_artificial[j]) allow_all[j] = false;
    if (!sx.iterate(allow_all, budget)) return {LPStatus::Unbounded, T{}, {}};

    std::vector<T> split(n_struct, T{});
    for (std::size_t i = 0; i < mr; ++i)
        if (sx.basis(i) < n_struct) split[sx.basis(i)] = sx.rhs(i);
    std::vector<T> point(n_free);
    for (std::size_t k = 0; k < n_free; ++k)
        point[k] = split_free ? split[k] - split[n_free + k] : split[k];
    return {LPStatus::Optimal, sx.z_rhs(), std::move(point)};
}

}  // namespace

template <typename T>
LPResult<T> solve_lp(const std::vector<T>& objective, const std::vector<LinearConstraint<T>>& constraints) {
    return solve_impl(objective, constraints, true);
}

template <typename T>
LPResult<T> solve_lp_nonneg(const std::vector<T>& objective,
                            const std::vector<LinearConstraint<T>>& constraints) {
    return solve_impl(objective, constraints, false);
}

template LPResult<Rational> solve_lp(const std::vector<Rational>&,
                                     const std::vector<LinearConstraint<Rational>>&);
template LPResult<double> solve_lp(const std::vector<double>&,
                                   const std::vector<LinearConstraint<double>>&);
template LPResult<Rational> solve_lp_nonneg(const std::vector<Rational>&,
                                            const std::vector<LinearConstraint<Rational>>&);
template LPResult<double> solve_lp_nonneg(const std::vector<double>&,
                                          const std::vector<LinearConstraint<double>>&);

}  // namespace coapprox
