#pragma once

#include "coapprox/numeric.hpp"

#include <vector>

namespace coapprox {

enum class LPStatus { Optimal, Infeasible, Unbounded };

enum class Relation { LessEq, Equal, GreaterEq };

template <typename T>
struct LinearConstraint {
    std::vector<T> coeffs;
    Relation rel = Relation::LessEq;
    T rhs{};
};

template <typename T>
struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    T objective{};         // valid when Optimal
    std::vector<T> point;  // valid when Optimal
};

/// Maximizes objective . x over free (sign-unrestricted) variables subject
/// to the given constraints. Dense two-phase simplex with Bland's rule.
/// T = Rational runs exactly; T = double uses eps = 1e-9 pivot tolerances.
/// Throws DimensionMismatch on inconsistent sizes and CycleGuardExceeded if
/// the pivot budget is exhausted (impossible under Bland's rule).
template <typename T>
LPResult<T> solve_lp(const std::vector<T>& objective,
                     const std::vector<LinearConstraint<T>>& constraints);

/// Same solver with x >= 0 enforced structurally instead of by extra
/// constraint rows; the tableau stays small when most constraints are
/// sign restrictions.
template <typename T>
LPResult<T> solve_lp_nonneg(const std::vector<T>& objective,
                            const std::vector<LinearConstraint<T>>& constraints);

extern template LPResult<Rational> solve_lp(const std::vector<Rational>&,
                                            const std::vector<LinearConstraint<Rational>>&);
extern template LPResult<double> solve_lp(const std::vector<double>&,
                                          const std::vector<LinearConstraint<double>>&);
extern template LPResult<Rational> solve_lp_nonneg(const std::vector<Rational>&,
                                                   const std::vector<LinearConstraint<Rational>>&);
extern template LPResult<double> solve_lp_nonneg(const std::vector<double>&,
                                                 const std::vector<LinearConstraint<double>>&);

}  // namespace coapprox
