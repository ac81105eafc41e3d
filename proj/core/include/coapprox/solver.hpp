#pragma once

#include "coapprox/interval.hpp"
#include "coapprox/matrix.hpp"
#include "coapprox/numrange.hpp"
#include "coapprox/subspace.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace coapprox {

/// The membership system of the characterization: one row per satisfying
/// class representative, paired with the numerical range of the class's
/// *-associated target matrix. a_tilde is carried along so induced
/// per-diagonal-entry ranges can be probed.
struct ConstraintSystem {
    RatMatrix rows;                      // p x m
    std::vector<Interval> intervals;     // p
    std::vector<std::size_t> class_ids;  // p
    RatMatrix a_tilde;                   // n x m

    std::size_t p() const { return rows.rows(); }
    std::size_t m() const { return rows.cols(); }
    bool all_exact() const {
        for (const auto& iv : intervals)
            if (!iv.exact()) return false;
        return true;
    }
};

enum class SolutionKind { Empty, Unique, Family };

/// H-representation solution set with probe boxes. Solved exactly (rational
/// LPs) when every interval is exact; float LPs with widened intervals
/// otherwise. point holds the unique coefficient vector (Unique) or a
/// feasible sample (Family); empty for Empty.
struct SolutionSet {
    SolutionKind kind = SolutionKind::Empty;
    bool exact = false;
    std::vector<Rational> point;         // m coefficients
    std::vector<Interval> alpha_box;     // m coordinate ranges
    std::vector<Interval> diag_ranges;   // n induced diagonal-entry ranges
};

struct CoapproxReport {
    Classification classification;
    StarReport star;
    ConstraintSystem system;
    SolutionSet solution;
};

struct SolverOptions {
    double tol_w = 1e-9;       // widening of float-mode interval endpoints
    double tol_unique = 1e-7;  // max alpha box width still called Unique
};

ConstraintSystem build_constraint_system(const ComponentTable& table, const StarReport& report,
                                         const RatMatrix& T);

/// Feasibility LP, then 2(m+n) min/max probes for the boxes. Empty is a
/// valid outcome, not an error. Requires p >= m (guaranteed upstream).
SolutionSet solve_constraints(const ConstraintSystem& system, const SolverOptions& opts = {});

/// Full pipeline: component table -> star report -> classification ->
/// constraint system -> solution set.
CoapproxReport best_coapproximation(const Basis& basis, const RatMatrix& T, const SolverOptions& opts = {});

/// Conjugates a simultaneously diagonalizable family back to the diagonal
/// case: D_i = P^t A_i Q and target P^t T Q, entries snapped to rationals
/// within the orthogonality tolerance. The coefficients solved downstream
/// apply verbatim to the original A_i.
std::pair<Basis, RatMatrix> reduce_via_orthogonal(const FloatMatrix& P, const FloatMatrix& Q,
                                                  const std::vector<FloatMatrix>& a_list,
                                                  const FloatMatrix& T, double tol = 1e-9);

/// Best coapproximation in l_inf^n: vectors embed as diagonal matrices
/// (the natural isometry), so this delegates to coapprox.
CoapproxReport linf_coapprox(const std::vector<std::vector<Rational>>& spanning,
                             const std::vector<Rational>& target, const SolverOptions& opts = {});

}  // namespace coapprox
