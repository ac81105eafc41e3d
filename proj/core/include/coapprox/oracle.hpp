#pragma once

#include "coapprox/matrix.hpp"
#include "coapprox/solver.hpp"
#include "coapprox/subspace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace coapprox {

enum class Verdict { Pass, Fail };

struct VerificationReport {
    Verdict verdict = Verdict::Pass;
    std::size_t samples_checked = 0;
    double worst_violation = 0;
    std::optional<std::vector<Rational>> failing_direction;  // beta
    std::optional<std::vector<double>> failing_point;        // sampled y coefficients
    std::optional<std::size_t> failing_class;                // class whose witness failed
    /// Violation landed between the pass slack (1e-9) and the firm failure
    /// threshold (1e-6); verdict is Fail but flagged for the report text.
    bool inconclusive = false;
};

/// Birkhoff-James orthogonality of a diagonal direction to an arbitrary
/// matrix, decided on the norm-attainment support: with S = argmax |d_i|,
/// D is BJ-orthogonal to R iff 0 lies in the numerical range of
/// (d_i r_ij)_{i,j in S}. Exact membership when the range is exact, else
/// widened by tol_w. Throws ZeroDirection when D = 0.
bool bj_orthogonal_diag(const DiagonalMatrix& D, const RatMatrix& R, double tol_w = 1e-9);

/// Checks the orthogonality condition for every satisfying class witness
/// and for 50 seeded random rational directions. An infeasible candidate is
/// always caught by the violated class's own witness.
VerificationReport verify_bj_directions(const std::vector<Rational>& alpha, const RatMatrix& T,
                                        const Basis& basis, const StarReport& report,
                                        std::uint64_t seed);

/// Definitional check: for seeded random y in the subspace,
/// ||y0 - y|| <= ||T - y|| + 1e-9 with operator norms.
VerificationReport verify_by_definition(const std::vector<Rational>& alpha, const RatMatrix& T,
                                        const Basis& basis, std::size_t samples, std::uint64_t seed);

}  // namespace coapprox
