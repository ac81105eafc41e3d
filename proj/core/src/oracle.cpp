#include "coapprox/oracle.hpp"

#include "coapprox/eigen.hpp"
#include "coapprox/errors.hpp"
#include "coapprox/numrange.hpp"
#include "coapprox/rng.hpp"

#include <algorithm>
#include <cmath>

namespace coapprox {

namespace {

constexpr double kPassSlack = 1e-9;
constexpr double kFailThreshold = 1e-6;

RatMatrix residual_matrix(const std::vector<Rational>& alpha, const RatMatrix& T, const Basis& basis) {
    if (alpha.size() != basis.m()) throw DimensionMismatch("alpha length != m");
    RatMatrix R = T;
    for (std::size_t k = 0; k < basis.m(); ++k)
        for (std::size_t i = 0; i < basis.n; ++i) R(i, i) -= alpha[k] * basis.matrices[k].entries[i];
    return R;
}

std::vector<Rational> direction_diagonal(const Basis& basis, const std::vector<Rational>& beta) {
    std::vector<Rational> d(basis.n, Rational(0));
    for (std::size_t k = 0; k < basis.m(); ++k)
        for (std::size_t i = 0; i < basis.n; ++i) d[i] += beta[k] * basis.matrices[k].entries[i];
    return d;
}

// Distance from zero to the numerical range of the attainment-set form.
double bj_violation(const DiagonalMatrix& D, const RatMatrix& R, double tol_w, bool& orthogonal) {
    Rational peak(0);
    for (const auto& d : D.entries) peak = std::max(peak, static_cast<Rational>(abs(d)));
    if (peak == 0) throw ZeroDirection("zero diagonal direction");

    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < D.entries.size(); ++i)
        if (abs(D.entries[i]) == peak) support.push_back(i);

    RatMatrix form(support.size(), support.size());
    for (std::size_t r = 0; r < support.size(); ++r)
        for (std::size_t s = 0; s < support.size(); ++s)
            form(r, s) = D.entries[support[r]] * R(support[r], support[s]);

    const Interval w = real_numerical_range(form);
    orthogonal = w.contains_zero(tol_w);
    return w.zero_violation();
}

}  // namespace

bool bj_orthogonal_diag(const DiagonalMatrix& D, const RatMatrix& R, double tol_w) {
    if (D.n() != R.rows() || R.rows() != R.cols()) throw DimensionMismatch("direction/matrix shapes");
    bool orthogonal = false;
    bj_violation(D, R, tol_w, orthogonal);
    return orthogonal;
}

VerificationReport verify_bj_directions(const std::vector<Rational>& alpha, const RatMatrix& T,
                                        const Basis& basis, const StarReport& report,
                                        std::uint64_t seed) {
    const RatMatrix R = residual_matrix(alpha, T, basis);
    VerificationReport out;

    auto check = [&](const std::vector<Rational>& beta, std::optional<std::size_t> class_id) {
        const DiagonalMatrix D{direction_diagonal(basis, beta)};
        if (D.is_zero()) return;  // random draw collapsed; nothing to test
        bool orthogonal = false;
        const double violation = bj_violation(D, R, kPassSlack, orthogonal);
        ++out.samples_checked;
        if (violation > out.worst_violation) out.worst_violation = violation;
        if (!orthogonal && !out.failing_direction) {
            out.failing_direction = beta;
            out.failing_class = class_id;
        }
    };

    for (const auto& witness : report.satisfying) check(witness.beta, witness.class_id);

    SplitMix64 rng(seed);
    for (int s = 0; s < 50; ++s) {
        std::vector<Rational> beta(basis.m());
        for (auto& b : beta) b = rng.next_rational(-10, 10, 100);
        check(beta, std::nullopt);
    }

    if (out.failing_direction) {
        out.verdict = Verdict::Fail;
        out.inconclusive = out.worst_violation <= kFailThreshold;
    }
    return out;
}

VerificationReport verify_by_definition(const std::vector<Rational>& alpha, const RatMatrix& T,
                                        const Basis& basis, std::size_t samples, std::uint64_t seed) {
    if (samples < 1) throw Error("need at least one sample");
    const std::size_t n = basis.n, m = basis.m();
    if (alpha.size() != m) throw DimensionMismatch("alpha length != m");

    std::vector<double> y0(n, 0.0);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < n; ++i) y0[i] += to_double(alpha[k]) * to_double(basis.matrices[k].entries[i]);
    const FloatMatrix Tf = to_float(T);

    VerificationReport out;
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> c(m);
        for (auto& x : c) x = rng.next_in(-10.0, 10.0);

        std::vector<double> y(n, 0.0);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < n; ++i) y[i] += c[k] * to_double(basis.matrices[k].entries[i]);

        double lhs = 0;  // ||y0 - y||, diagonal operator norm
        for (std::size_t i = 0; i < n; ++i) lhs = std::max(lhs, std::abs(y0[i] - y[i]));

        FloatMatrix residual = Tf;
        for (std::size_t i = 0; i < n; ++i) residual(i, i) -= y[i];
        const double rhs = spectral_norm(residual);

        ++out.samples_checked;
        const double violation = lhs - rhs;
        if (violation > out.worst_violation) {
            out.worst_violation = violation;
            if (violation > kPassSlack) out.failing_point = c;
        }
    }

    if (out.worst_violation > kPassSlack) {
        out.verdict = Verdict::Fail;
        out.inconclusive = out.worst_violation <= kFailThreshold;
    }
    return out;
}

}  // namespace coapprox
