#pragma once

#include "coapprox/interval.hpp"
#include "coapprox/matrix.hpp"

#include <cstddef>
#include <vector>

namespace coapprox {

struct SymmetricEigen {
    std::vector<double> values;  // ascending
    FloatMatrix vectors;         // column k pairs with values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass drops
/// below 1e-14 * ||S||_F. Throws NotSymmetric when max|S - S^t| > sym_tol.
SymmetricEigen jacobi_eigen(const FloatMatrix& S, double sym_tol = 1e-12);

/// [lambda_min, lambda_max] of a symmetric matrix.
Interval symmetric_eigen_interval(const FloatMatrix& S);

/// Largest singular value, sqrt(lambda_max(M^t M)).
double spectral_norm(const FloatMatrix& M);
double spectral_norm(const RatMatrix& M);

/// Exact rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& M);

/// Basis of the exact nullspace {x : Mx = 0} over Q.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& M);

/// Exact solution of M x = b when consistent with a unique solution
/// (full column rank); empty optional when inconsistent.
/// Throws DependentBasis when M has deficient column rank.
std::optional<std::vector<Rational>> solve_exact(const RatMatrix& M, const std::vector<Rational>& b);

}  // namespace coapprox
