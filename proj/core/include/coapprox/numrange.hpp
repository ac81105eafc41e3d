#pragma once

#include "coapprox/interval.hpp"
#include "coapprox/matrix.hpp"
#include "coapprox/subspace.hpp"

#include <cstddef>
#include <vector>

namespace coapprox {

/// The signed principal submatrix of a target on P+ u P-: rows indexed by
/// P- are negated, columns keep their sign. index_order is ascending, so
/// entry (r,s) = sign(i_r) * t(i_r, i_s).
struct StarAssociatedMatrix {
    std::size_t class_id = 0;
    std::vector<std::size_t> index_order;
    RatMatrix matrix;
};

/// Throws DimensionMismatch when T is not square or the class indices do
/// not fit; ZeroClass for the zero class.
StarAssociatedMatrix star_associated_matrix(const RatMatrix& T, const EquivClass& cls,
                                            std::size_t class_id = 0);

/// W(M) over the real unit sphere: exactly [lambda_min, lambda_max] of the
/// symmetric part (M + M^t)/2. Endpoints are exact rationals whenever that
/// is cheap to certify (k = 1, diagonal symmetric part, or 2x2 with a
/// rational-square discriminant); otherwise Jacobi floats.
Interval real_numerical_range(const RatMatrix& M);
Interval real_numerical_range(const FloatMatrix& M);

}  // namespace coapprox
