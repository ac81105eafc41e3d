#include "coapprox/numrange.hpp"

#include "coapprox/eigen.hpp"
#include "coapprox/errors.hpp"

#include <algorithm>

namespace coapprox {

StarAssociatedMatrix star_associated_matrix(const RatMatrix& T, const EquivClass& cls, std::size_t class_id) {
    if (T.rows() != T.cols()) throw DimensionMismatch("target matrix must be square");
    if (cls.is_zero) throw ZeroClass("no *-associated matrix for the zero class");

    StarAssociatedMatrix out;
    out.class_id = class_id;
    out.index_order.assign(cls.p_plus.begin(), cls.p_plus.end());
    out.index_order.insert(out.index_order.end(), cls.p_minus.begin(), cls.p_minus.end());
    std::sort(out.index_order.begin(), out.index_order.end());

    const std::size_t k = out.index_order.size();
    for (std::size_t idx : out.index_order)
        if (idx >= T.rows()) throw DimensionMismatch("class index exceeds target dimension");

    auto row_sign = [&](std::size_t idx) {
        return std::find(cls.p_minus.begin(), cls.p_minus.end(), idx) == cls.p_minus.end() ? 1 : -1;
    };

    out.matrix = RatMatrix(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        const int sign = row_sign(out.index_order[r]);
        for (std::size_t s = 0; s < k; ++s) {
            const Rational& b = T(out.index_order[r], out.index_order[s]);
            out.matrix(r, s) = sign > 0 ? b : -b;
        }
    }
    return out;
}

Interval real_numerical_range(const RatMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("numerical range of non-square matrix");
    const RatMatrix sym = symmetric_part(M);
    const std::size_t k = sym.rows();

    if (k == 1) return Interval::from_rational(sym(0, 0), sym(0, 0));

    bool diagonal = true;
    for (std::size_t i = 0; i < k && diagonal; ++i)
        for (std::size_t j = 0; j < k && diagonal; ++j)
            if (i != j && sym(i, j) != 0) diagonal = false;
    if (diagonal) {
        Rational lo = sym(0, 0), hi = sym(0, 0);
        for (std::size_t i = 1; i < k; ++i) {
            lo = std::min(lo, sym(i, i));
            hi = std::max(hi, sym(i, i));
        }
        return Interval::from_rational(lo, hi);
    }

    if (k == 2) {
        // eigenvalues (a+d)/2 +- sqrt(((a-d)/2)^2 + b^2)
        const Rational mid = (sym(0, 0) + sym(1, 1)) / 2;
        const Rational half_gap = (sym(0, 0) - sym(1, 1)) / 2;
        const Rational disc = half_gap * half_gap + sym(0, 1) * sym(0, 1);
        if (auto root = exact_sqrt(disc))
            return Interval::from_rational(mid - *root, mid + *root);
    }

    return symmetric_eigen_interval(to_float(sym));
}

Interval real_numerical_range(const FloatMatrix& M) {
    if (M.rows() != M.cols()) throw DimensionMismatch("numerical range of non-square matrix");
    FloatMatrix sym(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) sym(i, j) = (M(i, j) + M(j, i)) / 2;
    return symmetric_eigen_interval(sym);
}

}  // namespace coapprox
