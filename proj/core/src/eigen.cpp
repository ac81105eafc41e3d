#include "coapprox/eigen.hpp"

#include "coapprox/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace coapprox {

namespace {

double off_diagonal_frobenius(const FloatMatrix& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

double frobenius(const FloatMatrix& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigen(const FloatMatrix& S, double sym_tol) {
    if (S.rows() != S.cols()) throw DimensionMismatch("eigensolver needs a square matrix");
    const std::size_t n = S.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(S(i, j) - S(j, i)) > sym_tol)
                throw NotSymmetric("matrix is not symmetric within tolerance");

    FloatMatrix a = S;
    // enforce exact symmetry so rotations stay consistent
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);
    FloatMatrix v = FloatMatrix::identity(n);

    const double stop = 1e-14 * std::max(frobenius(a), 1e-300);
    for (int sweep = 0; sweep < 100 && off_diagonal_frobenius(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

    SymmetricEigen out;
    out.values.resize(n);
    out.vectors = FloatMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

Interval symmetric_eigen_interval(const FloatMatrix& S) {
    if (S.rows() == 0) throw DimensionMismatch("empty matrix");
    const auto eig = jacobi_eigen(S);
    return Interval::from_double(eig.values.front(), eig.values.back());
}

double spectral_norm(const FloatMatrix& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    const FloatMatrix gram = M.transposed() * M;
    const auto eig = jacobi_eigen(gram, 1e-9 * std::max(1.0, max_abs(gram)));
    return std::sqrt(std::max(eig.values.back(), 0.0));
}

double spectral_norm(const RatMatrix& M) { return spectral_norm(to_float(M)); }

namespace {

// Rows scaled to integers (by the lcm of denominators) for Bareiss.
Matrix<BigInt> integer_rows(const RatMatrix& M) {
    Matrix<BigInt> out(M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < M.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(M(i, j)));
        for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = numerator(M(i, j)) * (l / denominator(M(i, j)));
    }
    return out;
}

}  // namespace

std::size_t rank(const RatMatrix& M) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    Matrix<BigInt> a = integer_rows(M);
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

namespace {

// Reduced row echelon form over Q; returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
        const Rational p = a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace(const RatMatrix& M) {
    RatMatrix a = M;
    const std::vector<std::size_t> pivots = rref(a);
    const std::size_t cols = M.cols();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_exact(const RatMatrix& M, const std::vector<Rational>& b) {
    if (M.rows() != b.size()) throw DimensionMismatch("solve_exact shapes");
    RatMatrix aug(M.rows(), M.cols() + 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
        aug(i, M.cols()) = b[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    for (std::size_t c : pivots)
        if (c == M.cols()) return std::nullopt;  // inconsistent system
    if (pivots.size() < M.cols()) throw DependentBasis("coefficient matrix has deficient column rank");
    std::vector<Rational> x(M.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, M.cols());
    return x;
}

}  // namespace coapprox
