#pragma once

#include "coapprox/matrix.hpp"
#include "coapprox/subspace.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace coapprox::testing {

inline std::vector<Rational> rvec(std::initializer_list<long long> xs) {
    std::vector<Rational> v;
    for (long long x : xs) v.emplace_back(x);
    return v;
}

/// The worked seven-dimensional example basis.
inline Basis example_basis() {
    Basis b;
    b.n = 7;
    b.matrices.push_back({rvec({7, -5, 2, 6, -7, -5, 1})});
    b.matrices.push_back({rvec({1, 3, 4, 3, -1, 3, 2})});
    b.matrices.push_back({rvec({3, -7, -4, 5, -3, -7, -2})});
    return b;
}

struct Entry {
    std::size_t i, j;  // 1-based
    long long value;
};

inline RatMatrix sparse_target(std::size_t n, std::initializer_list<Entry> entries) {
    RatMatrix t(n, n);
    for (const auto& e : entries) t(e.i - 1, e.j - 1) = e.value;
    return t;
}

/// Target with infinitely many best coapproximations out of the example basis.
inline RatMatrix example_target_family() {
    return sparse_target(7, {{1, 1, 2}, {1, 5, 4}, {2, 2, 1}, {2, 6, 3}, {3, 3, 4},
                             {4, 4, 1}, {5, 1, -7}, {5, 5, -2}, {6, 2, 2}, {6, 6, 1}});
}

/// Target with a unique best coapproximation.
inline RatMatrix example_target_unique() {
    return sparse_target(7, {{1, 1, 3}, {1, 5, -5}, {2, 2, 1}, {2, 6, 3}, {3, 3, 4},
                             {4, 4, 1}, {5, 1, -5}, {5, 5, -3}, {6, 2, 2}, {6, 6, 1}});
}

/// Target with no best coapproximation at all.
inline RatMatrix example_target_empty() {
    return sparse_target(7, {{1, 1, 14}, {1, 5, 1}, {2, 2, 1}, {2, 6, 3}, {3, 3, 4},
                             {4, 4, 1}, {5, 1, 1}, {5, 5, -14}, {6, 2, 2}, {6, 6, 1}});
}

inline Basis standard_basis(std::size_t n) {
    Basis b;
    b.n = n;
    for (std::size_t k = 0; k < n; ++k) {
        DiagonalMatrix d{std::vector<Rational>(n, Rational(0))};
        d.entries[k] = 1;
        b.matrices.push_back(std::move(d));
    }
    return b;
}

/// Coproximinal four-dimensional subspace of l_inf^7.
inline std::vector<std::vector<Rational>> linf_y1() {
    return {rvec({6, 1, 4, 3, 3, 1, 1}), rvec({2, 5, 2, 3, 1, 5, 1}),
            rvec({4, 3, 8, 6, 2, 3, 2}), rvec({2, 1, 4, 9, 1, 1, 3})};
}

/// Two-dimensional subspace of l_inf^7 that is not coproximinal.
inline std::vector<std::vector<Rational>> linf_y2() {
    return {rvec({2, -5, 3, 1, -2, -5, 2}), rvec({-4, 2, 2, -2, -4, 2, -4})};
}

inline Basis vectors_to_basis(const std::vector<std::vector<Rational>>& rows) {
    Basis b;
    b.n = rows.front().size();
    for (const auto& r : rows) b.matrices.push_back({r});
    return b;
}

}  // namespace coapprox::testing
