#pragma once

#include "coapprox/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace coapprox {

/// Diagonal matrix ((a_11, ..., a_nn)), stored as its diagonal.
struct DiagonalMatrix {
    std::vector<Rational> entries;

    std::size_t n() const { return entries.size(); }
    bool is_zero() const {
        for (const auto& e : entries)
            if (e != 0) return false;
        return true;
    }
};

/// Ordered set of m linearly independent diagonal matrices in D_n.
struct Basis {
    std::size_t n = 0;
    std::vector<DiagonalMatrix> matrices;

    std::size_t m() const { return matrices.size(); }
};

/// One equivalence class of components (rows equal up to sign).
/// representative is the smallest member index and fixes the + sign.
/// All zero rows are pooled into a single class with is_zero set and
/// p_minus empty; that class never satisfies the *-Property.
struct EquivClass {
    std::size_t representative = 0;
    std::vector<std::size_t> p_plus;
    std::vector<std::size_t> p_minus;
    bool is_zero = false;

    std::size_t size() const { return p_plus.size() + p_minus.size(); }
};

/// The n x m component matrix together with its sign-equivalence classes.
struct ComponentTable {
    RatMatrix a_tilde;               // row i = i-th component
    std::vector<EquivClass> classes; // ordered by ascending representative
    std::vector<std::pair<std::size_t, int>> class_of;  // index -> (class id, sign)

    std::size_t n() const { return a_tilde.rows(); }
    std::size_t m() const { return a_tilde.cols(); }
    std::span<const Rational> component(std::size_t i) const { return a_tilde.row(i); }
};

/// A certified *-Property witness: |<beta, rep>| exceeds every
/// non-equivalent component's |<beta, .>| by at least margin.
struct StarWitness {
    std::size_t class_id = 0;
    std::vector<Rational> beta;
    Rational margin;
};

struct StarReport {
    std::vector<StarWitness> satisfying;       // ascending class id
    std::vector<std::size_t> non_satisfying;   // class ids
    std::size_t p = 0;                         // number of satisfying classes
    std::size_t m = 0;                         // basis size
};

struct Classification {
    bool coproximinal = false;
    bool co_chebyshev = false;
    std::size_t p = 0, m = 0;
    bool singleton_classes = false;  // every satisfying class has one member
};

/// Builds the component matrix (row i = (a^1_ii, ..., a^m_ii)) and groups
/// rows into exact +/- equivalence classes. Throws DependentBasis when the
/// component matrix has rank < m.
ComponentTable build_component_table(const Basis& basis);

/// Decides the *-Property for one class by an exact rational LP:
/// maximize t s.t. <beta, rep - other> >= t, <beta, rep + other> >= t over
/// all other class representatives, <beta, rep> >= t, -1 <= beta_k <= 1.
/// The class satisfies the *-Property iff the optimum is strictly positive.
/// Throws ZeroClass for the zero class.
std::optional<StarWitness> star_property_witness(const ComponentTable& table, std::size_t class_id);

/// Sufficient-condition shortcut: when the representative row lies outside
/// the span of the other classes' representatives, any nullspace vector of
/// that span not orthogonal to the representative is a witness. Returns
/// nullopt when inconclusive (the LP remains authoritative).
std::optional<StarWitness> star_fast_path(const ComponentTable& table, std::size_t class_id);

/// Runs the fast path then the LP on every nonzero class. Enforces the
/// guaranteed bounds p >= 1 and p >= m (InternalInvariantViolated otherwise).
StarReport star_report(const ComponentTable& table);

/// coproximinal iff p = m; co-Chebyshev iff additionally every satisfying
/// class is a singleton.
Classification classify_subspace(const StarReport& report, const ComponentTable& table);

/// Diagonal of sum(beta_k A_k) as exact rationals: entry i = <beta, row_i>.
std::vector<Rational> combine_diagonal(const ComponentTable& table, std::span<const Rational> beta);

}  // namespace coapprox
