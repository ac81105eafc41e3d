#include "coapprox/oracle.hpp"

#include "coapprox/eigen.hpp"
#include "coapprox/errors.hpp"
#include "coapprox/rng.hpp"
#include "coapprox/solver.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace coapprox;
using namespace coapprox::testing;

namespace {

RatMatrix rat_square(std::initializer_list<std::initializer_list<long long>> rows) {
    RatMatrix m(rows.size(), rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<Rational> case2_alpha() { return {Rational(12, 17), Rational(0), Rational(-11, 17)}; }

// alpha of the worked example family, parametrized by its first diagonal x
std::vector<Rational> family_alpha(const Rational& x) {
    const Rational a = 4 * x / 17;
    return {a, (12 - 17 * a) / 16, -(4 + 9 * a) / 16};
}

}  // namespace

TEST_CASE("bj_orthogonal_diag fixtures") {
    CHECK(bj_orthogonal_diag({rvec({1, 1})}, rat_square({{1, 0}, {0, -1}})));
    CHECK(!bj_orthogonal_diag({rvec({2, 1})}, rat_square({{3, 0}, {0, 0}})));
    CHECK(bj_orthogonal_diag({rvec({1, 1})}, rat_square({{0, 1}, {-1, 0}})));
    CHECK_THROWS_AS(bj_orthogonal_diag({rvec({0, 0})}, rat_square({{1, 0}, {0, 1}})), ZeroDirection);

    // ties across signs are part of the attainment support
    CHECK(bj_orthogonal_diag({rvec({2, -2})}, rat_square({{0, 1}, {1, 0}})));
    CHECK(!bj_orthogonal_diag({rvec({2, -2})}, rat_square({{1, 0}, {0, -1}})));
}

TEST_CASE("minimizing ||D + lambda R|| confirms the non-orthogonal fixture") {
    // for D = ((2,1)), R = diag(3,0): min over lambda is 1 at lambda = -2/3
    const auto norm_at = [](double lambda) {
        return std::max(std::abs(2 + 3 * lambda), 1.0);
    };
    CHECK(golden_section_min(norm_at) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("bj_orthogonal_diag agrees with direct 1-D norm minimization") {
    SplitMix64 rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.next_int(1, 5));
        DiagonalMatrix d;
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            d.entries.emplace_back(rng.next_int(-6, 6));
            zero = zero && d.entries.back() == 0;
        }
        if (zero) {
            d.entries[0] = 1;
        }
        RatMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r(i, j) = rng.next_int(-6, 6);

        const bool claimed = bj_orthogonal_diag(d, r);

        FloatMatrix df(n, n), rf = to_float(r);
        for (std::size_t i = 0; i < n; ++i) df(i, i) = to_double(d.entries[i]);
        const double dnorm = spectral_norm(df);
        const double minval = golden_section_min([&](double lambda) {
            FloatMatrix m = df;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) += lambda * rf(i, j);
            return spectral_norm(m);
        });
        CHECK(claimed == (minval >= dnorm - 1e-6));
    }
}

TEST_CASE("verify_bj_directions: the unique solution passes, perturbations fail on the right class") {
    const auto basis = example_basis();
    const auto t2 = example_target_unique();
    const auto table = build_component_table(basis);
    const auto star = star_report(table);

    const auto pass = verify_bj_directions(case2_alpha(), t2, basis, star, 42);
    CHECK(pass.verdict == Verdict::Pass);
    CHECK(pass.samples_checked > 50);
    CHECK(pass.worst_violation == 0);

    // diag1 = 4 instead of 3 violates the class-1 membership W = {3}
    const auto bad = solve_exact(table.a_tilde, rvec({4, 0, 4, 1, -4, 0, 2}));
    REQUIRE(bad.has_value());
    const auto fail = verify_bj_directions(*bad, t2, basis, star, 42);
    CHECK(fail.verdict == Verdict::Fail);
    CHECK(!fail.inconclusive);
    REQUIRE(fail.failing_class.has_value());
    CHECK(*fail.failing_class == 0);
    REQUIRE(fail.failing_direction.has_value());
    CHECK(*fail.failing_direction == star.satisfying[0].beta);
}

TEST_CASE("verify_bj_directions: standard basis, residual with zero diagonal") {
    const auto basis = standard_basis(4);
    RatMatrix t(4, 4);
    SplitMix64 rng(5);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t(i, j) = rng.next_int(-9, 9);
    const auto table = build_component_table(basis);
    const auto star = star_report(table);
    const std::vector<Rational> alpha{t(0, 0), t(1, 1), t(2, 2), t(3, 3)};
    const auto verdict = verify_bj_directions(alpha, t, basis, star, 9);
    CHECK(verdict.verdict == Verdict::Pass);
}

TEST_CASE("verify_by_definition fixtures") {
    const auto basis = example_basis();
    const auto t2 = example_target_unique();

    const auto pass = verify_by_definition(case2_alpha(), t2, basis, 200, 1234);
    CHECK(pass.verdict == Verdict::Pass);
    CHECK(pass.samples_checked == 200);
    CHECK(pass.worst_violation <= 1e-9);

    // T in the span: both sides coincide, worst violation is zero
    Basis tiny;
    tiny.n = 2;
    tiny.matrices.push_back({rvec({1, 2})});
    RatMatrix t_in_span(2, 2);
    t_in_span(0, 0) = 3;
    t_in_span(1, 1) = 6;
    const auto identical = verify_by_definition({Rational(3)}, t_in_span, tiny, 100, 5);
    CHECK(identical.verdict == Verdict::Pass);
    CHECK(identical.worst_violation <= 1e-12);
}

TEST_CASE("verify_by_definition separates the family endpoint from points just outside") {
    const auto basis = example_basis();
    const auto t1 = example_target_family();

    const auto at_endpoint = verify_by_definition(family_alpha(Rational(11, 2)), t1, basis, 200, 77);
    CHECK(at_endpoint.verdict == Verdict::Pass);

    const auto outside = verify_by_definition(family_alpha(Rational(11, 2) + Rational(1, 10)), t1, basis, 200, 77);
    CHECK(outside.verdict == Verdict::Fail);
    CHECK(outside.worst_violation > 1e-6);
    CHECK(outside.failing_point.has_value());
}

TEST_CASE("solver and oracle agree across the three worked targets") {
    const auto basis = example_basis();
    const auto table = build_component_table(basis);
    const auto star = star_report(table);

    // family case: both endpoints and the sample point pass both oracles
    for (const auto& x : {Rational(1, 2), Rational(11, 2), Rational(3)}) {
        const auto alpha = family_alpha(x);
        CHECK(verify_by_definition(alpha, example_target_family(), basis, 200, 2).verdict == Verdict::Pass);
        CHECK(verify_bj_directions(alpha, example_target_family(), basis, star, 2).verdict == Verdict::Pass);
    }

    // empty case: every random candidate is rejected by some witness
    SplitMix64 rng(31);
    const auto t3 = example_target_empty();
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> alpha(3);
        for (auto& a : alpha) a = rng.next_rational(-10, 10, 4);
        const auto verdict = verify_bj_directions(alpha, t3, basis, star, 1000 + trial);
        CHECK(verdict.verdict == Verdict::Fail);
    }
}

TEST_CASE("monotone slack: interior points of a slack system stay Pass under tiny nudges") {
    // span{(1,1)} in l_inf^2 against (1,3): solutions are alpha in [1, 3],
    // and alpha = 2 sits strictly inside.
    Basis b;
    b.n = 2;
    b.matrices.push_back({rvec({1, 1})});
    RatMatrix t(2, 2);
    t(0, 0) = 1;
    t(1, 1) = 3;
    const auto table = build_component_table(b);
    const auto star = star_report(table);

    for (const auto& eps : {Rational(0), Rational(1, 100000), Rational(-1, 100000)}) {
        const std::vector<Rational> alpha{Rational(2) + eps};
        CHECK(verify_bj_directions(alpha, t, b, star, 123).verdict == Verdict::Pass);
        CHECK(verify_by_definition(alpha, t, b, 100, 123).verdict == Verdict::Pass);
    }

    // the attainment form at the center straddles zero with full margin
    RatMatrix center_residual(2, 2);
    center_residual(0, 0) = -1;
    center_residual(1, 1) = 1;
    const auto w = real_numerical_range(center_residual);
    CHECK(w.lo() <= -0.99);
    CHECK(w.hi() >= 0.99);
}
