#include "coapprox/eigen.hpp"
#include "coapprox/rng.hpp"
#include "coapprox/solver.hpp"

#include <benchmark/benchmark.h>

using namespace coapprox;

namespace {

Basis example_basis() {
    Basis b;
    b.n = 7;
    auto row = [](std::initializer_list<long long> xs) {
        DiagonalMatrix d;
        for (long long x : xs) d.entries.emplace_back(x);
        return d;
    };
    b.matrices.push_back(row({7, -5, 2, 6, -7, -5, 1}));
    b.matrices.push_back(row({1, 3, 4, 3, -1, 3, 2}));
    b.matrices.push_back(row({3, -7, -4, 5, -3, -7, -2}));
    return b;
}

RatMatrix family_target() {
    RatMatrix t(7, 7);
    t(0, 0) = 2;
    t(0, 4) = 4;
    t(1, 1) = 1;
    t(1, 5) = 3;
    t(2, 2) = 4;
    t(3, 3) = 1;
    t(4, 0) = -7;
    t(4, 4) = -2;
    t(5, 1) = 2;
    t(5, 5) = 1;
    return t;
}

Basis random_basis(SplitMix64& rng, std::size_t n, std::size_t m) {
    for (;;) {
        Basis b;
        b.n = n;
        for (std::size_t k = 0; k < m; ++k) {
            DiagonalMatrix d;
            for (std::size_t i = 0; i < n; ++i) d.entries.emplace_back(rng.next_int(-9, 9));
            b.matrices.push_back(std::move(d));
        }
        RatMatrix at(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < m; ++k) at(i, k) = b.matrices[k].entries[i];
        if (rank(at) == m) return b;
    }
}

void BM_FullPipeline_FamilyTarget(benchmark::State& state) {
    const Basis basis = example_basis();
    const RatMatrix target = family_target();
    for (auto _ : state) {
        auto report = best_coapproximation(basis, target);
        benchmark::DoNotOptimize(report.solution.kind);
    }
}
BENCHMARK(BM_FullPipeline_FamilyTarget);

void BM_StarReport_RandomBasis(benchmark::State& state) {
    SplitMix64 rng(7);
    const Basis basis = random_basis(rng, static_cast<std::size_t>(state.range(0)), 4);
    const ComponentTable table = build_component_table(basis);
    for (auto _ : state) {
        auto report = star_report(table);
        benchmark::DoNotOptimize(report.p);
    }
}
BENCHMARK(BM_StarReport_RandomBasis)->Arg(8)->Arg(16)->Arg(32);

void BM_StarPropertyLp(benchmark::State& state) {
    SplitMix64 rng(11);
    const Basis basis = random_basis(rng, 8, 4);
    const ComponentTable table = build_component_table(basis);
    for (auto _ : state) {
        auto witness = star_property_witness(table, 0);
        benchmark::DoNotOptimize(witness.has_value());
    }
}
BENCHMARK(BM_StarPropertyLp);

void BM_JacobiEigenInterval(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(13);
    FloatMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = rng.next_in(-5, 5);
    for (auto _ : state) {
        auto iv = symmetric_eigen_interval(s);
        benchmark::DoNotOptimize(iv.lo());
    }
}
BENCHMARK(BM_JacobiEigenInterval)->Arg(8)->Arg(24)->Arg(64);

void BM_SpectralNorm(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(17);
    FloatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.next_in(-5, 5);
    for (auto _ : state) benchmark::DoNotOptimize(spectral_norm(m));
}
BENCHMARK(BM_SpectralNorm)->Arg(8)->Arg(24)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
