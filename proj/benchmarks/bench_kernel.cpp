#include <benchmark/benchmark.h>

#include <random>

#include "modlie/cohomology.hpp"
#include "modlie/deformation.hpp"
#include "modlie/gf2.hpp"
#include "modlie/symplectic.hpp"

using namespace modlie;

namespace {

GF2Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto m = GF2Matrix::empty(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        GF2Vector v(cols);
        for (std::size_t c = 0; c < cols; ++c) {
            if (rng() & 1) v.set(c);
        }
        m.append_row(std::move(v));
    }
    return m;
}

}  // namespace

static void BM_Rank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNCubed);

static void BM_Nullspace(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(n / 2, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->RangeMultiplier(4)->Range(64, 1024);

static void BM_EchelonInsert(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = random_matrix(n, n, 3);
    for (auto _ : state) {
        EchelonBasis e(n);
        for (const auto& r : m.row_data()) e.insert(r);
        benchmark::DoNotOptimize(e.rank());
    }
}
BENCHMARK(BM_EchelonInsert)->RangeMultiplier(4)->Range(64, 1024);

static void BM_WeightBlockZero(benchmark::State& state) {
    const QuotientModel model(static_cast<std::size_t>(state.range(0)));
    const Weight zero(model.rank());
    for (auto _ : state) {
        const WeightBlock block(model.algebra(), zero);
        benchmark::DoNotOptimize(block.dim_h2());
    }
}
BENCHMARK(BM_WeightBlockZero)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Survey(benchmark::State& state) {
    const auto l = static_cast<std::size_t>(state.range(0));
    auto alg = build_chevalley_D(l);
    if (l % 2 == 1) alg = quotient_by_center(alg, center(alg));
    for (auto _ : state) benchmark::DoNotOptimize(h2_weight_survey(alg).total());
}
BENCHMARK(BM_Survey)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& state) {
    const auto alg = build_chevalley_D(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_jacobi(alg).passed);
}
BENCHMARK(BM_Jacobi)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_CupSquare(benchmark::State& state) {
    const QuotientModel model(5);
    const auto psi = phi(4, model);
    for (auto _ : state) benchmark::DoNotOptimize(cup_square(model.algebra(), psi).support_size());
}
BENCHMARK(BM_CupSquare);

static void BM_VerifyDeformation(benchmark::State& state) {
    const auto d4 = build_chevalley_D(4);
    const RootSystem sys(4);
    const auto psi = build_even_cocycle(d4, sys.simple_root(4) + sys.simple_root(3));
    const auto deformed = deform_bracket(d4, psi);
    for (auto _ : state) benchmark::DoNotOptimize(verify_deformation(deformed).passed);
}
BENCHMARK(BM_VerifyDeformation)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
