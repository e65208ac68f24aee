#include <benchmark/benchmark.h>

#include "omega/cyclo.hpp"
#include "omega/distinguished.hpp"
#include "omega/modnt.hpp"
#include "omega/series.hpp"

namespace {

using namespace omega;

void BM_MultiplicativeOrder(benchmark::State& state) {
    const std::int64_t r = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiplicative_order(3, r));
    }
}
BENCHMARK(BM_MultiplicativeOrder)->Arg(1000003)->Arg(999999937);

void BM_Factorize(benchmark::State& state) {
    const std::int64_t n = 1000003LL * 1000033LL;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize(n));
    }
}
BENCHMARK(BM_Factorize);

void BM_IsDistinguished(benchmark::State& state) {
    const auto ctx = make_pair_context(3, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_distinguished(ctx, 616).distinguished);
    }
}
BENCHMARK(BM_IsDistinguished);

void BM_EnumerateDistinguished(benchmark::State& state) {
    const auto ctx = make_pair_context(3, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_distinguished(ctx, 2, state.range(0)));
    }
}
BENCHMARK(BM_EnumerateDistinguished)->Arg(204)->Arg(5000);

void BM_CycloMultiply(benchmark::State& state) {
    auto a = CycloElement::root_power(13, 5) + CycloElement::root_power(13, 1);
    auto b = CycloElement::root_power(13, 11) + CycloElement::constant(13, mpq_class(3, 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_CycloMultiply);

void BM_MakePsi(benchmark::State& state) {
    const std::int64_t r = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(make_psi(3, 1, r, 1));
    }
}
BENCHMARK(BM_MakePsi)->Arg(13)->Arg(49);

void BM_BasisMatrix(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(basis_matrix(3, 1, 13));
    }
}
BENCHMARK(BM_BasisMatrix);

void BM_InvertBasisMatrix(benchmark::State& state) {
    const auto m = basis_matrix(3, 1, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert_basis_matrix(m));
    }
}
BENCHMARK(BM_InvertBasisMatrix);

}  // namespace

BENCHMARK_MAIN();
