#include <benchmark/benchmark.h>

#include "symcount/enumerate.hpp"
#include "symcount/formulas.hpp"
#include "symcount/linalg.hpp"
#include "symcount/quotient.hpp"

namespace {

using namespace symcount;

void BM_Pairing(benchmark::State& state) {
    SymplecticModule m(PolarizationType({4, 8}));
    ModuleVector x = m.reduce({1, 3, 5, 7});
    ModuleVector y = m.reduce({2, 1, 4, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(m.pairing_numerator(x.coords.data(), y.coords.data()));
}
BENCHMARK(BM_Pairing);

void BM_Hnf(benchmark::State& state) {
    linalg::Mat rows = {{4, 1, 7, 2}, {0, 8, 3, 5}, {2, 2, 6, 1}, {1, 0, 0, 9},
                        {8, 0, 0, 0}, {0, 8, 0, 0}, {0, 0, 8, 0}, {0, 0, 0, 8}};
    for (auto _ : state) benchmark::DoNotOptimize(linalg::hnf(rows, 4));
}
BENCHMARK(BM_Hnf);

void BM_SnfWithTransform(benchmark::State& state) {
    linalg::Mat a = {{6, 4, 2, 8}, {4, 8, 6, 2}, {2, 6, 8, 4}, {8, 2, 4, 6}};
    for (auto _ : state) benchmark::DoNotOptimize(linalg::snf_with_transform(a));
}
BENCHMARK(BM_SnfWithTransform);

void BM_EnumerateK_d_d(benchmark::State& state) {
    SymplecticModule m(PolarizationType({state.range(0), state.range(0)}));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_isotropic(m, {}, 1));
}
BENCHMARK(BM_EnumerateK_d_d)->Arg(4)->Arg(6)->Arg(8);

void BM_CountGenus3(benchmark::State& state) {
    SymplecticModule m(PolarizationType({2, 2, 4}));
    for (auto _ : state) benchmark::DoNotOptimize(count_maximal_isotropic(m, {}, 1));
}
BENCHMARK(BM_CountGenus3);

void BM_NuClosedForm(benchmark::State& state) {
    PolarizationType t({12, 12});
    for (auto _ : state) benchmark::DoNotOptimize(nu(t));
}
BENCHMARK(BM_NuClosedForm);

void BM_QuotientWithForm(benchmark::State& state) {
    SymplecticModule m(PolarizationType({4, 4}));
    Subgroup w = Subgroup::from_generators(m, {m.reduce({2, 0, 0, 0})});
    for (auto _ : state) benchmark::DoNotOptimize(QuotientWithForm(w));
}
BENCHMARK(BM_QuotientWithForm);

}  // namespace

BENCHMARK_MAIN();
