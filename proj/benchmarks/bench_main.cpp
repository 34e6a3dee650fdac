#include <benchmark/benchmark.h>

#include "linkhom/generator.hpp"
#include "linkhom/linalg.hpp"
#include "linkhom/snf.hpp"
#include "linkhom/solver.hpp"

namespace {

using namespace linkhom;

void BM_PolyProduct(benchmark::State& state) {
    Prng rng(1);
    const int deg = static_cast<int>(state.range(0));
    Poly p = rng.poly(deg, 1000) * Rational(1, 7), q = rng.poly(deg, 1000) * Rational(3, 11);
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyProduct)->Arg(4)->Arg(16)->Arg(64);

void BM_RrefRational(benchmark::State& state) {
    Prng rng(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(9);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(24)->Arg(48);

void BM_SmithNormalForm(benchmark::State& state) {
    Prng rng(3);
    const auto n = static_cast<std::size_t>(state.range(0));
    MatrixP m = random_poly_matrix(n, n, 3, 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_VectorBundleCheck(benchmark::State& state) {
    GenParams p;
    p.r = state.range(0);
    p.m = 5;
    p.m1 = 2;
    p.n = 5;
    p.s = Poly{0, -1, 1};
    p.seed = 17;
    LinkedChain chain = gen_valid_chain(p);
    for (auto _ : state) benchmark::DoNotOptimize(vector_bundle_check(chain));
}
BENCHMARK(BM_VectorBundleCheck)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CounterexampleFibers(benchmark::State& state) {
    LinkedChain chain = counterexample_chain();
    for (auto _ : state) benchmark::DoNotOptimize(vector_bundle_check(chain));
}
BENCHMARK(BM_CounterexampleFibers);

}  // namespace
BENCHMARK_MAIN();
