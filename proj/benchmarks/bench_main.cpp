#include <benchmark/benchmark.h>

#include "awshift/quadrature.hpp"

using namespace awshift;

namespace {

ParamSet bench_params() {
    return ParamSet::rational({rat(2), rat(3), rat(5), rat(7), rat(1, 2)});
}

void BM_genfrac_mul(benchmark::State& state) {
    ParamSet sym = ParamSet::symbolic();
    Scalar x = (sym.a() + sym.c()) / (sym.from_int(1) - sym.a() * sym.b());
    Scalar y = (sym.b() * sym.d() - sym.q()) / (sym.c() + sym.d());
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_genfrac_mul);

void BM_build_E6(benchmark::State& state) {
    ParamSet p = bench_params();
    for (auto _ : state) {
        AWFamily fam(p);
        benchmark::DoNotOptimize(fam.E(6));
    }
}
BENCHMARK(BM_build_E6);

void BM_compose_fundamental(benchmark::State& state) {
    ParamSet p = bench_params();
    DiffReflOp a = build_fundamental(p, FundamentalTag::Gplus);
    DiffReflOp b = build_fundamental(p, FundamentalTag::E13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose_graded(a, b));
    }
}
BENCHMARK(BM_compose_fundamental);

void BM_named_nonsym_build(benchmark::State& state) {
    ParamSet p = bench_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_named_nonsym(p, NamedNsTag::Gm));
    }
}
BENCHMARK(BM_named_nonsym_build);

void BM_weight_eval(benchmark::State& state) {
    set_precision(static_cast<unsigned>(state.range(0)));
    ParamSet p = ParamSet::default_numeric();
    WeightEvaluator w(p, WeightKind::Delta);
    BigComplex z = BigComplex::unit_root(3, 17);
    for (auto _ : state) {
        benchmark::DoNotOptimize(w.eval(z));
    }
    state.SetLabel("R=" + std::to_string(w.truncation()));
}
BENCHMARK(BM_weight_eval)->Arg(32)->Arg(64)->Arg(128);

} // namespace

BENCHMARK_MAIN();
