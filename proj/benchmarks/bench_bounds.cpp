#include <benchmark/benchmark.h>

#include "bombieri/bombieri.hpp"

namespace bb = bombieri;

static bb::RandomInstance make_instance(std::size_t dim, std::size_t n) {
    return bb::random_family({.dim = dim, .n = n, .field = bb::Field::complex, .scale = 1.0, .seed = 42});
}

static void BM_Gram(benchmark::State& state) {
    const auto in = make_instance(16, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bb::gram(in.family));
    }
}
BENCHMARK(BM_Gram)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_GramEntryQNorm(benchmark::State& state) {
    const auto g = bb::gram(make_instance(16, 32).family);
    const bb::HolderExponent q(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bb::gram_entry_qnorm(g, q));
    }
}
BENCHMARK(BM_GramEntryQNorm)->Arg(1)->Arg(2)->Arg(11)->Arg(101);

static void BM_BesselHolder(benchmark::State& state) {
    const auto in = make_instance(8, static_cast<std::size_t>(state.range(0)));
    const bb::HolderExponent p(1.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bb::bessel_holder_bound(in.x, in.family, p));
    }
}
BENCHMARK(BM_BesselHolder)->Arg(2)->Arg(10)->Arg(32);

static void BM_VerifyAll(benchmark::State& state) {
    const auto in = make_instance(8, static_cast<std::size_t>(state.range(0)));
    const double p_list[] = {1.0, 1.1, 1.5, 2.0, 3.0, bb::kInfinity};
    for (auto _ : state) {
        benchmark::DoNotOptimize(bb::verify_all(in.x, in.family, in.c, p_list));
    }
}
BENCHMARK(BM_VerifyAll)->Arg(2)->Arg(10);

static void BM_ScanBox(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(bb::scan_f({}));
    }
}
BENCHMARK(BM_ScanBox)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
