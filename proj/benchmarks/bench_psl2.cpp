#include <benchmark/benchmark.h>

#include "holodiff/psl2mod3.hpp"

namespace {

using namespace holodiff;

void BM_FullDecomposition(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(psl2::full_decomposition(state.range(0)));
}
BENCHMARK(BM_FullDecomposition)->Arg(37)->Arg(199)->Arg(499)->Unit(benchmark::kMillisecond);

void BM_H0Brauer(benchmark::State& state) {
    const auto classes = psl2::make_class_data(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(psl2::h0_brauer(classes));
}
BENCHMARK(BM_H0Brauer)->Arg(37)->Arg(499)->Unit(benchmark::kMillisecond);

void BM_ClassNumber(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(psl2::class_number(state.range(0)));
}
BENCHMARK(BM_ClassNumber)->Arg(163)->Arg(499);

void BM_VerifyAll(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(psl2::verify_all(state.range(0)));
}
BENCHMARK(BM_VerifyAll)->Arg(97)->Unit(benchmark::kMillisecond);

}  // namespace
