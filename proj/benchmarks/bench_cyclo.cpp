#include <benchmark/benchmark.h>

#include <cstdint>

#include "holodiff/cyclo.hpp"

namespace {

using holodiff::CycloNumber;
using holodiff::Rational;

// Sum of 1/(zeta^k - 1) style terms: products and inverses in Q(zeta_N).
void BM_CycloInverse(benchmark::State& state) {
    const std::int64_t conductor = state.range(0);
    const CycloNumber x = CycloNumber::zeta(conductor, 1) - CycloNumber(1);
    for (auto _ : state) benchmark::DoNotOptimize(CycloNumber(1) / x);
}
BENCHMARK(BM_CycloInverse)->Arg(7)->Arg(31)->Arg(97);

void BM_CycloMultiply(benchmark::State& state) {
    const std::int64_t conductor = state.range(0);
    CycloNumber x(Rational(1, 3));
    CycloNumber y(2);
    for (std::int64_t e = 1; e < conductor; e += 3) x += CycloNumber::zeta(conductor, e);
    for (std::int64_t e = 2; e < conductor; e += 5) y -= CycloNumber::zeta(conductor, e);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CycloMultiply)->Arg(12)->Arg(97)->Arg(499);

void BM_Accumulator(benchmark::State& state) {
    const std::int64_t conductor = state.range(0);
    for (auto _ : state) {
        holodiff::CycloAccumulator acc(conductor);
        for (std::int64_t e = 0; e < conductor; ++e) acc.add(e * e % conductor, Rational(e + 1, 2));
        benchmark::DoNotOptimize(acc.result());
    }
}
BENCHMARK(BM_Accumulator)->Arg(97)->Arg(997);

}  // namespace
