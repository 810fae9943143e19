#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "holodiff/engine.hpp"
#include "holodiff/hypogroup.hpp"
#include "holodiff/psl2mod3.hpp"
#include "holodiff/ramfilter.hpp"

namespace {

using namespace holodiff;

void BM_DivisorMultiplicity(benchmark::State& state) {
    const std::vector<std::int64_t> jumps{2, 11, 38};
    for (auto _ : state) {
        std::int64_t total = 0;
        for (std::int64_t t = 0; t < 125; ++t) total += divisor_multiplicity(5, 3, jumps, t);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_DivisorMultiplicity);

void BM_EnumerationOracle(benchmark::State& state) {
    const std::vector<std::int64_t> jumps{2, 11, 38};
    for (auto _ : state) {
        std::int64_t total = 0;
        for (std::int64_t t = 0; t < 125; ++t) total += enumeration_oracle(5, 3, jumps, t);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_EnumerationOracle);

void BM_InnerProduct(benchmark::State& state) {
    // Z/7 x| Z/c with a generator acting through the unit 3, which has order 6.
    const std::int64_t c = state.range(0);
    const HypoGroup g(7, 1, c, c / 6, 3);
    const BrauerChar proj = projective_char(g, 0);
    const BrauerChar simple = simple_char(g, 0);
    for (auto _ : state) benchmark::DoNotOptimize(inner_product(proj, simple));
}
BENCHMARK(BM_InnerProduct)->Arg(6)->Arg(30);

// The engine on the last restriction subgroup in the list for l.
void BM_EngineRestriction(benchmark::State& state) {
    const auto c = psl2::classify(state.range(0));
    const auto subgroups = psl2::restriction_subgroups(c);
    const RamInput input = psl2::restriction_input(c, subgroups.back());
    for (auto _ : state) benchmark::DoNotOptimize(run_engine(input));
}
BENCHMARK(BM_EngineRestriction)->Arg(37)->Arg(199)->Unit(benchmark::kMillisecond);

}  // namespace
