#include <gtest/gtest.h>

#include <random>

#include "holodiff/assembler.hpp"
#include "holodiff/engine.hpp"
#include "holodiff/errors.hpp"
#include "holodiff/tamechar.hpp"

using namespace holodiff;

namespace {

// X(7) in characteristic 3 restricted to the order-6 subgroup Z/3 x| Z/2:
// one Sigma_3 orbit with jump 1, three Z/2 orbits, quotient of genus 0.
RamInput seven_delta() {
    return RamInput{HypoGroup(3, 1, 2, 1, 2), 1, 0,
                    {RamPoint{1, {1}, 2, 1, 1}, RamPoint{0, {}, 2, 1, 3}}};
}

RamInput seven_v() { return RamInput{HypoGroup(3, 1, 1, 0, 1), 1, 1, {RamPoint{1, {1}, 1, 0, 1}}}; }

}  // namespace

TEST(TameChar, UnramifiedTopLayerIsTrivialPlusRegular) {
    const RamInput input{HypoGroup(5, 0, 4, 0, 0), 0, 3, {}};
    const auto divisors = build_layers(input);
    const auto cover = tame_cover_data(input, divisors);
    const std::int64_t n = (cover.genus_Y - 1) / cover.quotient.order();
    EXPECT_EQ(regular_multiplicity(0, cover), n);
    EXPECT_EQ(dual_twisted_layer_character(0, cover),
              simple_char(cover.quotient, 0) + regular_char(cover.quotient) * Rational(n));
}

TEST(TameChar, InducedCharacterOfSigmaThreeQuotient) {
    const HypoGroup s3(3, 1, 2, 1, 2);
    const auto ind = induced_powers(s3, 2, 1);
    ASSERT_EQ(ind.size(), 2u);
    // Ind of the trivial character from Z/2 is the projective cover of S_0; of the sign, of S_1.
    EXPECT_EQ(ind[0], projective_char(s3, 0));
    EXPECT_EQ(ind[1], projective_char(s3, 1));
}

TEST(TameChar, SevenVLayers) {
    const auto input = seven_v();
    const auto result = run_engine(input);
    EXPECT_EQ(result.regular_multiplicities, (std::vector<std::int64_t>{1, 1, 0}));
    const HypoGroup trivial = result.cover.quotient;
    for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_EQ(result.layer_decomps[j].projectives, (Decomp{{{0, 1}, 1}}));
        EXPECT_FALSE(result.layer_decomps[j].has_chi_simple);
    }
    EXPECT_EQ(result.layer_decomps[2].projectives, (Decomp{{{0, 1}, 1}}));
    EXPECT_EQ(result.assembled.decomp, (Decomp{{{0, 3}, 1}}));
    EXPECT_EQ(result.genus_X, 3);
}

TEST(TameChar, SevenDeltaTopLayerCarriesChi) {
    const auto result = run_engine(seven_delta());
    EXPECT_EQ(result.genus_Y, 1);
    EXPECT_EQ(result.genus_X, 3);
    EXPECT_TRUE(result.layer_decomps.back().has_chi_simple == false);  // H/I = Z/2 has no p-part
    EXPECT_EQ(result.assembled.decomp, (Decomp{{{1, 3}, 1}}));
}

TEST(TameChar, FreeActionGivesTrivialPlusFreeModule) {
    // Z/3 acting freely: H^0 = k + (g(Z)-1) k[Z/3].
    const RamInput input{HypoGroup(3, 1, 1, 0, 1), 0, 2, {}};
    const auto result = run_engine(input);
    EXPECT_TRUE(result.layer_decomps[0].has_chi_simple);
    EXPECT_EQ(result.assembled.decomp, (Decomp{{{0, 1}, 1}, {{0, 3}, 1}}));
    EXPECT_EQ(result.genus_X, 4);
}

TEST(TameChar, DegreeBookkeeping) {
    const RamInput input{HypoGroup(3, 2, 2, 1, 8), 1, 1,
                         {RamPoint{1, {1}, 2, 1, 2}, RamPoint{0, {}, 2, 1, 2}}};
    const auto result = run_engine(input);
    std::int64_t total = 0;
    for (std::size_t j = 0; j < result.layer_characters.size(); ++j) {
        const std::int64_t expected = j + 1 == result.layer_characters.size()
                                          ? result.genus_Y
                                          : result.divisors.degree[j] + result.genus_Y - 1;
        EXPECT_EQ(result.layer_characters[j].degree(), CycloNumber(expected));
        total += expected;
    }
    EXPECT_EQ(total, result.genus_X);
}

TEST(TameChar, LayerIndicesBelowTopNeverCarryChi) {
    const RamInput input{HypoGroup(3, 2, 2, 1, 8), 1, 1,
                         {RamPoint{1, {1}, 2, 1, 2}, RamPoint{0, {}, 2, 1, 2}}};
    const auto result = run_engine(input);
    for (std::size_t j = 0; j + 1 < result.layer_decomps.size(); ++j) EXPECT_FALSE(result.layer_decomps[j].has_chi_simple);
    EXPECT_TRUE(result.layer_decomps.back().has_chi_simple);
}

TEST(TameChar, InconsistentDataIsRejected) {
    // Odd number of tame branch points for an order-2 inertia: Riemann-Hurwitz fails.
    const RamInput input{HypoGroup(3, 0, 2, 0, 0), 0, 0, {RamPoint{0, {}, 2, 1, 1}}};
    EXPECT_THROW(run_engine(input), ConsistencyError);
}

TEST(Assembler, TameOnlyCopiesTheLayer) {
    const HypoGroup h(5, 1, 4, 1, 2);
    const std::vector<Decomp> layers{{{{0, 5}, 2}, {{1, 1}, 1}}};
    EXPECT_EQ(assemble_labels(layers, h, 0).decomp, layers[0]);
}

TEST(Assembler, RegularLayersGiveRegularModules) {
    const HypoGroup h(3, 1, 2, 1, 2);
    std::vector<LayerDecomp> layers(3, LayerDecomp{{{{0, 1}, 2}, {{1, 1}, 2}}, false});
    const auto out = assemble(layers, h, 1);
    EXPECT_EQ(out.decomp, (Decomp{{{0, 3}, 2}, {{1, 3}, 2}}));
}

TEST(Assembler, NegativeCountIsReported) {
    const HypoGroup h(3, 1, 1, 0, 1);
    std::vector<Decomp> layers{{}, {{{0, 1}, 1}}, {}};
    EXPECT_THROW(assemble_labels(layers, h, 1), ConsistencyError);
}

TEST(Assembler, SliceRoundTrip) {
    std::mt19937_64 rng(17);
    const std::vector<std::pair<HypoGroup, int>> cases{
        {HypoGroup(3, 2, 2, 1, 8), 1}, {HypoGroup(3, 2, 2, 1, 8), 2}, {HypoGroup(5, 2, 4, 1, 7), 1},
        {HypoGroup(2, 3, 3, 0, 1), 2}, {HypoGroup(7, 1, 6, 1, 3), 0}};
    for (const auto& [group, n_I] : cases) {
        for (int trial = 0; trial < 20; ++trial) {
            Decomp module;
            for (int k = 0; k < 6; ++k) {
                const IndecLabel label{std::uniform_int_distribution<std::int64_t>(0, group.c() - 1)(rng),
                                       std::uniform_int_distribution<std::int64_t>(1, group.p_power())(rng)};
                module[label] += std::uniform_int_distribution<std::int64_t>(1, 3)(rng);
            }
            const auto layers = slice(module, group, n_I);
            EXPECT_EQ(assemble_labels(layers, group, n_I).decomp, module) << group.describe();
        }
    }
}

TEST(Assembler, EngineOutputSlicesBackToLayers) {
    const RamInput input{HypoGroup(3, 2, 2, 1, 8), 1, 1,
                         {RamPoint{1, {1}, 2, 1, 2}, RamPoint{0, {}, 2, 1, 2}}};
    const auto result = run_engine(input);
    const auto sliced = slice(result.assembled.decomp, input.group, input.n_I);
    for (std::size_t j = 0; j < sliced.size(); ++j) {
        EXPECT_EQ(sliced[j], layer_labels(result.cover.quotient, result.layer_decomps[j]));
    }
}
