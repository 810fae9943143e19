#include <gtest/gtest.h>

#include <random>

#include "holodiff/errors.hpp"
#include "holodiff/hypogroup.hpp"
#include "support/random_groups.hpp"

using namespace holodiff;

namespace {

// Inner product summed over explicitly listed elements, independent of the
// class-size bookkeeping inside the library.
Rational brute_inner_product(const BrauerChar& x, const BrauerChar& y) {
    const HypoGroup& g = x.group();
    CycloAccumulator total(g.c());
    for (std::int64_t j = 0; j < g.c(); ++j) {
        for (std::int64_t i = 0; i < g.p_power(); ++i) {
            const HypoElement e{i, j};
            // p-regular iff the element order is prime to p.
            std::int64_t order = 1;
            HypoElement acc = e;
            while (!(acc == g.identity())) {
                acc = g.multiply(acc, e);
                ++order;
            }
            if (order % g.p() == 0) continue;
            total.add_product(x.at(g.inverse(e).j), y.at(j));
        }
    }
    return total.result().rational_value() / Rational(g.order());
}

}  // namespace

TEST(HypoGroup, RejectsInvalidParameters) {
    EXPECT_THROW(HypoGroup(3, 1, 3, 0, 1), ValidationError);   // c not prime to p
    EXPECT_THROW(HypoGroup(3, 1, 4, 1, 2), ValidationError);   // chi of order 4 does not divide 2
    EXPECT_THROW(HypoGroup(5, 1, 4, 1, 4), ValidationError);   // u of order 2, chi of order 4
    EXPECT_THROW(HypoGroup(4, 1, 1, 0, 1), ValidationError);   // p not prime
    EXPECT_NO_THROW(HypoGroup(5, 1, 4, 1, 2));
    EXPECT_NO_THROW(HypoGroup(3, 0, 2, 1, 0));
}

TEST(HypoGroup, PRegularElementsAreConjugateToRhoPowers) {
    const HypoGroup g(7, 1, 6, 1, 3);
    for (const auto& e : g.p_regular_elements()) {
        bool found = false;
        for (std::int64_t i = 0; i < g.p_power() && !found; ++i) {
            for (std::int64_t j = 0; j < g.c() && !found; ++j) {
                const HypoElement h{i, j};
                found = g.multiply(g.multiply(h, e), g.inverse(h)) == HypoElement{0, e.j};
            }
        }
        EXPECT_TRUE(found) << e.i << "," << e.j;
    }
    std::int64_t total = 0;
    for (std::int64_t j = 0; j < g.c(); ++j) total += g.class_size(j);
    EXPECT_EQ(total, static_cast<std::int64_t>(g.p_regular_elements().size()));
    EXPECT_EQ(g.class_size(0), 1);
}

TEST(HypoGroup, SimpleCharacterValues) {
    const HypoGroup c4(3, 0, 4, 0, 0);
    EXPECT_EQ(simple_char(c4, 0), BrauerChar(c4, {1, 1, 1, 1}));
    EXPECT_EQ(simple_char(c4, 2).at(2), CycloNumber(1));
    const HypoGroup c3(2, 0, 3, 0, 0);
    EXPECT_EQ(simple_char(c3, 1).at(1), CycloNumber::zeta(3, 1));
}

TEST(HypoGroup, ProjectiveCharacters) {
    const HypoGroup semisimple(5, 0, 4, 0, 0);
    EXPECT_EQ(projective_char(semisimple, 3), simple_char(semisimple, 3));

    const HypoGroup s3(3, 1, 2, 1, 2);
    const auto expected = simple_char(s3, 0) + simple_char(s3, 1) + simple_char(s3, 0);
    EXPECT_EQ(projective_char(s3, 0), expected);
    EXPECT_EQ(projective_char(s3, 0).degree(), CycloNumber(3));

    const HypoGroup z3(3, 1, 1, 0, 1);
    EXPECT_EQ(projective_char(z3, 0).degree(), CycloNumber(3));
    EXPECT_EQ(inner_product(simple_char(z3, 0), simple_char(z3, 0)), Rational(1, 3));
}

TEST(HypoGroup, LabelCountMatchesGroupOrder) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = fixtures::random_hypo_group(rng, 2000);
        EXPECT_EQ(static_cast<std::int64_t>(indecomposable_labels(g).size()), g.order());
    }
}

TEST(HypoGroup, ChiRotationOfOrderPMinusOneIsTrivial) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = fixtures::random_hypo_group(rng, 2000);
        for (std::int64_t a = 0; a < g.c(); ++a) {
            std::int64_t b = a;
            for (std::int64_t k = 0; k < g.p() - 1; ++k) b = g.chi_shift(b, 1);
            EXPECT_EQ(b, a);
        }
    }
}

TEST(HypoGroup, OrthogonalityAgainstBruteForce) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 12; ++trial) {
        const auto g = fixtures::random_hypo_group(rng, 120);
        for (std::int64_t a = 0; a < g.c(); ++a) {
            const auto proj = projective_char(g, a);
            const auto fast = pair_with_simples(proj);
            for (std::int64_t b = 0; b < g.c(); ++b) {
                const Rational expected(a == b ? 1 : 0);
                EXPECT_EQ(fast[b], expected) << g.describe();
                EXPECT_EQ(inner_product(proj, simple_char(g, b)), expected);
                EXPECT_EQ(brute_inner_product(proj, simple_char(g, b)), expected);
            }
        }
    }
}

TEST(HypoGroup, InnerProductRejectsMismatchedGroups) {
    const HypoGroup a(3, 1, 2, 1, 2);
    const HypoGroup b(3, 0, 2, 1, 0);
    EXPECT_THROW(inner_product(simple_char(a, 0), simple_char(b, 0)), std::invalid_argument);
}

TEST(HypoGroup, DecomposeProjective) {
    const HypoGroup g(3, 1, 2, 1, 2);
    EXPECT_EQ(decompose_projective(projective_char(g, 1)), (Decomp{{{1, 3}, 1}}));
    EXPECT_EQ(decompose_projective(regular_char(g)), (Decomp{{{0, 3}, 1}, {{1, 3}, 1}}));
    const auto ch = projective_char(g, 0) * Rational(2) + projective_char(g, 1);
    const auto d = decompose_projective(ch);
    EXPECT_EQ(d, (Decomp{{{0, 3}, 2}, {{1, 3}, 1}}));
    EXPECT_EQ(decomp_char(g, d), ch);
    EXPECT_EQ(dimension(d), 9);
    EXPECT_THROW(decompose_projective(simple_char(g, 0)), ConsistencyError);
}

TEST(HypoGroup, DecomposeIsLeftInverseOnRandomSums) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = fixtures::random_hypo_group(rng, 200);
        Decomp d;
        for (std::int64_t a = 0; a < g.c(); ++a) {
            const auto m = std::uniform_int_distribution<std::int64_t>(0, 3)(rng);
            if (m != 0) d[IndecLabel{a, g.p_power()}] = m;
        }
        EXPECT_EQ(decompose_projective(decomp_char(g, d)), d) << g.describe();
    }
}

TEST(HypoGroup, RegularCharacterIsSumOfProjectives) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = fixtures::random_hypo_group(rng, 300);
        BrauerChar sum = BrauerChar::zero(g);
        for (std::int64_t a = 0; a < g.c(); ++a) sum += projective_char(g, a);
        EXPECT_EQ(sum, regular_char(g)) << g.describe();
    }
}
