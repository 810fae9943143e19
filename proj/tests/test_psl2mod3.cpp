#include <gtest/gtest.h>

#include <array>
#include <map>
#include <string>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"
#include "holodiff/psl2mod3.hpp"

using namespace holodiff;
using namespace holodiff::psl2;

namespace {

using Summands = std::map<std::string, std::int64_t>;

Summands summands(const FullVariant& v) {
    Summands out;
    for (std::size_t i = 0; i < v.decomp.projective.size(); ++i) {
        if (v.decomp.projective[i] != 0) out[projective_name(v.blocks, i)] = v.decomp.projective[i];
    }
    for (const auto& u : v.decomp.uniserials) out[uniserial_name(v.blocks, u)] += 1;
    return out;
}

const FullVariant& only_variant(const FullDecomposition& full) {
    EXPECT_EQ(full.variants.size(), 1u);
    return full.variants.front();
}

// Elements of PSL(2, l) of order prime to 3, counted by brute force over
// SL(2, l) and halved for the quotient by -1.
std::int64_t brute_force_regular_count(std::int64_t l) {
    using Mat = std::array<std::int64_t, 4>;
    auto mul = [l](const Mat& a, const Mat& b) {
        return Mat{(a[0] * b[0] + a[1] * b[2]) % l, (a[0] * b[1] + a[1] * b[3]) % l,
                   (a[2] * b[0] + a[3] * b[2]) % l, (a[2] * b[1] + a[3] * b[3]) % l};
    };
    const Mat id{1, 0, 0, 1};
    const Mat minus_id{l - 1, 0, 0, l - 1};
    std::int64_t count = 0;
    for (std::int64_t a = 0; a < l; ++a)
        for (std::int64_t b = 0; b < l; ++b)
            for (std::int64_t c = 0; c < l; ++c)
                for (std::int64_t d = 0; d < l; ++d) {
                    if (nt::mod(a * d - b * c, l) != 1) continue;
                    const Mat x{a, b, c, d};
                    // Order of the image in PSL: least k with x^k = +-1.
                    Mat p = x;
                    std::int64_t k = 1;
                    while (p != id && p != minus_id) {
                        p = mul(p, x);
                        ++k;
                    }
                    if (k % 3 != 0) ++count;
                }
    return count / 2;
}

// Independent count of sum_x (|G_x| - 1) over points of X(l) with non-trivial
// stabilizer in a subgroup: each non-trivial element is counted by its fixed
// points on X(l).
std::int64_t fixed_point_mass(const Psl2Case& c, std::int64_t order3, std::int64_t involutions, std::int64_t order_l) {
    const std::int64_t l = c.ell;
    const std::int64_t delta = l % 4 == 1 ? 1 : -1;
    return order3 * (l - c.epsilon) / 6 + involutions * (l - delta) / 2 + order_l * (l - 1) / 2;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST(Psl2Classify, CaseTable) {
    struct Row {
        std::int64_t ell, epsilon;
        int n;
        std::int64_t m;
        int case_id;
    };
    for (const Row& r : {Row{7, 1, 1, 1, 2}, Row{11, -1, 1, 2, 4}, Row{13, 1, 1, 2, 3}, Row{17, -1, 2, 1, 1},
                         Row{19, 1, 2, 1, 2}, Row{29, -1, 1, 5, 1}, Row{31, 1, 1, 5, 2}, Row{37, 1, 2, 2, 3},
                         Row{53, -1, 3, 1, 1}, Row{59, -1, 1, 10, 4}}) {
        const Psl2Case c = classify(r.ell);
        EXPECT_EQ(c.epsilon, r.epsilon) << r.ell;
        EXPECT_EQ(c.n, r.n) << r.ell;
        EXPECT_EQ(c.m, r.m) << r.ell;
        EXPECT_EQ(c.case_id, r.case_id) << r.ell;
        EXPECT_EQ(2 * c.sylow_order() * c.m, r.ell - r.epsilon);
    }
}

TEST(Psl2Classify, RejectsSmallAndComposite) {
    EXPECT_THROW(classify(5), ValidationError);
    EXPECT_THROW(classify(3), ValidationError);
    EXPECT_THROW(classify(25), ValidationError);
    EXPECT_THROW(classify(91), ValidationError);
    EXPECT_THROW(genus(9), ValidationError);
}

TEST(Psl2Classify, GenusOfSmallModularCurves) {
    EXPECT_EQ(genus(7), 3);
    EXPECT_EQ(genus(11), 26);
    EXPECT_EQ(genus(13), 50);
    EXPECT_EQ(genus(17), 133);
    EXPECT_EQ(genus(19), 196);
}

TEST(Psl2Classify, ClassNumberAgreesWithReducedForms) {
    const std::map<std::int64_t, std::int64_t> known{{7, 1}, {11, 1}, {19, 1}, {23, 3}, {31, 3}, {43, 1}, {47, 5}, {71, 7}};
    for (const auto& [l, h] : known) {
        EXPECT_EQ(class_number(l), h) << l;
        EXPECT_EQ(reduced_form_count(-l), h) << l;
    }
    EXPECT_THROW(class_number(13), ValidationError);
}

TEST(Psl2Classify, RiemannHurwitzForTheWholeGroup) {
    // In characteristic 3 the points over j = 0 = 1728 have stabilizer of
    // order 6 with different exponent 7; cusps have stabilizer of order l.
    for (std::int64_t l : {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
        const std::int64_t order = classify(l).group_order();
        EXPECT_EQ(2 * genus(l) - 2, -2 * order + order / l * (l - 1) + order / 6 * 7) << l;
    }
}

// ---------------------------------------------------------------------------

TEST(Psl2Classes, RegularElementCountMatchesBruteForce) {
    for (std::int64_t l : {7, 11, 13}) {
        EXPECT_EQ(make_class_data(l)->regular_element_count(), brute_force_regular_count(l)) << l;
    }
}

TEST(Psl2Classes, ClassNamesForSeven) {
    const auto cd = make_class_data(7);
    std::vector<std::string> names;
    for (const auto& cl : cd->classes()) names.push_back(cl.name());
    EXPECT_EQ(names, (std::vector<std::string>{"e", "r1", "r2", "s", "w^1"}));
}

TEST(Psl2Classes, H0AtUnipotentClassesFromGeometricSum) {
    // h0(r) = 1 + sum over quadratic residues a of 1 / (zeta^a - 1).
    for (std::int64_t l : {7, 11, 13}) {
        const auto cd = make_class_data(l);
        CycloNumber sum(1);
        for (std::int64_t a = 1; a <= (l - 1) / 2; ++a) {
            sum += (CycloNumber::zeta(l, a * a % l) - CycloNumber(1)).inverse();
        }
        const ClassFunction h0 = h0_brauer(cd);
        EXPECT_EQ(h0.at(ClassKind::order_ell_1), sum) << l;
        EXPECT_EQ(h0.at(ClassKind::order_ell_2), sum.conj()) << l;
        EXPECT_EQ(h0.degree(), genus(l));
    }
}

TEST(Psl2Classes, InnerProductOfTrivialWithItself) {
    const auto cd = make_class_data(13);
    const auto bd = block_data(cd);
    const auto& triv = bd.simples[bd.simple_index("T_{0,0}")].brauer;
    // Sum over 3-regular elements only, so the value is |G_reg| / |G|.
    EXPECT_EQ(inner_product(triv, triv), Rational(cd->regular_element_count(), cd->psl2_case().group_order()));
}

// ---------------------------------------------------------------------------

class Psl2Blocks : public ::testing::TestWithParam<std::int64_t> {};

TEST_P(Psl2Blocks, ProjectivesAreDualToSimples) {
    const auto bd = block_data(make_class_data(GetParam()));
    for (std::size_t i = 0; i < bd.simples.size(); ++i) {
        const ClassFunction proj = bd.projective_char(i);
        EXPECT_EQ(proj.degree(), bd.projective_dimension(i));
        for (std::size_t j = 0; j < bd.simples.size(); ++j) {
            EXPECT_EQ(inner_product(proj, bd.simples[j].brauer), Rational(i == j ? 1 : 0))
                << bd.simples[i].name << " vs " << bd.simples[j].name;
        }
    }
}

TEST_P(Psl2Blocks, DimensionsSumToGroupOrder) {
    const auto bd = block_data(make_class_data(GetParam()));
    std::int64_t total = 0;
    for (std::size_t i = 0; i < bd.simples.size(); ++i) total += bd.simples[i].dimension * bd.projective_dimension(i);
    EXPECT_EQ(total, classify(GetParam()).group_order());
}

TEST_P(Psl2Blocks, SimpleCountEqualsRegularClassCount) {
    const auto cd = make_class_data(GetParam());
    EXPECT_EQ(block_data(cd).simples.size(), cd->size());
}

INSTANTIATE_TEST_SUITE_P(SmallPrimes, Psl2Blocks, ::testing::Values(7, 11, 13, 17, 19, 29, 31, 37, 53));

TEST(Psl2Blocks, UniserialFactorsFollowTheTree) {
    const auto bd = block_data(make_class_data(19));   // case 2, principal block is a line with 3 vertices
    const auto t0 = bd.simple_index("T_0");
    const auto t1 = bd.simple_index("T_1");
    EXPECT_EQ(bd.uniserial_factors(t1, 4), (std::vector<std::size_t>{t1, t0, t1, t0}));
    EXPECT_EQ(bd.uniserial_constituents(t1, 7), 4);
    EXPECT_THROW(bd.uniserial_factors(t1, 10), ValidationError);

    const auto leaf = block_data(make_class_data(17));   // case 1, leaf shape
    const auto st = leaf.simple_index("T~_0");
    const auto one = leaf.simple_index("T_0");
    EXPECT_EQ(leaf.uniserial_factors(one, 2), (std::vector<std::size_t>{one, st}));
    EXPECT_THROW(leaf.uniserial_factors(one, 3), ValidationError);
    EXPECT_EQ(leaf.uniserial_constituents(st, 3), 3);
}

// ---------------------------------------------------------------------------

TEST(Psl2Full, SevenIsOneProjective) {
    const auto full = full_decomposition(7);
    const auto& v = only_variant(full);
    EXPECT_EQ(summands(v), (Summands{{"P(G,gamma_2)", 1}}));
    EXPECT_EQ(v.decomp.total_dimension, 3);
}

TEST(Psl2Full, ElevenPicksTheNegativeSign) {
    const auto full = full_decomposition(11);
    ASSERT_FALSE(full.ambiguous());
    const auto& v = full.variants.front();
    EXPECT_EQ(v.s01, -1);
    EXPECT_EQ(summands(v), (Summands{{"P(G,T~_0)", 1}, {"U_{T_{0,1},1}", 1}}));
    EXPECT_EQ(v.blocks.projective_dimension(v.blocks.simple_index("T~_0")), 21);
}

TEST(Psl2Full, Thirteen) {
    const auto full = full_decomposition(13);
    const auto& v = only_variant(full);
    EXPECT_EQ(summands(v), (Summands{{"P(G,eta_1)", 1}, {"P(G,eta_2)", 1}, {"P(G,eta_3)", 1}, {"U_{T_{0,1},2}", 1}}));
}

TEST(Psl2Full, Seventeen) {
    const auto full = full_decomposition(17);
    const auto& v = only_variant(full);
    EXPECT_EQ(summands(v), (Summands{{"P(G,T~_0)", 1}, {"P(G,eta_1)", 1}, {"P(G,eta_3)", 1}, {"U_{T~_0,1}", 1}}));
    EXPECT_EQ(v.blocks.projective_dimension(v.blocks.simple_index("T~_0")), 81);
}

TEST(Psl2Full, Nineteen) {
    const auto full = full_decomposition(19);
    const auto& v = only_variant(full);
    EXPECT_EQ(summands(v), (Summands{{"P(G,gamma_2)", 1},
                                     {"P(G,eta_1)", 1},
                                     {"P(G,eta_2)", 2},
                                     {"P(G,eta_3)", 1},
                                     {"P(G,eta_4)", 2},
                                     {"U_{T_1,7}", 1}}));
    EXPECT_EQ(v.blocks.uniserial_char(v.blocks.simple_index("T_1"), 7).degree(), 79);
}

TEST(Psl2Full, ThirtyOne) {
    const auto full = full_decomposition(31);
    const auto& v = only_variant(full);
    Summands expected{{"P(G,T_1)", 2}, {"P(G,T~_1)", 1}, {"P(G,T~_2)", 1}, {"P(G,gamma_2)", 3},
                      {"U_{T~_1,2}", 1}, {"U_{T~_2,2}", 1}};
    for (int k = 1; k <= 7; ++k) expected["P(G,eta_" + std::to_string(k) + ")"] = k % 2 == 1 ? 2 : 3;
    EXPECT_EQ(summands(v), expected);
}

TEST(Psl2Full, ThirtySeven) {
    const auto full = full_decomposition(37);
    const auto& v = only_variant(full);
    Summands expected{{"P(G,T_{1,1})", 1}, {"P(G,T_{0,1})", 1}, {"P(G,T_{1,0})", 1},
                      {"U_{T_{1,1},7}", 1}, {"U_{T_{0,1},6}", 1}};
    for (int k = 1; k <= 9; ++k) expected["P(G,eta_" + std::to_string(k) + ")"] = 3;
    EXPECT_EQ(summands(v), expected);
    EXPECT_EQ(v.blocks.projective_dimension(v.blocks.simple_index("T_{1,1}")), 189);
}

TEST(Psl2Full, BothComputationsAgreeOverARange) {
    for (std::int64_t l = 7; l < 110; ++l) {
        if (!nt::is_prime(l)) continue;
        const auto full = full_decomposition(l);
        for (const auto& v : full.variants) {
            EXPECT_EQ(closed_form_projectives(v.blocks), inner_product_projectives(v.blocks, full.h0)) << l;
            EXPECT_EQ(v.decomp.total_dimension, genus(l)) << l;
            EXPECT_EQ(decomposition_character(v.blocks, v.decomp), full.h0) << l;
        }
    }
}

TEST(Psl2Full, CongruenceFlags) {
    const auto seven = full_decomposition(7);
    for (const auto& r : congruence_report(only_variant(seven))) EXPECT_FALSE(r.congruence) << r.block;

    const auto eleven = full_decomposition(11);
    std::vector<std::string> flagged;
    for (const auto& r : congruence_report(eleven.variants.front())) {
        if (r.congruence) flagged.push_back(r.block);
    }
    EXPECT_EQ(flagged, std::vector<std::string>{"B_{0,0}"});
}

// ---------------------------------------------------------------------------

TEST(Psl2Restrict, FixedPointMassPerSubgroup) {
    for (std::int64_t l : {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
        const Psl2Case c = classify(l);
        std::map<Subgroup, std::int64_t> mass;
        for (const auto& rc : ram_counts(c)) mass[rc.subgroup] += rc.points * (inertia_order(c, rc.inertia) - 1);
        const std::int64_t v_invol = c.m % 2 == 0 ? 1 : 0;
        EXPECT_EQ(mass[Subgroup::V], fixed_point_mass(c, 2, v_invol, 0)) << l;
        EXPECT_EQ(mass[Subgroup::R], fixed_point_mass(c, 0, 0, l - 1)) << l;
        if (c.two_dihedral_classes()) {
            EXPECT_EQ(mass[Subgroup::Delta1], fixed_point_mass(c, 2, c.sylow_order(), 0)) << l;
            EXPECT_EQ(mass[Subgroup::Delta2], fixed_point_mass(c, 2, c.sylow_order(), 0)) << l;
        } else {
            EXPECT_EQ(mass[Subgroup::Delta], fixed_point_mass(c, 2, c.sylow_order(), 0)) << l;
            EXPECT_EQ(mass[Subgroup::W], fixed_point_mass(c, 0, 1, 0)) << l;
        }
    }
}

TEST(Psl2Restrict, SevenRestrictedToV) {
    const auto r = restriction_decomposition(7, Subgroup::V);
    EXPECT_EQ(r.input.genus_Z, 1);
    // g = 3 and V has order 3: all of H^0 is one free module.
    Decomp expected;
    expected[IndecLabel{0, 3}] = 1;
    EXPECT_EQ(r.closed_form, expected);
    EXPECT_EQ(dimension(r.assembled.decomp), 3);
}

TEST(Psl2Restrict, EngineMatchesClosedForms) {
    for (std::int64_t l : {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 53, 59, 61, 73}) {
        const Psl2Case c = classify(l);
        for (auto s : restriction_subgroups(c)) {
            const auto r = restriction_decomposition(l, s);
            EXPECT_EQ(dimension(r.assembled.decomp), genus(l)) << l << " " << subgroup_name(s);
        }
    }
}

TEST(Psl2Restrict, WrongSubgroupRejected) {
    EXPECT_THROW(restriction_group(classify(7), Subgroup::Delta1), ValidationError);
    EXPECT_THROW(restriction_group(classify(13), Subgroup::Delta), ValidationError);
}

TEST(Psl2N1, RestrictionsAndDimension) {
    for (std::int64_t l = 7; l < 200; ++l) {
        if (!nt::is_prime(l)) continue;
        const Psl2Case c = classify(l);
        const N1Decomp d = n1_decomposition(c);
        EXPECT_EQ(n1_dimension(d), genus(l)) << l;
        for (auto s : restriction_subgroups(c)) EXPECT_EQ(restrict_n1(c, d, s), restriction_closed_form(c, s)) << l;
    }
}

TEST(Psl2N1, CharacterMatchesH0) {
    for (std::int64_t l : {7, 11, 13, 17, 19, 31, 37, 109}) {
        const auto cd = make_class_data(l);
        const ClassFunction h0 = h0_brauer(cd);
        const auto cls = n1_classes(*cd);
        const auto values = n1_character(*cd, n1_decomposition(cd->psl2_case()));
        for (std::size_t i = 0; i < cls.size(); ++i) EXPECT_EQ(values[i], h0.at(cls[i].g_class)) << l << " " << cls[i].name;
    }
}

TEST(Psl2N1, SevenLabels) {
    const N1Decomp d = n1_decomposition(classify(7));
    std::map<std::string, std::int64_t> named;
    for (const auto& [label, mult] : d) named[n1_label_name(label)] = mult;
    EXPECT_EQ(named, (std::map<std::string, std::int64_t>{{"U_{1,3}", 1}}));
}

TEST(Psl2Verify, AllInvariantsHoldUpTo150) {
    for (std::int64_t l = 7; l < 150; ++l) {
        if (!nt::is_prime(l)) continue;
        for (const auto& r : verify_all(l)) EXPECT_TRUE(r.passed) << l << " " << r.name << ": " << r.detail;
    }
}
