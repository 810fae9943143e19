#include <gtest/gtest.h>

#include <map>
#include <random>

#include "holodiff/cyclo.hpp"
#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"
#include "holodiff/rational.hpp"

using holodiff::CycloNumber;
using holodiff::Rational;

namespace {

CycloNumber random_cyclo(std::mt19937_64& rng, std::int64_t conductor) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<std::int64_t> exp(0, conductor - 1);
    std::vector<CycloNumber::Term> terms;
    for (int k = 0; k < 4; ++k) terms.emplace_back(exp(rng), Rational(coeff(rng), den(rng)));
    return CycloNumber::from_terms(conductor, terms);
}

}  // namespace

TEST(Rational, LowestTermsAndParse) {
    Rational r(6, -4);
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational::parse("-3/2"), r);
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), holodiff::ValidationError);
    EXPECT_THROW(Rational::parse("x"), holodiff::ValidationError);
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_THROW((void)Rational(1, 2).to_int64(), holodiff::ConsistencyError);
}

TEST(Cyclo, CubeRootRelation) {
    const auto sum = CycloNumber::zeta(3, 1) + CycloNumber::zeta(3, 2) + CycloNumber(1);
    EXPECT_TRUE(sum.is_zero());
}

TEST(Cyclo, FourthRootSquaresToMinusOne) {
    EXPECT_EQ(CycloNumber::zeta(4, 1) * CycloNumber::zeta(4, 1), CycloNumber(-1));
}

TEST(Cyclo, GaussSumNormAtSeven) {
    const auto s = holodiff::gauss_sum_quadratic(7);
    // Independent expansion: multiply the exponent multisets by hand and
    // fold with 1 + z + ... + z^6 = 0.
    std::map<std::int64_t, std::int64_t> counts;
    for (std::int64_t a = 1; a <= 3; ++a)
        for (std::int64_t b = 1; b <= 3; ++b) counts[holodiff::nt::mod(a * a - b * b, 7)] += 1;
    // counts[0] = 3; every nonzero residue appears exactly once in the 6 remaining products,
    // so the product equals 3 + (sum over nonzero residues) = 3 - 1 = 2.
    std::int64_t nonzero_total = 0;
    for (std::int64_t r = 1; r < 7; ++r) {
        EXPECT_EQ(counts[r], 1);
        nonzero_total += counts[r];
    }
    const std::int64_t brute = counts[0] - nonzero_total / 6;
    EXPECT_EQ(brute, 2);
    EXPECT_EQ(s * s.conj(), CycloNumber(brute));
}

TEST(Cyclo, SquareRootOfMinusEll) {
    for (std::int64_t ell = 7; ell <= 200; ++ell) {
        if (!holodiff::nt::is_prime(ell) || ell % 4 != 3) continue;
        const auto r = holodiff::sqrt_minus_ell(ell);
        EXPECT_EQ(r * r, CycloNumber(-ell)) << "ell=" << ell;
    }
    const auto s11 = holodiff::gauss_sum_quadratic(11);
    const auto r11 = s11 * Rational(2) + CycloNumber(1);
    EXPECT_EQ(r11 * r11, CycloNumber(-11));
}

TEST(Cyclo, GaussSumRejectsOneModFour) {
    EXPECT_THROW(holodiff::gauss_sum_quadratic(13), holodiff::ValidationError);
    EXPECT_THROW(holodiff::gauss_sum_quadratic(9), holodiff::ValidationError);
}

TEST(Cyclo, SignedSquareRoot) {
    for (std::int64_t ell : {5, 13, 17, 29, 7, 19}) {
        const auto r = holodiff::sqrt_signed_prime(ell);
        const std::int64_t sq = ell % 4 == 1 ? ell : -ell;
        EXPECT_EQ(r * r, CycloNumber(sq)) << ell;
    }
}

TEST(Cyclo, FieldAxioms) {
    std::mt19937_64 rng(11);
    for (std::int64_t n : {1, 4, 12, 15, 36, 45, 60}) {
        for (int trial = 0; trial < 15; ++trial) {
            const auto a = random_cyclo(rng, n);
            const auto b = random_cyclo(rng, n);
            EXPECT_EQ((a + b) - b, a);
            if (!b.is_zero()) {
                EXPECT_EQ((a * b) / b, a) << "a=" << a << " b=" << b;
            }
            EXPECT_EQ(a * b, b * a);
        }
    }
}

TEST(Cyclo, MixedConductorsLiftToLcm) {
    const auto i = CycloNumber::zeta(4, 1);
    const auto w = CycloNumber::zeta(3, 1);
    const auto prod = i * w;
    EXPECT_EQ(prod.conductor(), 12);
    EXPECT_EQ(prod, CycloNumber::zeta(12, 7));
    EXPECT_EQ(CycloNumber::zeta(6, 2), CycloNumber::zeta(3, 1));
}

TEST(Cyclo, ReductionIsIdempotent) {
    std::mt19937_64 rng(5);
    for (std::int64_t n : {8, 9, 30, 72, 105}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = random_cyclo(rng, n);
            const auto again = CycloNumber::from_terms(n, x.terms());
            EXPECT_EQ(again.terms(), x.terms());
        }
    }
}

TEST(Cyclo, SumOfAllRootsVanishes) {
    for (std::int64_t n : {2, 6, 9, 10, 25, 63}) {
        std::vector<CycloNumber::Term> all;
        for (std::int64_t e = 0; e < n; ++e) all.emplace_back(e, Rational(1));
        EXPECT_TRUE(CycloNumber::from_terms(n, all).is_zero()) << n;
    }
}
