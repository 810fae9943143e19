#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "holodiff/rational.hpp"

namespace holodiff {

// Exact element of the cyclotomic field Q(zeta_N), stored in a canonical basis.
//
// An exponent e is a basis exponent when, for every prime q with q^k || N, the
// leading base-q digit of (e mod q^k) differs from q-1.  Every other power is
// rewritten with the relation sum_{i<q} zeta_N^{e + i N/q} = 0, so two values
// over the same conductor are equal exactly when their term lists are equal.
class CycloNumber {
public:
    using Term = std::pair<std::int64_t, Rational>;

    CycloNumber() = default;
    CycloNumber(Rational r);          // NOLINT(google-explicit-constructor)
    CycloNumber(std::int64_t n) : CycloNumber(Rational(n)) {}  // NOLINT(google-explicit-constructor)

    // zeta_N^e.
    static CycloNumber zeta(std::int64_t conductor, std::int64_t exponent);
    // Sum of coeff * zeta_N^e over arbitrary (not necessarily reduced) terms.
    static CycloNumber from_terms(std::int64_t conductor, const std::vector<Term>& terms);

    std::int64_t conductor() const { return conductor_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
    // Requires is_rational().
    Rational rational_value() const;

    // The same element written over a multiple of the current conductor.
    CycloNumber lifted(std::int64_t conductor) const;
    // Complex conjugation zeta -> zeta^{-1}.
    CycloNumber conj() const;
    // Galois automorphism zeta -> zeta^k for k coprime to the conductor.
    CycloNumber galois(std::int64_t k) const;
    CycloNumber inverse() const;

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber& operator*=(const CycloNumber& o);
    CycloNumber& operator*=(const Rational& r);
    CycloNumber& operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator*(CycloNumber a, const Rational& r) { return a *= r; }
    friend CycloNumber operator*(const Rational& r, CycloNumber a) { return a *= r; }
    friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }

    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const CycloNumber& c) { return os << c.to_string(); }

private:
    std::int64_t conductor_ = 1;
    std::vector<Term> terms_;
};

// Accumulates terms densely over a fixed conductor and reduces once at the end.
class CycloAccumulator {
public:
    explicit CycloAccumulator(std::int64_t conductor);
    std::int64_t conductor() const { return conductor_; }
    void add(std::int64_t exponent, const Rational& coeff);
    void add(const CycloNumber& x);
    // Adds coeff * x * y; the conductors of x and y must divide the accumulator conductor.
    void add_product(const CycloNumber& x, const CycloNumber& y, const Rational& coeff = Rational(1));
    CycloNumber result() const;

private:
    std::int64_t conductor_;
    std::vector<Rational> dense_;
};

// Integer-coefficient accumulator reduced in machine arithmetic.  Used on hot
// paths where every coefficient is known to be a small integer.
class IntCycloAccumulator {
public:
    explicit IntCycloAccumulator(std::int64_t conductor);
    std::int64_t conductor() const { return conductor_; }
    void add(std::int64_t exponent, std::int64_t coeff) { dense_[static_cast<std::size_t>(exponent)] += coeff; }
    void clear();
    // Reduces in place and returns the canonical value.
    CycloNumber reduce();
    // Reduces in place; returns true and sets value when the sum is rational.
    bool reduce_to_integer(std::int64_t& value);

private:
    void canonicalize();
    std::int64_t conductor_;
    std::vector<std::int64_t> dense_;
};

// Sum_{a=1}^{(l-1)/2} zeta_l^{a^2}, for a prime l = 3 mod 4.
CycloNumber gauss_sum_quadratic(std::int64_t ell);
// The square root of -l fixed by gauss_sum_quadratic: 2 * sum + 1.
CycloNumber sqrt_minus_ell(std::int64_t ell);
// 1 + 2 * sum_{a=1}^{(l-1)/2} zeta_l^{a^2}, a square root of (-1)^{(l-1)/2} l, for any odd prime l.
CycloNumber sqrt_signed_prime(std::int64_t ell);

}  // namespace holodiff
