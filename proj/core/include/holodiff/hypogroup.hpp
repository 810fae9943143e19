#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "holodiff/cyclo.hpp"
#include "holodiff/rational.hpp"

namespace holodiff {

// Element (i, j) of P x| C with P = Z/p^n generated by sigma and C = Z/c
// generated by rho, standing for sigma^i rho^j.
struct HypoElement {
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend bool operator==(const HypoElement&, const HypoElement&) = default;
};

// p-hypo-elementary group P x|_chi C with rho sigma rho^{-1} = sigma^u.
class HypoGroup {
public:
    // Throws ValidationError if the parameters do not describe such a group.
    HypoGroup(std::int64_t p, int n, std::int64_t c, std::int64_t chi_index, std::int64_t action_unit);

    std::int64_t p() const { return p_; }
    int n() const { return n_; }
    std::int64_t c() const { return c_; }
    std::int64_t chi_index() const { return chi_index_; }
    std::int64_t action_unit() const { return u_; }
    std::int64_t p_power() const { return pn_; }
    std::int64_t order() const { return pn_ * c_; }
    // Order of chi as a character of C.
    std::int64_t chi_order() const { return chi_order_; }

    HypoElement multiply(const HypoElement& a, const HypoElement& b) const;
    HypoElement inverse(const HypoElement& a) const;
    HypoElement power(HypoElement a, std::int64_t k) const;
    HypoElement identity() const { return {}; }

    bool is_p_regular(const HypoElement& g) const;
    // Index of the p-regular class of g: it is conjugate to rho^j.
    std::int64_t class_of(const HypoElement& g) const { return g.j; }
    // Number of p-regular elements in the class of rho^j.
    std::int64_t class_size(std::int64_t j) const { return class_sizes_[static_cast<std::size_t>(j)]; }
    std::vector<HypoElement> p_regular_elements() const;

    // chi^{-k}(a) = a - k * a_chi (mod c).
    std::int64_t chi_shift(std::int64_t a, std::int64_t k) const;

    friend bool operator==(const HypoGroup& a, const HypoGroup& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.c_ == b.c_ && a.chi_index_ == b.chi_index_ && a.u_ == b.u_;
    }

    std::string describe() const;

private:
    std::int64_t p_;
    int n_;
    std::int64_t c_;
    std::int64_t chi_index_;
    std::int64_t u_;
    std::int64_t pn_;
    std::int64_t chi_order_;
    std::vector<std::int64_t> unit_powers_;  // u^j mod p^n for j in [0, ord(u))
    std::vector<std::int64_t> class_sizes_;
};

// Uniserial indecomposable U_{a,b}: socle S_a, length b.
struct IndecLabel {
    std::int64_t socle = 0;
    std::int64_t length = 1;
    friend auto operator<=>(const IndecLabel&, const IndecLabel&) = default;
};

using Decomp = std::map<IndecLabel, std::int64_t>;

std::int64_t dimension(const Decomp& d);

// All p^n * c labels of indecomposable k[H]-modules.
std::vector<IndecLabel> indecomposable_labels(const HypoGroup& g);

// Class function on the p-regular classes rho^0 .. rho^{c-1}.
class BrauerChar {
public:
    BrauerChar(HypoGroup group, std::vector<CycloNumber> values);
    // Evaluates f on every p-regular element and checks it is a class function.
    static BrauerChar from_elements(const HypoGroup& group, const std::function<CycloNumber(const HypoElement&)>& f);
    static BrauerChar zero(const HypoGroup& group);

    const HypoGroup& group() const { return *group_; }
    const std::vector<CycloNumber>& values() const { return values_; }
    const CycloNumber& at(std::int64_t j) const { return values_[static_cast<std::size_t>(j)]; }
    const CycloNumber& degree() const { return values_[0]; }

    // Character of the dual module: value at the inverse class.
    BrauerChar dual() const;

    BrauerChar& operator+=(const BrauerChar& o);
    BrauerChar& operator-=(const BrauerChar& o);
    BrauerChar& operator*=(const Rational& r);
    // Pointwise product (tensor product of modules).
    BrauerChar& operator*=(const BrauerChar& o);
    friend BrauerChar operator+(BrauerChar a, const BrauerChar& b) { return a += b; }
    friend BrauerChar operator-(BrauerChar a, const BrauerChar& b) { return a -= b; }
    friend BrauerChar operator*(BrauerChar a, const Rational& r) { return a *= r; }
    friend BrauerChar operator*(const Rational& r, BrauerChar a) { return a *= r; }
    friend BrauerChar operator*(BrauerChar a, const BrauerChar& b) { return a *= b; }
    friend bool operator==(const BrauerChar& a, const BrauerChar& b);

private:
    void require_same_group(const BrauerChar& o) const;
    std::shared_ptr<const HypoGroup> group_;
    std::vector<CycloNumber> values_;
};

BrauerChar simple_char(const HypoGroup& g, std::int64_t a);
BrauerChar projective_char(const HypoGroup& g, std::int64_t a);
BrauerChar uniserial_char(const HypoGroup& g, const IndecLabel& label);
BrauerChar regular_char(const HypoGroup& g);
BrauerChar decomp_char(const HypoGroup& g, const Decomp& d);

// (1/|H|) sum over p-regular g of x(g^{-1}) y(g).  Throws ConsistencyError if
// the sum is not rational and std::invalid_argument on mismatched groups.
Rational inner_product(const BrauerChar& x, const BrauerChar& y);

// <x, phi_a> for every simple index a in [0, c).
std::vector<Rational> pair_with_simples(const BrauerChar& x);

// Multiplicities of projective indecomposables in a projective character.
// Throws ConsistencyError if the character is not a sum of projectives.
Decomp decompose_projective(const BrauerChar& ch);

}  // namespace holodiff
