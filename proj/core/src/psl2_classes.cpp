#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"
#include "holodiff/psl2mod3.hpp"

namespace holodiff::psl2 {

std::int64_t Psl2Case::sylow_order() const { return nt::ipow(3, n); }

std::int64_t Psl2Case::group_order() const { return ell * (ell * ell - 1) / 2; }

Psl2Case classify(std::int64_t ell) {
    if (ell < 7) {
        throw ValidationError("ell must be a prime >= 7 (X(ell) has genus 0 below 7), got " + std::to_string(ell));
    }
    if (!nt::is_prime(ell)) throw ValidationError("ell must be prime, got " + std::to_string(ell));
    Psl2Case c;
    c.ell = ell;
    c.epsilon = ell % 3 == 1 ? 1 : -1;
    const std::int64_t rest = (ell - c.epsilon) / 2;
    c.n = nt::valuation(rest, 3);
    c.m = rest / c.sylow_order();
    const bool one_mod_four = ell % 4 == 1;
    if (one_mod_four) {
        c.case_id = c.epsilon == -1 ? 1 : 3;
    } else {
        c.case_id = c.epsilon == 1 ? 2 : 4;
    }
    const bool m_even = c.m % 2 == 0;
    if (m_even != c.two_dihedral_classes()) {
        throw ConsistencyError("classify: parity of m disagrees with the case table for ell=" + std::to_string(ell));
    }
    return c;
}

std::int64_t genus(std::int64_t ell) {
    if (ell < 7 || !nt::is_prime(ell)) throw ValidationError("genus: ell must be a prime >= 7, got " + std::to_string(ell));
    const std::int64_t num = (ell - 1) * (ell + 1) * (ell - 6);
    if (num % 24 != 0) throw ConsistencyError("genus: (l^2-1)(l-6) not divisible by 24");
    return 1 + num / 24;
}

std::int64_t class_number(std::int64_t ell) {
    if (ell <= 3 || !nt::is_prime(ell)) throw ValidationError("class_number: ell must be a prime > 3, got " + std::to_string(ell));
    if (ell % 4 != 3) throw ValidationError("class_number: ell must be 3 mod 4, got " + std::to_string(ell));
    std::int64_t sum = 0;
    for (std::int64_t a = 1; a < ell; ++a) sum += nt::legendre(a, ell) * a;
    if (sum % ell != 0 || -sum / ell <= 0) throw ConsistencyError("class_number: character sum not a positive multiple of ell");
    return -sum / ell;
}

std::int64_t reduced_form_count(std::int64_t discriminant) {
    if (discriminant >= 0 || nt::mod(discriminant, 4) > 1) {
        throw ValidationError("reduced_form_count: need a negative discriminant = 0,1 mod 4");
    }
    const std::int64_t d = -discriminant;
    std::int64_t count = 0;
    // Reduced forms have a <= sqrt(|D|/3).
    for (std::int64_t a = 1; 3 * a * a <= d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            const std::int64_t num = b * b + d;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

// ---------------------------------------------------------------------------

std::string ConjugacyClass::name() const {
    switch (kind) {
        case ClassKind::identity: return "e";
        case ClassKind::order_ell_1: return "r1";
        case ClassKind::order_ell_2: return "r2";
        case ClassKind::involution: return "s";
        case ClassKind::v_torus: return "v^" + std::to_string(power);
        case ClassKind::w_torus: return "w^" + std::to_string(power);
    }
    return "?";
}

ClassData::ClassData(const Psl2Case& c) : case_(c), sqrt_(sqrt_signed_prime(c.ell)) {
    const std::int64_t order = c.group_order();
    auto add = [&](ClassKind kind, std::int64_t power, std::int64_t centralizer) {
        if (order % centralizer != 0) throw ConsistencyError("ClassData: centralizer order does not divide |G|");
        classes_.push_back({kind, power, centralizer, order / centralizer});
    };
    add(ClassKind::identity, 0, order);
    add(ClassKind::order_ell_1, 0, c.ell);
    add(ClassKind::order_ell_2, 0, c.ell);
    // The involution centralizer is dihedral of order l - delta, l = delta mod 4.
    const std::int64_t delta = c.ell % 4 == 1 ? 1 : -1;
    add(ClassKind::involution, 0, c.ell - delta);
    const std::int64_t v_last = c.m % 2 == 1 ? (c.m - 1) / 2 : c.m / 2 - 1;
    for (std::int64_t i = 1; i <= v_last; ++i) add(ClassKind::v_torus, i, c.v_order());
    const std::int64_t w = c.w_order();
    const std::int64_t w_last = w % 2 == 0 ? w / 2 - 1 : (w - 1) / 2;
    for (std::int64_t j = 1; j <= w_last; ++j) add(ClassKind::w_torus, j, w);
}

std::size_t ClassData::index_of(ClassKind kind, std::int64_t power) const {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i].kind == kind && classes_[i].power == power) return i;
    }
    throw std::out_of_range("ClassData: no such class");
}

std::int64_t ClassData::regular_element_count() const {
    std::int64_t total = 0;
    for (const auto& cl : classes_) total += cl.size;
    return total;
}

std::int64_t ClassData::value_conductor(ClassKind kind) const {
    switch (kind) {
        case ClassKind::order_ell_1:
        case ClassKind::order_ell_2: return case_.ell;
        case ClassKind::v_torus: return case_.m;
        case ClassKind::w_torus: return case_.w_order();
        default: return 1;
    }
}

ClassDataPtr make_class_data(std::int64_t ell) { return std::make_shared<const ClassData>(classify(ell)); }

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(ClassDataPtr classes, std::vector<CycloNumber> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
    if (!classes_) throw std::invalid_argument("ClassFunction: missing class data");
    if (values_.size() != classes_->size()) throw std::invalid_argument("ClassFunction: wrong number of values");
}

ClassFunction ClassFunction::zero(ClassDataPtr classes) {
    const std::size_t k = classes->size();
    return ClassFunction(std::move(classes), std::vector<CycloNumber>(k));
}

const CycloNumber& ClassFunction::at(ClassKind kind, std::int64_t power) const {
    return values_[classes_->index_of(kind, power)];
}

std::int64_t ClassFunction::degree() const {
    const Rational d = values_[0].rational_value();
    return d.to_int64();
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_.at(i);
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_.at(i);
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& r) {
    for (auto& v : values_) v *= r;
    return *this;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.classes_->psl2_case() == b.classes_->psl2_case() && a.values_ == b.values_;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
    const ClassData& cd = f.classes();
    Rational total;
    // One accumulator per value conductor.  The two unipotent classes are
    // Galois conjugate, so only their joint contribution is rational.
    std::vector<std::pair<std::int64_t, CycloAccumulator>> families;
    auto family = [&](ClassKind kind) -> CycloAccumulator& {
        const std::int64_t conductor = cd.value_conductor(kind);
        for (auto& [k, acc] : families) {
            if (k == conductor) return acc;
        }
        families.emplace_back(conductor, CycloAccumulator(conductor));
        return families.back().second;
    };
    for (std::size_t i = 0; i < cd.size(); ++i) {
        const auto& cl = cd.classes()[i];
        const CycloNumber& x = f.at(i);
        const CycloNumber& y = g.at(i);
        if (x.is_zero() || y.is_zero()) continue;
        const Rational weight(1, cl.centralizer);
        if (x.is_rational() && y.is_rational()) {
            total += x.rational_value() * y.rational_value() * weight;
            continue;
        }
        family(cl.kind).add_product(x, y.conj(), weight);
    }
    for (auto& [conductor, acc] : families) {
        const CycloNumber part = acc.result();
        if (!part.is_rational()) {
            throw ConsistencyError("inner_product: irrational contribution from a class family: " + part.to_string());
        }
        total += part.rational_value();
    }
    return total;
}

ClassFunction h0_brauer(const ClassDataPtr& classes) {
    const Psl2Case& c = classes->psl2_case();
    std::vector<CycloNumber> values;
    values.reserve(classes->size());
    const Rational at_r = Rational(1) - Rational(c.ell - 1, 4);
    CycloNumber twist;   // (h/2) sqrt(-l), zero for l = 1 mod 4
    if (c.ell % 4 == 3) twist = classes->sqrt_signed_ell() * Rational(class_number(c.ell), 2);
    const std::int64_t s_shift = c.two_dihedral_classes() ? c.ell - c.epsilon : c.ell + c.epsilon;
    for (const auto& cl : classes->classes()) {
        switch (cl.kind) {
            case ClassKind::identity: values.emplace_back(genus(c.ell)); break;
            case ClassKind::order_ell_1: values.push_back(CycloNumber(at_r) - twist); break;
            case ClassKind::order_ell_2: values.push_back(CycloNumber(at_r) + twist); break;
            case ClassKind::involution: values.emplace_back(Rational(1) - Rational(s_shift, 4)); break;
            case ClassKind::v_torus:
            case ClassKind::w_torus: values.emplace_back(1); break;
        }
    }
    return ClassFunction(classes, std::move(values));
}

}  // namespace holodiff::psl2
