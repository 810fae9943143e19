#include "holodiff/cyclo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"

namespace holodiff {
namespace {

struct PrimePart {
    std::int64_t prime;
    std::int64_t power;  // q^k exactly dividing the conductor
};

const std::vector<PrimePart>& prime_parts(std::int64_t n) {
    thread_local std::unordered_map<std::int64_t, std::vector<PrimePart>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<PrimePart> parts;
    for (auto [q, e] : nt::factorize(n)) parts.push_back({q, nt::ipow(q, e)});
    return cache.emplace(n, std::move(parts)).first->second;
}

// Dense scratch space indexed by exponent; reused across calls on one thread.
class Scratch {
public:
    void reset(std::int64_t n) {
        if (static_cast<std::int64_t>(coeffs_.size()) < n) {
            coeffs_.resize(n);
            used_.resize(n, 0);
        }
        for (auto e : touched_) {
            coeffs_[e] = 0;
            used_[e] = 0;
        }
        touched_.clear();
    }
    Rational& at(std::int64_t e) {
        if (!used_[e]) {
            used_[e] = 1;
            touched_.push_back(e);
        }
        return coeffs_[e];
    }
    std::vector<std::int64_t>& touched() { return touched_; }
    const Rational& peek(std::int64_t e) const { return coeffs_[e]; }

private:
    std::vector<Rational> coeffs_;
    std::vector<char> used_;
    std::vector<std::int64_t> touched_;
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

// Rewrites the scratch contents into the canonical basis and extracts the terms.
std::vector<CycloNumber::Term> reduce_scratch(Scratch& s, std::int64_t n) {
    Rational tmp;
    for (const auto& part : prime_parts(n)) {
        const std::int64_t q = part.prime;
        const std::int64_t digit_unit = part.power / q;
        const std::int64_t step = n / q;
        const std::size_t count = s.touched().size();
        for (std::size_t idx = 0; idx < count; ++idx) {
            const std::int64_t e = s.touched()[idx];
            if ((e % part.power) / digit_unit != q - 1) continue;
            if (s.peek(e).is_zero()) continue;
            tmp = s.peek(e);
            s.at(e) = 0;
            for (std::int64_t i = 1; i < q; ++i) {
                s.at((e + i * step) % n) -= tmp;
            }
        }
    }
    std::vector<CycloNumber::Term> out;
    for (auto e : s.touched()) {
        if (!s.peek(e).is_zero()) out.emplace_back(e, s.peek(e));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

CycloNumber::CycloNumber(Rational r) {
    if (!r.is_zero()) terms_.emplace_back(0, std::move(r));
}

CycloNumber CycloNumber::zeta(std::int64_t conductor, std::int64_t exponent) {
    return from_terms(conductor, {{exponent, Rational(1)}});
}

CycloNumber CycloNumber::from_terms(std::int64_t conductor, const std::vector<Term>& terms) {
    if (conductor < 1) throw std::invalid_argument("CycloNumber: conductor must be positive");
    Scratch& s = scratch();
    s.reset(conductor);
    for (const auto& [e, c] : terms) s.at(nt::mod(e, conductor)) += c;
    CycloNumber out;
    out.conductor_ = conductor;
    out.terms_ = reduce_scratch(s, conductor);
    return out;
}

Rational CycloNumber::rational_value() const {
    if (!is_rational()) throw ConsistencyError("expected a rational value, got " + to_string());
    return terms_.empty() ? Rational(0) : terms_[0].second;
}

CycloNumber CycloNumber::lifted(std::int64_t conductor) const {
    if (conductor == conductor_) return *this;
    if (conductor % conductor_ != 0) throw std::invalid_argument("CycloNumber: lift to a non-multiple conductor");
    const std::int64_t f = conductor / conductor_;
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [e, c] : terms_) t.emplace_back(e * f, c);
    return from_terms(conductor, t);
}

CycloNumber CycloNumber::conj() const { return galois(-1); }

CycloNumber CycloNumber::galois(std::int64_t k) const {
    if (std::gcd(nt::mod(k, conductor_), conductor_) != 1 && conductor_ > 1) {
        throw std::invalid_argument("CycloNumber: Galois exponent not a unit");
    }
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [e, c] : terms_) t.emplace_back(e * k, c);
    return from_terms(conductor_, t);
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNumber: inverse of zero");
    if (is_rational()) return CycloNumber(Rational(1) / rational_value());
    // x^{-1} = (prod of the other Galois conjugates) / norm(x).
    CycloNumber others(1);
    for (std::int64_t k = 2; k < conductor_; ++k) {
        if (std::gcd(k, conductor_) == 1) others *= galois(k);
    }
    const CycloNumber norm = *this * others;
    return others * (Rational(1) / norm.rational_value());
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
    const std::int64_t n = std::lcm(conductor_, o.conductor_);
    const std::int64_t fa = n / conductor_;
    const std::int64_t fb = n / o.conductor_;
    Scratch& s = scratch();
    s.reset(n);
    for (const auto& [e, c] : terms_) s.at(e * fa) += c;
    for (const auto& [e, c] : o.terms_) s.at(e * fb) += c;
    conductor_ = n;
    terms_ = reduce_scratch(s, n);
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        terms_.clear();
        return *this;
    }
    if (o.is_rational()) return *this *= o.terms_[0].second;
    if (is_rational()) {
        const Rational r = terms_[0].second;
        *this = o;
        return *this *= r;
    }
    const std::int64_t n = std::lcm(conductor_, o.conductor_);
    const std::int64_t fa = n / conductor_;
    const std::int64_t fb = n / o.conductor_;
    Scratch& s = scratch();
    s.reset(n);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            s.at((ea * fa + eb * fb) % n) += ca * cb;
        }
    }
    conductor_ = n;
    terms_ = reduce_scratch(s, n);
    return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& r) {
    if (r.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= r;
    return *this;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor_ == b.conductor_) return a.terms_ == b.terms_;
    if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
    const std::int64_t n = std::lcm(a.conductor_, b.conductor_);
    return a.lifted(n).terms_ == b.lifted(n).terms_;
}

std::string CycloNumber::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (e == 0) {
            os << c.to_string();
        } else {
            os << c.to_string() << "*z" << conductor_ << "^" << e;
        }
    }
    return os.str();
}

CycloAccumulator::CycloAccumulator(std::int64_t conductor)
    : conductor_(conductor), dense_(static_cast<std::size_t>(conductor)) {}

void CycloAccumulator::add(std::int64_t exponent, const Rational& coeff) {
    dense_[nt::mod(exponent, conductor_)] += coeff;
}

void CycloAccumulator::add(const CycloNumber& x) {
    if (conductor_ % x.conductor() != 0) throw std::invalid_argument("CycloAccumulator: conductor mismatch");
    const std::int64_t f = conductor_ / x.conductor();
    for (const auto& [e, c] : x.terms()) dense_[e * f] += c;
}

void CycloAccumulator::add_product(const CycloNumber& x, const CycloNumber& y, const Rational& coeff) {
    if (conductor_ % x.conductor() != 0 || conductor_ % y.conductor() != 0) {
        throw std::invalid_argument("CycloAccumulator: conductor mismatch");
    }
    const std::int64_t fx = conductor_ / x.conductor();
    const std::int64_t fy = conductor_ / y.conductor();
    for (const auto& [ex, cx] : x.terms()) {
        const Rational scaled = cx * coeff;
        for (const auto& [ey, cy] : y.terms()) {
            dense_[(ex * fx + ey * fy) % conductor_] += scaled * cy;
        }
    }
}

CycloNumber CycloAccumulator::result() const {
    Scratch& s = scratch();
    s.reset(conductor_);
    for (std::int64_t e = 0; e < conductor_; ++e) {
        if (!dense_[e].is_zero()) s.at(e) = dense_[e];
    }
    return CycloNumber::from_terms(conductor_, reduce_scratch(s, conductor_));
}

IntCycloAccumulator::IntCycloAccumulator(std::int64_t conductor)
    : conductor_(conductor), dense_(static_cast<std::size_t>(conductor), 0) {}

void IntCycloAccumulator::clear() { std::fill(dense_.begin(), dense_.end(), 0); }

void IntCycloAccumulator::canonicalize() {
    const std::int64_t n = conductor_;
    for (const auto& part : prime_parts(n)) {
        const std::int64_t q = part.prime;
        const std::int64_t digit_unit = part.power / q;
        const std::int64_t step = n / q;
        for (std::int64_t e = 0; e < n; ++e) {
            const std::int64_t c = dense_[e];
            if (c == 0 || (e % part.power) / digit_unit != q - 1) continue;
            dense_[e] = 0;
            for (std::int64_t i = 1; i < q; ++i) dense_[(e + i * step) % n] -= c;
        }
    }
}

CycloNumber IntCycloAccumulator::reduce() {
    canonicalize();
    std::vector<CycloNumber::Term> t;
    for (std::int64_t e = 0; e < conductor_; ++e) {
        if (dense_[e] != 0) t.emplace_back(e, Rational(dense_[e]));
    }
    // Already canonical, so from_terms only copies.
    return CycloNumber::from_terms(conductor_, t);
}

bool IntCycloAccumulator::reduce_to_integer(std::int64_t& value) {
    canonicalize();
    for (std::int64_t e = 1; e < conductor_; ++e) {
        if (dense_[e] != 0) return false;
    }
    value = dense_[0];
    return true;
}

CycloNumber gauss_sum_quadratic(std::int64_t ell) {
    if (!nt::is_prime(ell) || ell == 2) throw ValidationError("gauss_sum_quadratic: " + std::to_string(ell) + " is not an odd prime");
    if (ell % 4 != 3) throw ValidationError("gauss_sum_quadratic: requires l = 3 mod 4, got " + std::to_string(ell));
    std::vector<CycloNumber::Term> t;
    for (std::int64_t a = 1; a <= (ell - 1) / 2; ++a) t.emplace_back(a * a % ell, Rational(1));
    return CycloNumber::from_terms(ell, t);
}

CycloNumber sqrt_minus_ell(std::int64_t ell) { return gauss_sum_quadratic(ell) * Rational(2) + CycloNumber(1); }

CycloNumber sqrt_signed_prime(std::int64_t ell) {
    if (!nt::is_prime(ell) || ell == 2) throw ValidationError("sqrt_signed_prime: " + std::to_string(ell) + " is not an odd prime");
    std::vector<CycloNumber::Term> t{{0, Rational(1)}};
    for (std::int64_t a = 1; a <= (ell - 1) / 2; ++a) t.emplace_back(a * a % ell, Rational(2));
    return CycloNumber::from_terms(ell, t);
}

}  // namespace holodiff
