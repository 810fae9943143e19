#include "holodiff/hypogroup.hpp"

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"

namespace holodiff {

__extension__ using wide_int = __int128;

HypoGroup::HypoGroup(std::int64_t p, int n, std::int64_t c, std::int64_t chi_index, std::int64_t action_unit)
    : p_(p), n_(n), c_(c) {
    if (!nt::is_prime(p)) throw ValidationError("group: p = " + std::to_string(p) + " is not prime");
    if (n < 0 || n > 40) throw ValidationError("group: exponent n out of range");
    if (c < 1) throw ValidationError("group: c must be positive");
    if (std::gcd(c, p) != 1) throw ValidationError("group: c is not coprime to p");
    pn_ = nt::ipow(p, n);
    if (pn_ > (std::int64_t{1} << 40) / c) throw ValidationError("group: order too large");
    chi_index_ = nt::mod(chi_index, c);
    chi_order_ = c / std::gcd(c, chi_index_);
    if ((p - 1) % chi_order_ != 0) {
        throw ValidationError("group: chi has order " + std::to_string(chi_order_) + ", which does not divide p-1");
    }
    u_ = nt::mod(action_unit, pn_);
    if (n >= 1) {
        const std::int64_t ord = nt::mult_order(u_, pn_);
        if (ord != chi_order_) {
            throw ValidationError("group: action unit " + std::to_string(u_) + " has order " + std::to_string(ord) +
                                  " modulo p^n but chi has order " + std::to_string(chi_order_));
        }
    }
    unit_powers_.resize(static_cast<std::size_t>(c));
    std::int64_t acc = pn_ == 1 ? 0 : 1;
    for (std::int64_t j = 0; j < c; ++j) {
        unit_powers_[j] = acc;
        acc = static_cast<std::int64_t>(static_cast<wide_int>(acc) * u_ % pn_);
    }
    class_sizes_.assign(static_cast<std::size_t>(c), 0);
    for (std::int64_t j = 0; j < c; ++j) {
        for (std::int64_t i = 0; i < pn_; ++i) {
            if (is_p_regular({i, j})) ++class_sizes_[j];
        }
    }
}

HypoElement HypoGroup::multiply(const HypoElement& a, const HypoElement& b) const {
    const std::int64_t twisted = static_cast<std::int64_t>(
        static_cast<wide_int>(unit_powers_[static_cast<std::size_t>(a.j)]) * b.i % pn_);
    return {(a.i + twisted) % pn_, (a.j + b.j) % c_};
}

HypoElement HypoGroup::inverse(const HypoElement& a) const {
    const std::int64_t back = unit_powers_[static_cast<std::size_t>((c_ - a.j) % c_)];
    const std::int64_t i = static_cast<std::int64_t>(static_cast<wide_int>(back) * a.i % pn_);
    return {(pn_ - i) % pn_, (c_ - a.j) % c_};
}

HypoElement HypoGroup::power(HypoElement a, std::int64_t k) const {
    HypoElement result = identity();
    while (k > 0) {
        if (k & 1) result = multiply(result, a);
        a = multiply(a, a);
        k >>= 1;
    }
    return result;
}

bool HypoGroup::is_p_regular(const HypoElement& g) const {
    const std::int64_t image_order = c_ / std::gcd(c_, g.j);
    return power(g, image_order) == identity();
}

std::vector<HypoElement> HypoGroup::p_regular_elements() const {
    std::vector<HypoElement> out;
    for (std::int64_t j = 0; j < c_; ++j)
        for (std::int64_t i = 0; i < pn_; ++i)
            if (is_p_regular({i, j})) out.push_back({i, j});
    return out;
}

std::int64_t HypoGroup::chi_shift(std::int64_t a, std::int64_t k) const {
    return nt::mod(a - static_cast<std::int64_t>(static_cast<wide_int>(k % c_) * chi_index_ % c_), c_);
}

std::string HypoGroup::describe() const {
    std::ostringstream os;
    os << "Z/" << pn_ << " x| Z/" << c_ << " (p=" << p_ << ", chi=" << chi_index_ << ", u=" << u_ << ")";
    return os.str();
}

std::int64_t dimension(const Decomp& d) {
    std::int64_t total = 0;
    for (const auto& [label, mult] : d) total += mult * label.length;
    return total;
}

std::vector<IndecLabel> indecomposable_labels(const HypoGroup& g) {
    std::vector<IndecLabel> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (std::int64_t a = 0; a < g.c(); ++a)
        for (std::int64_t b = 1; b <= g.p_power(); ++b) out.push_back({a, b});
    return out;
}

// ---------------------------------------------------------------------------

BrauerChar::BrauerChar(HypoGroup group, std::vector<CycloNumber> values)
    : group_(std::make_shared<const HypoGroup>(std::move(group))), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != group_->c()) {
        throw std::invalid_argument("BrauerChar: expected one value per p-regular class");
    }
}

BrauerChar BrauerChar::from_elements(const HypoGroup& group,
                                     const std::function<CycloNumber(const HypoElement&)>& f) {
    std::vector<std::optional<CycloNumber>> seen(static_cast<std::size_t>(group.c()));
    for (const auto& g : group.p_regular_elements()) {
        CycloNumber v = f(g);
        auto& slot = seen[static_cast<std::size_t>(group.class_of(g))];
        if (!slot) {
            slot = std::move(v);
        } else if (!(*slot == v)) {
            throw ConsistencyError("BrauerChar: function is not constant on the class of rho^" +
                                   std::to_string(group.class_of(g)));
        }
    }
    std::vector<CycloNumber> values;
    values.reserve(seen.size());
    for (auto& s : seen) values.push_back(std::move(*s));
    return BrauerChar(group, std::move(values));
}

BrauerChar BrauerChar::zero(const HypoGroup& group) {
    return BrauerChar(group, std::vector<CycloNumber>(static_cast<std::size_t>(group.c())));
}

BrauerChar BrauerChar::dual() const {
    BrauerChar out = *this;
    const std::int64_t c = group_->c();
    for (std::int64_t j = 0; j < c; ++j) out.values_[j] = values_[(c - j) % c];
    return out;
}

void BrauerChar::require_same_group(const BrauerChar& o) const {
    if (!(*group_ == *o.group_)) throw std::invalid_argument("BrauerChar: characters of different groups");
}

BrauerChar& BrauerChar::operator+=(const BrauerChar& o) {
    require_same_group(o);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += o.values_[j];
    return *this;
}

BrauerChar& BrauerChar::operator-=(const BrauerChar& o) {
    require_same_group(o);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= o.values_[j];
    return *this;
}

BrauerChar& BrauerChar::operator*=(const Rational& r) {
    for (auto& v : values_) v *= r;
    return *this;
}

BrauerChar& BrauerChar::operator*=(const BrauerChar& o) {
    require_same_group(o);
    for (std::size_t j = 0; j < values_.size(); ++j) values_[j] *= o.values_[j];
    return *this;
}

bool operator==(const BrauerChar& a, const BrauerChar& b) {
    return *a.group_ == *b.group_ && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------

BrauerChar simple_char(const HypoGroup& g, std::int64_t a) {
    std::vector<CycloNumber> values;
    values.reserve(static_cast<std::size_t>(g.c()));
    const std::int64_t idx = nt::mod(a, g.c());
    for (std::int64_t j = 0; j < g.c(); ++j) values.push_back(CycloNumber::zeta(g.c(), idx * j));
    return BrauerChar(g, std::move(values));
}

BrauerChar uniserial_char(const HypoGroup& g, const IndecLabel& label) {
    if (label.length < 1 || label.length > g.p_power()) {
        throw ValidationError("uniserial length " + std::to_string(label.length) + " outside [1, p^n]");
    }
    // The composition factors S_{chi^{-k}(a)} only depend on k modulo ord(chi).
    const std::int64_t period = g.chi_order();
    std::vector<std::int64_t> mult(static_cast<std::size_t>(period), 0);
    for (std::int64_t k = 0; k < label.length; ++k) ++mult[k % period];
    std::vector<CycloNumber> values;
    values.reserve(static_cast<std::size_t>(g.c()));
    for (std::int64_t j = 0; j < g.c(); ++j) {
        std::vector<CycloNumber::Term> terms;
        for (std::int64_t k = 0; k < period; ++k) {
            if (mult[k] != 0) terms.emplace_back(g.chi_shift(label.socle, k) * j, Rational(mult[k]));
        }
        values.push_back(CycloNumber::from_terms(g.c(), terms));
    }
    return BrauerChar(g, std::move(values));
}

BrauerChar projective_char(const HypoGroup& g, std::int64_t a) {
    return uniserial_char(g, {nt::mod(a, g.c()), g.p_power()});
}

BrauerChar regular_char(const HypoGroup& g) {
    std::vector<CycloNumber> values(static_cast<std::size_t>(g.c()));
    values[0] = CycloNumber(g.order());
    return BrauerChar(g, std::move(values));
}

BrauerChar decomp_char(const HypoGroup& g, const Decomp& d) {
    BrauerChar out = BrauerChar::zero(g);
    for (const auto& [label, mult] : d) {
        if (mult != 0) out += uniserial_char(g, label) * Rational(mult);
    }
    return out;
}

namespace {

// Character values lifted to a common conductor with machine-integer coefficients.
struct IntegerForm {
    std::int64_t conductor = 1;
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> values;
};

std::int64_t common_conductor(const BrauerChar& x) {
    std::int64_t n = 1;
    for (const auto& v : x.values()) n = std::lcm(n, v.conductor());
    return n;
}

std::optional<IntegerForm> integer_form(const BrauerChar& x, std::int64_t conductor) {
    IntegerForm out;
    out.conductor = conductor;
    out.values.reserve(x.values().size());
    for (const auto& v : x.values()) {
        const std::int64_t f = conductor / v.conductor();
        auto& dst = out.values.emplace_back();
        for (const auto& [e, coeff] : v.terms()) {
            const auto small = coeff.small_integer();
            if (!small) return std::nullopt;
            dst.emplace_back(e * f, *small);
        }
    }
    return out;
}

Rational inner_product_general(const BrauerChar& x, const BrauerChar& y, std::int64_t conductor) {
    const HypoGroup& g = x.group();
    const std::int64_t c = g.c();
    CycloAccumulator acc(conductor);
    for (std::int64_t j = 0; j < c; ++j) {
        const std::int64_t size = g.class_size(j);
        if (size == 0) continue;
        acc.add_product(x.at((c - j) % c), y.at(j), Rational(size));
    }
    const CycloNumber total = acc.result();
    if (!total.is_rational()) throw ConsistencyError("inner product is not rational: " + total.to_string());
    return total.rational_value() / Rational(g.order());
}

}  // namespace

std::vector<Rational> pair_with_simples(const BrauerChar& x) {
    const HypoGroup& g = x.group();
    const std::int64_t c = g.c();
    const std::int64_t conductor = std::lcm(common_conductor(x), c);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(c));
    auto form = integer_form(x, conductor);
    if (!form) {
        for (std::int64_t a = 0; a < c; ++a) out.push_back(inner_product_general(x, simple_char(g, a), conductor));
        return out;
    }
    const std::int64_t step = conductor / c;
    IntCycloAccumulator acc(conductor);
    for (std::int64_t a = 0; a < c; ++a) {
        acc.clear();
        for (std::int64_t j = 0; j < c; ++j) {
            const std::int64_t size = g.class_size(j);
            if (size == 0) continue;
            const std::int64_t shift = (a * j % c) * step;
            for (const auto& [e, coeff] : form->values[(c - j) % c]) acc.add((e + shift) % conductor, coeff * size);
        }
        std::int64_t total = 0;
        if (!acc.reduce_to_integer(total)) {
            throw ConsistencyError("inner product with S_" + std::to_string(a) + " is not rational");
        }
        out.push_back(Rational(total, g.order()));
    }
    return out;
}

Rational inner_product(const BrauerChar& x, const BrauerChar& y) {
    if (!(x.group() == y.group())) throw std::invalid_argument("inner_product: characters of different groups");
    const HypoGroup& g = x.group();
    const std::int64_t c = g.c();
    const std::int64_t conductor = std::lcm(common_conductor(x), common_conductor(y));
    auto fx = integer_form(x, conductor);
    auto fy = fx ? integer_form(y, conductor) : std::nullopt;
    if (!fx || !fy) return inner_product_general(x, y, conductor);
    IntCycloAccumulator acc(conductor);
    for (std::int64_t j = 0; j < c; ++j) {
        const std::int64_t size = g.class_size(j);
        if (size == 0) continue;
        for (const auto& [ex, cx] : fx->values[(c - j) % c])
            for (const auto& [ey, cy] : fy->values[j]) acc.add((ex + ey) % conductor, cx * cy * size);
    }
    std::int64_t total = 0;
    if (!acc.reduce_to_integer(total)) throw ConsistencyError("inner product is not rational");
    return Rational(total, g.order());
}

Decomp decompose_projective(const BrauerChar& ch) {
    const HypoGroup& g = ch.group();
    const auto mults = pair_with_simples(ch);
    Decomp out;
    for (std::int64_t a = 0; a < g.c(); ++a) {
        const Rational& m = mults[static_cast<std::size_t>(a)];
        if (!m.is_integer() || m.sign() < 0) {
            throw ConsistencyError("projective multiplicity of socle " + std::to_string(a) + " is " + m.to_string() +
                                   " for " + g.describe());
        }
        if (!m.is_zero()) out[{a, g.p_power()}] = m.to_int64();
    }
    if (!(decomp_char(g, out) == ch)) {
        throw ConsistencyError("character is not a sum of projective characters over " + g.describe());
    }
    return out;
}

}  // namespace holodiff
