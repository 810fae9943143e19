#include <algorithm>
#include <sstream>
#include <string>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"
#include "holodiff/psl2mod3.hpp"

namespace holodiff::psl2 {
namespace {

std::string format_decomp(const Decomp& d) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [label, mult] : d) {
        if (!first) os << ", ";
        first = false;
        os << mult << "*U(" << label.socle << "," << label.length << ")";
    }
    os << "}";
    return os.str();
}

// Closed-form multiplicities may be written with fractions; they must come out
// as non-negative integers.
std::int64_t whole(const Rational& r, const char* what) {
    if (!r.is_integer() || r.sign() < 0) {
        throw ConsistencyError(std::string("closed form: ") + what + " = " + r.to_string() + " is not a non-negative integer");
    }
    return r.to_int64();
}

void put(Decomp& d, std::int64_t socle, std::int64_t length, std::int64_t mult) {
    if (mult == 0) return;
    d[IndecLabel{socle, length}] += mult;
}

void put(N1Decomp& d, N1Label label, std::int64_t mult) {
    if (mult == 0) return;
    d[label] += mult;
}

int sign_power(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

// Different exponent of a point of X with the given inertia in a restriction
// subgroup.  The wild part has lower ramification groups I_0 = I_1 = I and
// I_2 = 1.
std::int64_t different(const Psl2Case& c, Inertia i) {
    switch (i) {
        case Inertia::sigma3: return (6 - 1) + (3 - 1);
        case Inertia::z3: return (3 - 1) + (3 - 1);
        case Inertia::z2: return 1;
        case Inertia::zell: return c.ell - 1;
    }
    return 0;
}

}  // namespace

std::string subgroup_name(Subgroup s) {
    switch (s) {
        case Subgroup::V: return "V";
        case Subgroup::Delta: return "Delta";
        case Subgroup::Delta1: return "Delta1";
        case Subgroup::Delta2: return "Delta2";
        case Subgroup::W: return "W";
        case Subgroup::R: return "R";
    }
    return "?";
}

std::string inertia_name(Inertia i) {
    switch (i) {
        case Inertia::sigma3: return "Sigma3";
        case Inertia::z3: return "Z/3";
        case Inertia::z2: return "Z/2";
        case Inertia::zell: return "Z/l";
    }
    return "?";
}

std::int64_t subgroup_order(const Psl2Case& c, Subgroup s) {
    switch (s) {
        case Subgroup::V: return c.v_order();
        case Subgroup::Delta:
        case Subgroup::Delta1:
        case Subgroup::Delta2: return 2 * c.sylow_order();
        case Subgroup::W: return c.w_order();
        case Subgroup::R: return c.ell;
    }
    return 0;
}

std::int64_t inertia_order(const Psl2Case& c, Inertia i) {
    switch (i) {
        case Inertia::sigma3: return 6;
        case Inertia::z3: return 3;
        case Inertia::z2: return 2;
        case Inertia::zell: return c.ell;
    }
    return 0;
}

std::vector<RamCount> ram_counts(const Psl2Case& c) {
    const std::int64_t t = c.sylow_order() / 3;   // 3^{n-1}
    const std::int64_t q = c.sylow_order();
    const std::int64_t l = c.ell;
    const std::int64_t e = c.epsilon;
    std::vector<RamCount> out;
    if (!c.two_dihedral_classes()) {
        out.push_back({Subgroup::V, Inertia::z3, t * c.m});
        out.push_back({Subgroup::Delta, Inertia::z3, t * (c.m - 1)});
        out.push_back({Subgroup::Delta, Inertia::sigma3, t});
        out.push_back({Subgroup::Delta, Inertia::z2, q * ((l + e) / 2 - 1)});
        out.push_back({Subgroup::W, Inertia::z2, (l + e) / 2});
    } else {
        out.push_back({Subgroup::V, Inertia::z3, t * c.m});
        out.push_back({Subgroup::Delta1, Inertia::z3, t * (c.m - 2)});
        out.push_back({Subgroup::Delta2, Inertia::z3, t * c.m});
        out.push_back({Subgroup::Delta1, Inertia::sigma3, 2 * t});
        out.push_back({Subgroup::V, Inertia::z2, q * c.m});
        out.push_back({Subgroup::Delta1, Inertia::z2, q * ((l - e) / 2 - 2)});
        out.push_back({Subgroup::Delta2, Inertia::z2, q * ((l - e) / 2)});
    }
    out.push_back({Subgroup::R, Inertia::zell, (l - 1) / 2});
    return out;
}

std::vector<Subgroup> restriction_subgroups(const Psl2Case& c) {
    if (c.two_dihedral_classes()) return {Subgroup::V, Subgroup::Delta1, Subgroup::Delta2};
    return {Subgroup::V, Subgroup::Delta};
}

namespace {

void require_restriction(const Psl2Case& c, Subgroup s) {
    const auto subs = restriction_subgroups(c);
    if (std::find(subs.begin(), subs.end(), s) == subs.end()) {
        throw ValidationError("subgroup " + subgroup_name(s) + " is not a restriction subgroup for ell=" + std::to_string(c.ell));
    }
}

}  // namespace

HypoGroup restriction_group(const Psl2Case& c, Subgroup s) {
    require_restriction(c, s);
    if (s == Subgroup::V) return HypoGroup(3, c.n, c.m, 0, 1);
    return HypoGroup(3, c.n, 2, 1, c.sylow_order() - 1);
}

RamInput restriction_input(const Psl2Case& c, Subgroup s) {
    RamInput in{restriction_group(c, s), 1, 0, {}};
    const std::int64_t order = subgroup_order(c, s);
    std::int64_t different_sum = 0;
    for (const auto& rc : ram_counts(c)) {
        if (rc.subgroup != s || rc.points == 0) continue;
        const std::int64_t stab = inertia_order(c, rc.inertia);
        if ((rc.points * stab) % order != 0) throw ConsistencyError("restriction_input: points do not form whole orbits");
        const std::int64_t orbits = rc.points * stab / order;
        different_sum += rc.points * different(c, rc.inertia);
        switch (rc.inertia) {
            case Inertia::sigma3: in.points.push_back({1, {1}, 2, 1, orbits}); break;
            case Inertia::z3: in.points.push_back({1, {1}, 1, 0, orbits}); break;
            case Inertia::z2: in.points.push_back({0, {}, 2, 1, orbits}); break;
            case Inertia::zell: throw ConsistencyError("restriction_input: order-l inertia in a restriction subgroup");
        }
    }
    // Riemann-Hurwitz: 2 g(X) - 2 = |H| (2 g(Z) - 2) + sum of different exponents.
    const std::int64_t lhs = 2 * genus(c.ell) - 2 - different_sum;
    if (lhs % (2 * order) != 0) throw ConsistencyError("restriction_input: Riemann-Hurwitz gives a fractional genus");
    in.genus_Z = lhs / (2 * order) + 1;
    if (in.genus_Z < 0) throw ConsistencyError("restriction_input: negative genus of the quotient");
    return in;
}

Decomp restriction_closed_form(const Psl2Case& c, Subgroup s) {
    require_restriction(c, s);
    const std::int64_t l = c.ell;
    const std::int64_t e = c.epsilon;
    const std::int64_t m = c.m;
    const std::int64_t q = c.sylow_order();
    const std::int64_t tail = 2 * q / 3;   // 2 * 3^{n-1}
    const std::int64_t base = (l + e) * (l - 6);
    Decomp d;
    if (s == Subgroup::V) {
        const Rational n2 = c.two_dihedral_classes() ? Rational(base - 14, 12) : Rational(base - 8, 12);
        const std::int64_t copies = whole(n2, "n_2(V)");
        for (std::int64_t a = 0; a < m; ++a) put(d, a, q, copies);
        if (c.two_dihedral_classes()) {
            for (std::int64_t t = 1; t <= m / 2; ++t) put(d, 2 * t - 1, q, 1);
        }
        put(d, 0, tail + 1, 1);
        for (std::int64_t t = 1; t < m; ++t) put(d, t, tail, 1);
        return d;
    }
    if (s == Subgroup::Delta) {
        const Rational n2 = Rational(m * (base - 8), 24) - Rational(l + e, 8);
        put(d, 0, q, whole(n2 + Rational(1), "n_2(Delta)+1"));
        put(d, 1, q, whole(n2 + Rational(l + e, 4) - Rational(1), "n_2(Delta)+(l+eps)/4-1"));
        put(d, 1, tail + 1, 1);
        put(d, 0, tail, (m - 1) / 2);
        put(d, 1, tail, (m - 1) / 2);
        return d;
    }
    const Rational n2 = Rational(m * (base - 8), 24) - Rational(l - e, 8);
    put(d, 0, q, whole(n2 + Rational(1), "n_2(Delta_i)+1"));
    put(d, 1, q, whole(n2 + Rational(l - e, 4) - Rational(1), "n_2(Delta_i)+(l-eps)/4-1"));
    put(d, 1, tail + 1, 1);
    if (s == Subgroup::Delta1) {
        put(d, 0, tail, m / 2);
        put(d, 1, tail, m / 2 - 1);
    } else {
        put(d, 0, tail, m / 2 - 1);
        put(d, 1, tail, m / 2);
    }
    return d;
}

RestrictionResult restriction_decomposition(std::int64_t ell, Subgroup s) {
    const Psl2Case c = classify(ell);
    RestrictionResult r{s, restriction_input(c, s), {}, restriction_closed_form(c, s)};
    EngineResult engine = run_engine(r.input);
    if (engine.genus_X != genus(ell)) {
        throw ConsistencyError("restriction to " + subgroup_name(s) + ": engine genus " + std::to_string(engine.genus_X) +
                               " differs from g(X)=" + std::to_string(genus(ell)));
    }
    r.assembled = std::move(engine.assembled);
    if (r.assembled.decomp != r.closed_form) {
        throw ConsistencyError("restriction to " + subgroup_name(s) + " for ell=" + std::to_string(ell) + ": engine " +
                               format_decomp(r.assembled.decomp) + " vs closed form " + format_decomp(r.closed_form));
    }
    return r;
}

// ---------------------------------------------------------------------------

std::string n1_label_name(const N1Label& l) {
    const std::string len = std::to_string(l.length);
    if (l.kind == N1Label::Kind::induced) return "U~_{" + std::to_string(l.first) + "," + len + "}";
    if (l.second < 0) return "U_{" + std::to_string(l.first) + "," + len + "}";
    return "U_{" + std::to_string(l.first) + "," + std::to_string(l.second) + "," + len + "}";
}

std::int64_t n1_dimension(const N1Decomp& d) {
    std::int64_t dim = 0;
    for (const auto& [label, mult] : d) dim += mult * label.length * (label.kind == N1Label::Kind::induced ? 2 : 1);
    return dim;
}

N1Decomp n1_decomposition(const Psl2Case& c) {
    using K = N1Label::Kind;
    const std::int64_t l = c.ell;
    const std::int64_t e = c.epsilon;
    const std::int64_t m = c.m;
    const std::int64_t q = c.sylow_order();
    const std::int64_t tail = 2 * q / 3;
    N1Decomp d;
    if (!c.two_dihedral_classes()) {
        put(d, {K::linear, 0, -1, q}, whole(Rational((l + e) * (l - 9) + 16, 24), "U_{0,3^n}"));
        put(d, {K::linear, 1, -1, q}, whole(Rational((l + e) * (l - 3) - 32, 24), "U_{1,3^n}"));
        const std::int64_t full = whole(Rational((l + e) * (l - 6) - 8, 12), "U~_{t,3^n}");
        for (std::int64_t t = 1; t <= (m - 1) / 2; ++t) put(d, {K::induced, t, -1, q}, full);
        put(d, {K::linear, 1, -1, tail + 1}, 1);
        for (std::int64_t t = 1; t <= (m - 1) / 2; ++t) put(d, {K::induced, t, -1, tail}, 1);
        return d;
    }
    const std::int64_t base = (l + e) * (l - 6);
    const Rational lower(base - 14, 24);
    const Rational eighth(l - e, 8);
    const std::int64_t mixed = nt::mod(base - 2, 24) == 0 ? (base - 2) / 24 : (base - 2 - nt::mod(base - 2, 24)) / 24;
    put(d, {K::linear, 0, 0, q}, whole(lower - eighth + Rational(1), "U_{0,0,3^n}"));
    put(d, {K::linear, 0, 1, q}, mixed);
    put(d, {K::linear, 1, 0, q}, mixed);
    put(d, {K::linear, 1, 1, q}, whole(lower + eighth - Rational(1), "U_{1,1,3^n}"));
    const std::int64_t even = whole(Rational(base - 14, 12), "U~_{2t,3^n}");
    const std::int64_t odd = whole(Rational(base - 2, 12), "U~_{2t-1,3^n}");
    for (std::int64_t t = 1; t <= (m - 2) / 4; ++t) put(d, {K::induced, 2 * t, -1, q}, even);
    for (std::int64_t t = 1; t <= m / 4; ++t) put(d, {K::induced, 2 * t - 1, -1, q}, odd);
    put(d, {K::linear, 1, 1, tail + 1}, 1);
    put(d, {K::linear, 0, 1, tail}, 1);
    for (std::int64_t t = 1; t <= m / 2 - 1; ++t) put(d, {K::induced, t, -1, tail}, 1);
    return d;
}

Decomp restrict_n1(const Psl2Case& c, const N1Decomp& d, Subgroup s) {
    require_restriction(c, s);
    Decomp out;
    for (const auto& [label, mult] : d) {
        const std::int64_t b = label.length;
        if (label.kind == N1Label::Kind::induced) {
            if (s == Subgroup::V) {
                put(out, label.first, b, mult);
                put(out, c.m - label.first, b, mult);
            } else {
                put(out, 0, b, mult);
                put(out, 1, b, mult);
            }
            continue;
        }
        switch (s) {
            case Subgroup::V: {
                const bool odd = label.second >= 0 && (label.first + label.second) % 2 == 1;
                put(out, odd ? c.m / 2 : 0, b, mult);
                break;
            }
            case Subgroup::Delta:
            case Subgroup::Delta1: put(out, label.first, b, mult); break;
            case Subgroup::Delta2: put(out, label.second, b, mult); break;
            default: break;
        }
    }
    return out;
}

std::vector<N1Class> n1_classes(const ClassData& classes) {
    const Psl2Case& c = classes.psl2_case();
    std::vector<N1Class> out;
    out.push_back({"e", classes.index_of(ClassKind::identity), ClassKind::identity, 0, 0});
    const std::int64_t last = c.m % 2 == 1 ? (c.m - 1) / 2 : c.m / 2 - 1;
    for (std::int64_t i = 1; i <= last; ++i) {
        out.push_back({"v^" + std::to_string(i), classes.index_of(ClassKind::v_torus, i), ClassKind::v_torus, i, 0});
    }
    const std::size_t inv = classes.index_of(ClassKind::involution);
    if (c.m % 2 == 0) out.push_back({"z", inv, ClassKind::involution, c.m / 2, 0});
    out.push_back({"s", inv, ClassKind::involution, 0, 1});
    if (c.m % 2 == 0) out.push_back({"vs", inv, ClassKind::involution, 0, 2});
    return out;
}

std::vector<CycloNumber> n1_character(const ClassData& classes, const N1Decomp& d) {
    const Psl2Case& c = classes.psl2_case();
    const auto cls = n1_classes(classes);
    const bool m_even = c.m % 2 == 0;
    // Value of a one-dimensional simple (linear label with socle (a, b)).
    auto linear = [&](std::int64_t a, std::int64_t b, const N1Class& k) -> std::int64_t {
        if (!m_even) return k.reflection != 0 ? sign_power(a) : 1;
        const std::int64_t sum = a + b;
        if (k.reflection == 1) return sign_power(a);
        if (k.reflection == 2) return sign_power(b);
        if (k.kind == ClassKind::involution) return sign_power(sum * (c.m / 2));
        if (k.kind == ClassKind::v_torus) return sign_power(sum * k.power);
        return 1;
    };
    auto induced = [&](std::int64_t t, const N1Class& k) -> CycloNumber {
        if (k.reflection != 0) return CycloNumber(0);
        if (k.kind == ClassKind::identity) return CycloNumber(2);
        if (k.kind == ClassKind::involution) return CycloNumber(2 * sign_power(t));
        return CycloNumber::from_terms(c.m, {{t * k.power, Rational(1)}, {-t * k.power, Rational(1)}});
    };
    std::vector<CycloNumber> out(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
        for (const auto& [label, mult] : d) {
            if (label.kind == N1Label::Kind::induced) {
                out[i] += induced(label.first, cls[i]) * Rational(mult * label.length);
                continue;
            }
            // Uniserial: alternate the socle with its partner, socle first.
            const std::int64_t socle_count = (label.length + 1) / 2;
            const std::int64_t partner_count = label.length / 2;
            const std::int64_t pa = 1 - label.first;
            const std::int64_t pb = label.second < 0 ? -1 : 1 - label.second;
            const std::int64_t v = socle_count * linear(label.first, label.second, cls[i]) +
                                   partner_count * linear(pa, pb, cls[i]);
            out[i] += CycloNumber(v * mult);
        }
    }
    return out;
}

}  // namespace holodiff::psl2
