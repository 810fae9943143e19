#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"
#include "holodiff/psl2mod3.hpp"

namespace holodiff::psl2 {
namespace {

int sign_power(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

// Index carried in a simple module name such as "T~_3" or "eta_5".
std::int64_t trailing_index(const std::string& name) { return std::stoll(name.substr(name.rfind('_') + 1)); }

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

std::string format_rationals(const BlockData& bd, const std::vector<Rational>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        os << " " << bd.simples[i].name << ":" << v[i].to_string();
    }
    return os.str();
}

}  // namespace

std::vector<UniserialSummand> green_uniserials(const BlockData& bd) {
    const Psl2Case& c = bd.classes->psl2_case();
    const std::int64_t q3 = c.sylow_order() / 3;   // 3^{n-1}
    std::vector<UniserialSummand> out;
    auto add = [&](const std::string& socle, std::int64_t length) {
        if (length > 0) out.push_back({bd.simple_index(socle), length});
    };
    switch (c.case_id) {
        case 1: add("T~_0", (q3 - 1) / 2); break;
        case 2: if (c.n > 1) add("T_1", 2 * q3 + 1); break;
        case 3:
            if (c.n > 1) add("T_{1,1}", 2 * q3 + 1);
            add("T_{0,1}", 2 * q3);
            break;
        case 4:
            add("T~_0", (q3 - 1) / 2);
            add("T_{0,1}", q3);
            break;
        default: break;
    }
    const std::int64_t per_block = c.case_id == 1 || c.case_id == 4 ? q3 : 2 * q3;
    for (std::size_t i = 0; i < bd.simples.size(); ++i) {
        const auto& name = bd.simples[i].name;
        if (starts_with(name, "T~_") && trailing_index(name) >= 1) out.push_back({i, per_block});
    }
    return out;
}

std::vector<Rational> closed_form_projectives(const BlockData& bd) {
    const Psl2Case& c = bd.classes->psl2_case();
    const std::int64_t l = c.ell;
    const std::int64_t h = l % 4 == 3 ? class_number(l) : 0;
    const Rational n_is_one(c.n == 1 ? 1 : 0);
    std::vector<Rational> out(bd.simples.size());
    for (std::size_t i = 0; i < bd.simples.size(); ++i) {
        const std::string& name = bd.simples[i].name;
        Rational& mult = out[i];
        switch (c.case_id) {
            case 1:
                if (starts_with(name, "T~_")) {
                    mult = Rational(l - 5, 12);
                } else if (starts_with(name, "gamma_")) {
                    mult = l % 8 == 1 ? Rational(l - 17, 24) : Rational(l - 5, 24);
                } else if (starts_with(name, "eta_")) {
                    mult = trailing_index(name) % 2 == 1 ? Rational(l - 5, 12) : Rational(l - 17, 12);
                }
                break;
            case 2:
                if (name == "T_1") {
                    mult = Rational(l - 19, 12) + n_is_one;
                } else if (starts_with(name, "T~_")) {
                    mult = Rational(l - 19, 12);
                } else if (starts_with(name, "gamma_")) {
                    const Rational base = l % 8 == 3 ? Rational(l - 7, 24) : Rational(l + 5, 24);
                    mult = name == "gamma_1" ? base - Rational(h, 2) : base + Rational(h, 2);
                } else if (starts_with(name, "eta_")) {
                    mult = trailing_index(name) % 2 == 1 ? Rational(l - 7, 12) : Rational(l + 5, 12);
                }
                break;
            case 3:
                if (name == "T_{1,1}") {
                    mult = Rational(l - 25, 12) + n_is_one;
                } else if (name == "T_{0,1}" || name == "T_{1,0}") {
                    mult = Rational(l - 19 - 6 * sign_power(c.m / 2), 24);
                } else if (starts_with(name, "T~_")) {
                    mult = Rational(l - 19 - 6 * sign_power(trailing_index(name)), 12);
                } else if (starts_with(name, "eta_")) {
                    mult = Rational(l - 1, 12);
                }
                break;
            case 4: {
                const Rational a(l - 5 + 6 * sign_power(c.m / 2), 24);
                const Rational shift(bd.s01 * h + 1, 2);
                if (name == "T~_0") {
                    mult = Rational(l + 1, 12);
                } else if (name == "T_{0,1}") {
                    mult = a - shift;
                } else if (name == "T_{1,0}") {
                    mult = a + shift;
                } else if (starts_with(name, "T~_")) {
                    mult = Rational(l - 5 + 6 * sign_power(trailing_index(name)), 12);
                } else if (starts_with(name, "eta_")) {
                    mult = Rational(l - 11, 12);
                }
                break;
            }
            default: throw ConsistencyError("closed_form_projectives: bad case id");
        }
    }
    return out;
}

std::vector<Rational> inner_product_projectives(const BlockData& bd, const ClassFunction& h0) {
    ClassFunction rest = h0;
    for (const auto& u : green_uniserials(bd)) rest -= bd.uniserial_char(u.socle, u.length);
    std::vector<Rational> out;
    out.reserve(bd.simples.size());
    ClassFunction rebuilt = ClassFunction::zero(bd.classes);
    for (std::size_t i = 0; i < bd.simples.size(); ++i) {
        out.push_back(inner_product(rest, bd.simples[i].brauer));
        if (!out.back().is_zero()) rebuilt += bd.projective_char(i) * out.back();
    }
    if (!(rebuilt == rest)) {
        throw ConsistencyError("inner_product_projectives: h0 minus the uniserial part is not a combination of "
                               "projective characters for ell=" + std::to_string(bd.classes->psl2_case().ell));
    }
    return out;
}

ClassFunction decomposition_character(const BlockData& bd, const NamedDecomp& d) {
    ClassFunction out = ClassFunction::zero(bd.classes);
    for (std::size_t i = 0; i < d.projective.size(); ++i) {
        if (d.projective[i] != 0) out += bd.projective_char(i) * Rational(d.projective[i]);
    }
    for (const auto& u : d.uniserials) out += bd.uniserial_char(u.socle, u.length);
    return out;
}

std::string projective_name(const BlockData& bd, std::size_t simple) { return "P(G," + bd.simples.at(simple).name + ")"; }

std::string uniserial_name(const BlockData& bd, const UniserialSummand& u) {
    return "U_{" + bd.simples.at(u.socle).name + "," + std::to_string(u.length) + "}";
}

FullDecomposition full_decomposition(std::int64_t ell) {
    const ClassDataPtr classes = make_class_data(ell);
    const Psl2Case& c = classes->psl2_case();
    FullDecomposition out{c, classes, h0_brauer(classes), {}};
    const std::int64_t g = genus(ell);
    const std::vector<int> choices = c.case_id == 4 ? std::vector<int>{1, -1} : std::vector<int>{0};
    std::string rejected;
    for (int s01 : choices) {
        BlockData bd = block_data(classes, s01 == 0 ? -1 : s01);
        const auto closed = closed_form_projectives(bd);
        bool admissible = true;
        for (const auto& r : closed) admissible = admissible && r.is_integer() && r.sign() >= 0;
        if (!admissible) {
            if (c.case_id != 4) {
                throw ConsistencyError("full_decomposition: closed-form multiplicities are not non-negative integers:" +
                                       format_rationals(bd, closed));
            }
            rejected += " s01=" + std::to_string(s01) + ":" + format_rationals(bd, closed);
            continue;
        }
        const auto paired = inner_product_projectives(bd, out.h0);
        if (paired != closed) {
            throw ConsistencyError("full_decomposition: closed form" + format_rationals(bd, closed) +
                                   " disagrees with inner products" + format_rationals(bd, paired));
        }
        NamedDecomp d;
        for (std::size_t i = 0; i < closed.size(); ++i) {
            d.projective.push_back(closed[i].to_int64());
            d.total_dimension += d.projective.back() * bd.projective_dimension(i);
        }
        d.uniserials = green_uniserials(bd);
        for (const auto& u : d.uniserials) d.total_dimension += bd.uniserial_char(u.socle, u.length).degree();
        if (d.total_dimension != g) {
            throw ConsistencyError("full_decomposition: dimension " + std::to_string(d.total_dimension) +
                                   " differs from the genus " + std::to_string(g));
        }
        if (!(decomposition_character(bd, d) == out.h0)) {
            throw ConsistencyError("full_decomposition: Brauer character of the decomposition differs from h0");
        }
        out.variants.push_back({bd.s01, std::move(bd), std::move(d)});
    }
    if (out.variants.empty()) {
        throw ConsistencyError("full_decomposition: no admissible sign choice for ell=" + std::to_string(ell) + ";" + rejected);
    }
    return out;
}

std::vector<BlockReport> congruence_report(const FullVariant& v) {
    const BlockData& bd = v.blocks;
    std::vector<BlockReport> out;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        const Block& block = bd.blocks[b];
        BlockReport r;
        r.block = block.name;
        r.defect = block.defect;
        for (auto s : block.simples) r.has_projective = r.has_projective || v.decomp.projective.at(s) != 0;
        for (const auto& u : v.decomp.uniserials) {
            if (bd.simples[u.socle].block != b) continue;
            r.uniserial_length += u.length;
            r.constituents += bd.uniserial_constituents(u.socle, u.length);
        }
        r.congruence = r.defect > 0 && (r.has_projective || r.constituents >= 2);
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t three_prime_part(std::int64_t x) {
    while (x % 3 == 0) x /= 3;
    return x;
}

std::string format_decomp(const Decomp& d) {
    std::ostringstream os;
    for (const auto& [label, mult] : d) os << " " << mult << "*U(" << label.socle << "," << label.length << ")";
    return os.str();
}

// Number of elements of each order type inside a restriction subgroup.
struct ElementCounts {
    std::int64_t order3 = 0;
    std::int64_t involutions = 0;
    std::int64_t order_ell = 0;
};

ElementCounts element_counts(const Psl2Case& c, Subgroup s) {
    switch (s) {
        case Subgroup::V: return {2, c.m % 2 == 0 ? 1 : 0, 0};
        case Subgroup::Delta:
        case Subgroup::Delta1:
        case Subgroup::Delta2: return {2, c.sylow_order(), 0};
        case Subgroup::W: return {0, c.w_order() % 2 == 0 ? 1 : 0, 0};
        case Subgroup::R: return {0, 0, c.ell - 1};
    }
    return {};
}

}  // namespace

std::vector<InvariantResult> verify_all(std::int64_t ell, bool with_restrictions) {
    std::vector<InvariantResult> out;
    auto check = [&](std::string name, const std::function<std::string()>& body) {
        InvariantResult r{std::move(name), false, {}};
        try {
            r.detail = body();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    };

    Psl2Case c;
    try {
        c = classify(ell);
    } catch (const std::exception& e) {
        out.push_back({"classify", false, e.what()});
        return out;
    }
    out.push_back({"classify", true, "case " + std::to_string(c.case_id) + ", n=" + std::to_string(c.n) +
                                         ", m=" + std::to_string(c.m)});
    const ClassDataPtr classes = make_class_data(ell);

    check("3-regular class sizes", [&]() -> std::string {
        const std::int64_t split = three_prime_part((ell - 1) / 2);
        const std::int64_t nonsplit = three_prime_part((ell + 1) / 2);
        const std::int64_t expected = 1 + (ell * ell - 1) + ell * (ell + 1) / 2 * (split - 1) +
                                      ell * (ell - 1) / 2 * (nonsplit - 1);
        const std::int64_t got = classes->regular_element_count();
        if (got == expected) return {};
        return "class sizes sum to " + std::to_string(got) + ", expected " + std::to_string(expected);
    });

    if (ell % 4 == 3) {
        check("class number", [&]() -> std::string {
            const std::int64_t h = class_number(ell);
            const std::int64_t forms = reduced_form_count(-ell);
            if (h == forms) return {};
            return "character sum gives " + std::to_string(h) + ", reduced forms give " + std::to_string(forms);
        });
    }

    check("fixed-point mass", [&]() -> std::string {
        const std::int64_t delta = ell % 4 == 1 ? 1 : -1;
        std::vector<Subgroup> subs = restriction_subgroups(c);
        subs.push_back(Subgroup::R);
        if (!c.two_dihedral_classes()) subs.push_back(Subgroup::W);
        std::string detail;
        for (auto s : subs) {
            std::int64_t mass = 0;
            for (const auto& rc : ram_counts(c)) {
                if (rc.subgroup == s) mass += rc.points * (inertia_order(c, rc.inertia) - 1);
            }
            const auto e = element_counts(c, s);
            const std::int64_t expected = e.order3 * (ell - c.epsilon) / 6 + e.involutions * (ell - delta) / 2 +
                                          e.order_ell * (ell - 1) / 2;
            if (mass != expected) {
                detail += subgroup_name(s) + ": " + std::to_string(mass) + " vs " + std::to_string(expected) + "; ";
            }
        }
        return detail;
    });

    const N1Decomp n1 = n1_decomposition(c);
    check("N1 dimension", [&]() -> std::string {
        const std::int64_t dim = n1_dimension(n1);
        if (dim == genus(ell)) return {};
        return "N1 decomposition has dimension " + std::to_string(dim);
    });

    for (auto s : restriction_subgroups(c)) {
        check("N1 restricted to " + subgroup_name(s), [&]() -> std::string {
            const Decomp from_n1 = restrict_n1(c, n1, s);
            const Decomp closed = restriction_closed_form(c, s);
            if (from_n1 != closed) return "restricted N1" + format_decomp(from_n1) + " vs closed form" + format_decomp(closed);
            if (with_restrictions) (void)restriction_decomposition(ell, s);
            return {};
        });
    }

    std::optional<FullDecomposition> full;
    check("full decomposition", [&]() -> std::string {
        full = full_decomposition(ell);
        return {};
    });

    check("N1 character", [&]() -> std::string {
        const ClassFunction h0 = full ? full->h0 : h0_brauer(classes);
        const auto cls = n1_classes(*classes);
        const auto values = n1_character(*classes, n1);
        std::string detail;
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (!(values[i] == h0.at(cls[i].g_class))) {
                detail += cls[i].name + ": " + values[i].to_string() + " vs " + h0.at(cls[i].g_class).to_string() + "; ";
            }
        }
        return detail;
    });

    if (full) {
        check("congruence report", [&]() -> std::string {
            std::string detail;
            for (const auto& v : full->variants) {
                for (const auto& r : congruence_report(v)) {
                    if (r.defect == 0 && r.congruence) detail += r.block + " flagged with defect 0; ";
                    if (r.uniserial_length > 0 && r.constituents < 1) detail += r.block + " has no constituents; ";
                }
            }
            return detail;
        });
    }
    return out;
}

}  // namespace holodiff::psl2
