#include <functional>
#include <stdexcept>
#include <string>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"
#include "holodiff/psl2mod3.hpp"

namespace holodiff::psl2 {
namespace {

int sign_power(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

// zeta_N^{k j} + zeta_N^{-k j}
CycloNumber cosine(std::int64_t conductor, std::int64_t k, std::int64_t j) {
    if (conductor == 1) return CycloNumber(2);
    return CycloNumber::from_terms(conductor, {{k * j, Rational(1)}, {-k * j, Rational(1)}});
}

ClassFunction tabulate(const ClassDataPtr& classes, const std::function<CycloNumber(const ConjugacyClass&)>& f) {
    std::vector<CycloNumber> values;
    values.reserve(classes->size());
    for (const auto& cl : classes->classes()) values.push_back(f(cl));
    return ClassFunction(classes, std::move(values));
}

// The ordinary characters the Brauer trees are built from.
struct Ordinary {
    ClassFunction trivial;
    ClassFunction steinberg;
    ClassFunction half_plus;    // degree (l+1)/2 or (l-1)/2, + sign at r1
    ClassFunction half_minus;
    std::vector<ClassFunction> v_induced;   // delta~*_t, t = 0, 1, ...
    std::vector<ClassFunction> w_induced;   // eta^G_k, k = 1, 2, ...
};

Ordinary ordinary_characters(const ClassDataPtr& classes) {
    const Psl2Case& c = classes->psl2_case();
    const std::int64_t ell = c.ell;
    const bool one_mod_four = ell % 4 == 1;
    // V is the split torus exactly when epsilon = 1.
    const bool v_split = c.epsilon == 1;
    const bool s_in_w = !c.two_dihedral_classes();
    const CycloNumber& root = classes->sqrt_signed_ell();

    Ordinary o{tabulate(classes, [](const ConjugacyClass&) { return CycloNumber(1); }),
               tabulate(classes,
                        [&](const ConjugacyClass& cl) -> CycloNumber {
                            switch (cl.kind) {
                                case ClassKind::identity: return CycloNumber(ell);
                                case ClassKind::order_ell_1:
                                case ClassKind::order_ell_2: return CycloNumber(0);
                                case ClassKind::involution: return CycloNumber(one_mod_four ? 1 : -1);
                                case ClassKind::v_torus: return CycloNumber(v_split ? 1 : -1);
                                case ClassKind::w_torus: return CycloNumber(v_split ? -1 : 1);
                            }
                            return CycloNumber(0);
                        }),
               ClassFunction::zero(classes), ClassFunction::zero(classes), {}, {}};

    // The two characters of degree (l +- 1)/2.  For l = 1 mod 4 they live on
    // the split torus, otherwise on the non-split one.
    for (int sign : {1, -1}) {
        ClassFunction f = tabulate(classes, [&](const ConjugacyClass& cl) -> CycloNumber {
            const bool torus_is_v = one_mod_four == v_split;
            switch (cl.kind) {
                case ClassKind::identity: return CycloNumber(one_mod_four ? (ell + 1) / 2 : (ell - 1) / 2);
                case ClassKind::order_ell_1:
                case ClassKind::order_ell_2: {
                    const int s = cl.kind == ClassKind::order_ell_1 ? sign : -sign;
                    const CycloNumber base(one_mod_four ? 1 : -1);
                    return (base + root * Rational(s)) * Rational(1, 2);
                }
                case ClassKind::involution: {
                    const std::int64_t k = one_mod_four ? (ell - 1) / 4 : (ell + 1) / 4;
                    return CycloNumber(one_mod_four ? sign_power(k) : -sign_power(k));
                }
                case ClassKind::v_torus:
                    if (!torus_is_v) return CycloNumber(0);
                    return CycloNumber(one_mod_four ? sign_power(cl.power) : -sign_power(cl.power));
                case ClassKind::w_torus:
                    if (torus_is_v) return CycloNumber(0);
                    return CycloNumber(one_mod_four ? sign_power(cl.power) : -sign_power(cl.power));
            }
            return CycloNumber(0);
        });
        (sign == 1 ? o.half_plus : o.half_minus) = std::move(f);
    }

    // Characters attached to characters of V (degree l + sigma).
    const int sigma = v_split ? 1 : -1;
    const std::int64_t v_count = c.m % 2 == 1 ? (c.m - 1) / 2 + 1 : c.m / 2;
    for (std::int64_t t = 0; t < v_count; ++t) {
        o.v_induced.push_back(tabulate(classes, [&](const ConjugacyClass& cl) -> CycloNumber {
            switch (cl.kind) {
                case ClassKind::identity: return CycloNumber(ell + sigma);
                case ClassKind::order_ell_1:
                case ClassKind::order_ell_2: return CycloNumber(sigma);
                case ClassKind::involution: return CycloNumber(s_in_w ? 0 : 2 * sigma * sign_power(t));
                case ClassKind::v_torus: return cosine(c.m, t, cl.power) * Rational(sigma);
                case ClassKind::w_torus: return CycloNumber(0);
            }
            return CycloNumber(0);
        }));
    }

    // Characters attached to non-real characters of W (degree l + tau).
    const int tau = -sigma;
    const std::int64_t w = c.w_order();
    const std::int64_t w_count = w % 2 == 0 ? w / 2 - 1 : (w - 1) / 2;
    for (std::int64_t k = 1; k <= w_count; ++k) {
        o.w_induced.push_back(tabulate(classes, [&](const ConjugacyClass& cl) -> CycloNumber {
            switch (cl.kind) {
                case ClassKind::identity: return CycloNumber(ell + tau);
                case ClassKind::order_ell_1:
                case ClassKind::order_ell_2: return CycloNumber(tau);
                case ClassKind::involution: return CycloNumber(s_in_w ? 2 * tau * sign_power(k) : 0);
                case ClassKind::v_torus: return CycloNumber(0);
                case ClassKind::w_torus: return cosine(w, k, cl.power) * Rational(tau);
            }
            return CycloNumber(0);
        }));
    }
    return o;
}

}  // namespace

std::size_t BlockData::simple_index(const std::string& name) const {
    for (std::size_t i = 0; i < simples.size(); ++i) {
        if (simples[i].name == name) return i;
    }
    throw std::out_of_range("BlockData: no simple module named " + name);
}

ClassFunction BlockData::projective_char(std::size_t idx) const {
    const Block& b = blocks.at(simples.at(idx).block);
    ClassFunction out = ClassFunction::zero(classes);
    std::size_t col = 0;
    while (b.simples[col] != idx) ++col;
    for (std::size_t row = 0; row < b.simples.size(); ++row) {
        out += simples[b.simples[row]].brauer * Rational(b.cartan[row][col]);
    }
    return out;
}

std::int64_t BlockData::projective_dimension(std::size_t idx) const {
    const Block& b = blocks.at(simples.at(idx).block);
    std::size_t col = 0;
    while (b.simples[col] != idx) ++col;
    std::int64_t dim = 0;
    for (std::size_t row = 0; row < b.simples.size(); ++row) {
        dim += b.cartan[row][col] * simples[b.simples[row]].dimension;
    }
    return dim;
}

std::vector<std::size_t> BlockData::uniserial_factors(std::size_t socle, std::int64_t length) const {
    const Block& b = blocks.at(simples.at(socle).block);
    const std::int64_t top = nt::ipow(3, b.defect);
    if (length < 1 || length > top) {
        throw ValidationError("uniserial length " + std::to_string(length) + " outside [1, " + std::to_string(top) + "]");
    }
    std::vector<std::size_t> out;
    switch (b.shape) {
        case TreeShape::defect_zero:
        case TreeShape::exceptional_star:
            out.assign(static_cast<std::size_t>(length), socle);
            break;
        case TreeShape::exceptional_middle: {
            const std::size_t other = b.simples[0] == socle ? b.simples[1] : b.simples[0];
            for (std::int64_t i = 0; i < length; ++i) out.push_back(i % 2 == 0 ? socle : other);
            break;
        }
        case TreeShape::exceptional_leaf:
            if (socle == b.simples[1]) {
                // Around the exceptional vertex, which has a single edge.
                out.assign(static_cast<std::size_t>(length), socle);
            } else {
                // Around the non-exceptional vertex of valence two.
                if (length > 2) throw ValidationError("uniserial length too large for this socle");
                out.push_back(socle);
                if (length == 2) out.push_back(b.simples[1]);
            }
            break;
    }
    return out;
}

ClassFunction BlockData::uniserial_char(std::size_t socle, std::int64_t length) const {
    ClassFunction out = ClassFunction::zero(classes);
    std::vector<std::int64_t> counts(simples.size(), 0);
    for (auto f : uniserial_factors(socle, length)) ++counts[f];
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] != 0) out += simples[i].brauer * Rational(counts[i]);
    }
    return out;
}

std::int64_t BlockData::uniserial_constituents(std::size_t socle, std::int64_t length) const {
    const Block& b = blocks.at(simples.at(socle).block);
    (void)uniserial_factors(socle, length);   // validates the length
    std::int64_t valence = 1;
    switch (b.shape) {
        case TreeShape::defect_zero: return 1;
        case TreeShape::exceptional_star: valence = 1; break;
        case TreeShape::exceptional_middle: valence = 2; break;
        case TreeShape::exceptional_leaf:
            if (socle != b.simples[1]) return 1;
            valence = 1;
            break;
    }
    // Every full turn around the exceptional vertex lifts to one more
    // exceptional character; a partial turn ends on a single edge whose other
    // end is a non-exceptional character.
    return length / valence + (length % valence != 0 ? 1 : 0);
}

BlockData block_data(const ClassDataPtr& classes, int s01) {
    const Psl2Case& c = classes->psl2_case();
    if (c.case_id == 4 && s01 != 1 && s01 != -1) throw ValidationError("block_data: s01 must be +1 or -1");
    Ordinary o = ordinary_characters(classes);

    BlockData bd;
    bd.classes = classes;
    bd.s01 = c.case_id == 4 ? s01 : 0;
    const std::int64_t q = c.sylow_order();
    const std::int64_t me = (q - 1) / 2;

    auto add_simple = [&](std::string name, ClassFunction brauer) {
        const std::int64_t dim = brauer.degree();
        bd.simples.push_back({std::move(name), dim, std::move(brauer), bd.blocks.size()});
        return bd.simples.size() - 1;
    };
    auto add_block = [&](std::string name, int defect, TreeShape shape, std::int64_t exc, std::vector<std::size_t> simples,
                         std::vector<std::vector<std::int64_t>> cartan) {
        bd.blocks.push_back({std::move(name), defect, shape, exc, std::move(simples), std::move(cartan)});
    };
    const std::vector<std::vector<std::int64_t>> leaf_cartan{{2, 1}, {1, (q + 1) / 2}};
    const std::vector<std::vector<std::int64_t>> middle_cartan{{me + 1, me}, {me, me + 1}};

    // Principal block.
    switch (c.case_id) {
        case 1:
        case 4: {
            const auto a = add_simple("T_0", o.trivial);
            const auto b = add_simple("T~_0", o.steinberg - o.trivial);
            add_block(c.case_id == 1 ? "B_0" : "B_{0,0}", c.n, TreeShape::exceptional_leaf, me, {a, b}, leaf_cartan);
            break;
        }
        case 2: {
            const auto a = add_simple("T_0", o.trivial);
            const auto b = add_simple("T_1", o.steinberg);
            add_block("B_0", c.n, TreeShape::exceptional_middle, me, {a, b}, middle_cartan);
            break;
        }
        case 3: {
            const auto a = add_simple("T_{0,0}", o.trivial);
            const auto b = add_simple("T_{1,1}", o.steinberg);
            add_block("B_{0,0}", c.n, TreeShape::exceptional_middle, me, {a, b}, middle_cartan);
            break;
        }
        default: throw ConsistencyError("block_data: bad case id");
    }

    // Second block with two simples in cases 3 and 4: both simples are the
    // leaves of a line with the exceptional vertex in the middle.
    if (c.two_dihedral_classes()) {
        const bool plus_first = c.case_id == 3 || s01 == 1;
        const auto a = add_simple("T_{0,1}", plus_first ? o.half_plus : o.half_minus);
        const auto b = add_simple("T_{1,0}", plus_first ? o.half_minus : o.half_plus);
        add_block("B_{0,1}", c.n, TreeShape::exceptional_middle, me, {a, b}, middle_cartan);
    }

    // Blocks with a single simple module.
    for (std::size_t t = 1; t < o.v_induced.size(); ++t) {
        const std::string name = "T~_" + std::to_string(t);
        const auto a = add_simple(name, o.v_induced[t]);
        add_block("B_" + std::to_string(t), c.n, TreeShape::exceptional_star, q - 1, {a}, {{q}});
    }

    // Defect zero.
    if (!c.two_dihedral_classes()) {
        const auto a = add_simple("gamma_1", o.half_plus);
        add_block("B(gamma_1)", 0, TreeShape::defect_zero, 0, {a}, {{1}});
        const auto b = add_simple("gamma_2", o.half_minus);
        add_block("B(gamma_2)", 0, TreeShape::defect_zero, 0, {b}, {{1}});
    }
    for (std::size_t k = 0; k < o.w_induced.size(); ++k) {
        const std::string name = "eta_" + std::to_string(k + 1);
        const auto a = add_simple(name, o.w_induced[k]);
        add_block("B(" + name + ")", 0, TreeShape::defect_zero, 0, {a}, {{1}});
    }

    bd.ordinary.push_back({"1", std::move(o.trivial)});
    bd.ordinary.push_back({"St", std::move(o.steinberg)});
    bd.ordinary.push_back({"half+", std::move(o.half_plus)});
    bd.ordinary.push_back({"half-", std::move(o.half_minus)});
    for (std::size_t t = 0; t < o.v_induced.size(); ++t) {
        bd.ordinary.push_back({"delta~*_" + std::to_string(t), std::move(o.v_induced[t])});
    }
    for (std::size_t k = 0; k < o.w_induced.size(); ++k) {
        bd.ordinary.push_back({"eta^G_" + std::to_string(k + 1), std::move(o.w_induced[k])});
    }
    return bd;
}

}  // namespace holodiff::psl2
