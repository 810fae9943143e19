#include "holodiff/tamechar.hpp"

#include <map>
#include <string>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"

namespace holodiff {

TameCoverData tame_cover_data(const RamInput& input, const LayerDivisors& layers) {
    TameCoverData cover{quotient_group(input), genus_Y(input), {}, {}, layers.degree};
    const std::int64_t p = input.group.p();
    for (std::size_t k = 0; k < input.points.size(); ++k) {
        const RamPoint& pt = input.points[k];
        if (pt.tame_order == 1) continue;
        // theta_y = theta_x^{#I_x}.
        const std::int64_t exp = nt::mod(pt.fund_char_exp * nt::powmod(p, pt.wild_exp, pt.tame_order), pt.tame_order);
        cover.orbits.push_back({pt.tame_order, exp, pt.count, k});
    }
    cover.ell.resize(layers.layer_count());
    for (std::size_t j = 0; j < layers.layer_count(); ++j) {
        for (const auto& orbit : cover.orbits) {
            cover.ell[j].push_back(nt::mod(-layers.multiplicity[j][orbit.source], orbit.tame_order));
        }
    }
    return cover;
}

std::vector<BrauerChar> induced_powers(const HypoGroup& quotient, std::int64_t tame_order, std::int64_t theta_exp) {
    const std::int64_t e = tame_order;
    const std::int64_t stride = quotient.c() / e;
    // For each p-regular class, how many h conjugate a class member onto each
    // generator power rho^{s c/e} of the inertia subgroup.
    std::map<std::int64_t, std::vector<std::int64_t>> class_counts;
    for (const auto& g : quotient.p_regular_elements()) {
        std::vector<std::int64_t> counts(static_cast<std::size_t>(e), 0);
        for (std::int64_t hi = 0; hi < quotient.p_power(); ++hi) {
            for (std::int64_t hj = 0; hj < quotient.c(); ++hj) {
                const HypoElement h{hi, hj};
                const HypoElement conj = quotient.multiply(quotient.multiply(h, g), quotient.inverse(h));
                if (conj.i == 0 && conj.j % stride == 0) ++counts[conj.j / stride];
            }
        }
        auto [it, inserted] = class_counts.emplace(quotient.class_of(g), counts);
        if (!inserted && it->second != counts) {
            throw ConsistencyError("induced character is not a class function on " + quotient.describe());
        }
    }
    std::vector<BrauerChar> out;
    out.reserve(static_cast<std::size_t>(e));
    for (std::int64_t t = 0; t < e; ++t) {
        std::vector<CycloNumber> values;
        values.reserve(static_cast<std::size_t>(quotient.c()));
        for (std::int64_t j = 0; j < quotient.c(); ++j) {
            const auto& counts = class_counts.at(j);
            std::vector<CycloNumber::Term> terms;
            for (std::int64_t s = 0; s < e; ++s) {
                if (counts[s] != 0) terms.emplace_back(theta_exp * t * s, Rational(counts[s], e));
            }
            values.push_back(CycloNumber::from_terms(e, terms));
        }
        out.emplace_back(quotient, std::move(values));
    }
    return out;
}

std::int64_t regular_multiplicity(std::size_t j, const TameCoverData& cover) {
    const std::int64_t hbar = cover.quotient.order();
    Rational n(cover.layer_degree[j] + cover.genus_Y - 1, hbar);
    for (std::size_t k = 0; k < cover.orbits.size(); ++k) {
        const auto& orbit = cover.orbits[k];
        const Rational per_point = (Rational(cover.ell[j][k]) - Rational(orbit.tame_order - 1, 2)) / Rational(orbit.tame_order);
        n += per_point * Rational(orbit.count);
    }
    if (!n.is_integer()) {
        throw ConsistencyError("layer " + std::to_string(j) + ": regular multiplicity " + n.to_string() +
                               " is not an integer");
    }
    return n.to_int64();
}

BrauerChar dual_twisted_layer_character(std::size_t j, const TameCoverData& cover) {
    const HypoGroup& h = cover.quotient;
    BrauerChar total = BrauerChar::zero(h);
    if (j == cover.top_layer()) total += simple_char(h, 0);
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<BrauerChar>> cache;
    for (std::size_t k = 0; k < cover.orbits.size(); ++k) {
        const auto& orbit = cover.orbits[k];
        const std::int64_t e = orbit.tame_order;
        auto it = cache.find({e, orbit.theta_exp});
        if (it == cache.end()) it = cache.emplace(std::pair{e, orbit.theta_exp}, induced_powers(h, e, orbit.theta_exp)).first;
        const auto& ind = it->second;
        BrauerChar contribution = BrauerChar::zero(h);
        for (std::int64_t t = 1; t < e; ++t) contribution += ind[t] * Rational(t, e);
        for (std::int64_t t = 1; t <= cover.ell[j][k]; ++t) contribution -= ind[nt::mod(-t, e)];
        total += contribution * Rational(orbit.count);
    }
    total += regular_char(h) * Rational(regular_multiplicity(j, cover));
    return total;
}

BrauerChar layer_character(std::size_t j, const TameCoverData& cover) {
    const HypoGroup& h = cover.quotient;
    const std::int64_t untwist = -static_cast<std::int64_t>(j) % h.c() * h.chi_index();
    BrauerChar ch = dual_twisted_layer_character(j, cover).dual() * simple_char(h, untwist);
    const std::int64_t expected = j == cover.top_layer() ? cover.genus_Y : cover.layer_degree[j] + cover.genus_Y - 1;
    if (!(ch.degree() == CycloNumber(expected))) {
        throw ConsistencyError("layer " + std::to_string(j) + " has degree " + ch.degree().to_string() + ", expected " +
                               std::to_string(expected));
    }
    return ch;
}

LayerDecomp layer_decompose(std::size_t j, const TameCoverData& cover, const BrauerChar& ch) {
    const HypoGroup& h = cover.quotient;
    LayerDecomp out;
    BrauerChar rest = ch;
    if (j == cover.top_layer() && h.n() >= 1) {
        rest -= simple_char(h, h.chi_index());
        out.has_chi_simple = true;
    }
    out.projectives = decompose_projective(rest);
    return out;
}

BrauerChar layer_decomp_char(const HypoGroup& quotient, const LayerDecomp& d) {
    BrauerChar ch = decomp_char(quotient, d.projectives);
    if (d.has_chi_simple) ch += simple_char(quotient, quotient.chi_index());
    return ch;
}

std::int64_t dimension(const LayerDecomp& d) { return dimension(d.projectives) + (d.has_chi_simple ? 1 : 0); }

}  // namespace holodiff
