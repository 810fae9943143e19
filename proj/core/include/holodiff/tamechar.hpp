#pragma once

#include <cstdint>
#include <vector>

#include "holodiff/hypogroup.hpp"
#include "holodiff/ramfilter.hpp"

namespace holodiff {

// A branch orbit of the tame cover Y -> Z with non-trivial inertia.
struct TameOrbit {
    std::int64_t tame_order;  // e = order of the inertia group in H/I
    std::int64_t theta_exp;   // fundamental character at Y: rho^{c/e} -> zeta_e^theta_exp
    std::int64_t count;       // number of such branch points in Z
    std::size_t source;       // index into RamInput::points
};

struct TameCoverData {
    HypoGroup quotient;  // H/I
    std::int64_t genus_Y = 0;
    std::vector<TameOrbit> orbits;
    // ell[j][k] in [0, e_k): minus the order of D_j at orbit k, reduced mod e_k.
    std::vector<std::vector<std::int64_t>> ell;
    std::vector<std::int64_t> layer_degree;  // deg D_j

    std::size_t layer_count() const { return layer_degree.size(); }
    std::size_t top_layer() const { return layer_degree.size() - 1; }
};

TameCoverData tame_cover_data(const RamInput& input, const LayerDivisors& layers);

// Ind from the order-e subgroup of C to H/I of theta^t, for t in [0, e),
// where theta(rho^{c/e}) = zeta_e^{theta_exp}.
std::vector<BrauerChar> induced_powers(const HypoGroup& quotient, std::int64_t tame_order, std::int64_t theta_exp);

// Multiplicity n_j of the regular character; throws ConsistencyError if it is not integral.
std::int64_t regular_multiplicity(std::size_t j, const TameCoverData& cover);

// Brauer character of the dual of S_{chi^j} tensor (M^{(j+1)}/M^{(j)}).
BrauerChar dual_twisted_layer_character(std::size_t j, const TameCoverData& cover);
// Brauer character of M^{(j+1)}/M^{(j)} itself.
BrauerChar layer_character(std::size_t j, const TameCoverData& cover);

struct LayerDecomp {
    Decomp projectives;              // over H/I; every label has length p^{n - n_I}
    bool has_chi_simple = false;     // the extra summand S_chi in the top layer
    friend bool operator==(const LayerDecomp&, const LayerDecomp&) = default;
};

LayerDecomp layer_decompose(std::size_t j, const TameCoverData& cover, const BrauerChar& ch);
BrauerChar layer_decomp_char(const HypoGroup& quotient, const LayerDecomp& d);
std::int64_t dimension(const LayerDecomp& d);

}  // namespace holodiff
