#include "holodiff/engine.hpp"

#include "holodiff/errors.hpp"

namespace holodiff {

EngineResult run_engine(const RamInput& input) {
    validate(input);
    LayerDivisors divisors = build_layers(input);
    TameCoverData cover = tame_cover_data(input, divisors);
    EngineResult result{divisors, cover, cover.genus_Y, genus_X(input, divisors), {}, {}, {}, {}};

    BrauerChar layer_sum = BrauerChar::zero(cover.quotient);
    std::int64_t layer_dims = 0;
    for (std::size_t j = 0; j < cover.layer_count(); ++j) {
        result.regular_multiplicities.push_back(regular_multiplicity(j, cover));
        BrauerChar ch = layer_character(j, cover);
        LayerDecomp d = layer_decompose(j, cover, ch);
        if (!(layer_decomp_char(cover.quotient, d) == ch)) {
            throw ConsistencyError("layer " + std::to_string(j) + " does not reconstruct its character");
        }
        layer_sum += ch;
        layer_dims += dimension(d);
        result.layer_characters.push_back(std::move(ch));
        result.layer_decomps.push_back(std::move(d));
    }
    if (layer_dims != result.genus_X) {
        throw ConsistencyError("layer dimensions sum to " + std::to_string(layer_dims) + " but g(X) = " +
                               std::to_string(result.genus_X));
    }

    result.assembled = assemble(result.layer_decomps, input.group, input.n_I);
    if (dimension(result.assembled.decomp) != result.genus_X) {
        throw ConsistencyError("assembled dimension " + std::to_string(dimension(result.assembled.decomp)) +
                               " differs from g(X) = " + std::to_string(result.genus_X));
    }
    // p-regular classes of H and H/I are both indexed by the C-component.
    const BrauerChar full = decomp_char(input.group, result.assembled.decomp);
    if (full.values() != layer_sum.values()) {
        throw ConsistencyError("assembled character differs from the sum of the layer characters");
    }
    return result;
}

}  // namespace holodiff
