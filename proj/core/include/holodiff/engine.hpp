#pragma once

#include <cstdint>
#include <vector>

#include "holodiff/assembler.hpp"
#include "holodiff/ramfilter.hpp"
#include "holodiff/tamechar.hpp"

namespace holodiff {

// Everything computed on the way from ramification data to the decomposition
// of the holomorphic differentials.
struct EngineResult {
    LayerDivisors divisors;
    TameCoverData cover;
    std::int64_t genus_Y = 0;
    std::int64_t genus_X = 0;
    std::vector<std::int64_t> regular_multiplicities;  // n_j
    std::vector<BrauerChar> layer_characters;          // over H/I
    std::vector<LayerDecomp> layer_decomps;
    AssembledDecomp assembled;
};

// Validates the input, runs all three steps and checks the dimension and
// character identities between them.
EngineResult run_engine(const RamInput& input);

}  // namespace holodiff
