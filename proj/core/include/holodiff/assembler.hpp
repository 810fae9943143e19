#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holodiff/hypogroup.hpp"
#include "holodiff/tamechar.hpp"

namespace holodiff {

struct LabelCounts {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    friend bool operator==(const LabelCounts&, const LabelCounts&) = default;
};

struct AssembledDecomp {
    Decomp decomp;                               // over H
    std::map<IndecLabel, LabelCounts> counts;    // n1/n2 behind each full-block length
};

// Summands of a layer as labels over H/I, with S_chi written as (chi, 1).
Decomp layer_labels(const HypoGroup& quotient, const LayerDecomp& layer);

// Combines the p^{n_I} layer decompositions into the k[H]-decomposition.
// Throws ConsistencyError (with a dump of all layers) on a negative count.
AssembledDecomp assemble(const std::vector<LayerDecomp>& layers, const HypoGroup& group, int n_I);
// Same, with each layer already written as labels over H/I.
AssembledDecomp assemble_labels(const std::vector<Decomp>& layers, const HypoGroup& group, int n_I);

// The layers M^{(j+1)}/M^{(j)} of a k[H]-module given by labels, read off
// combinatorially.  Inverse of assemble on valid input.
std::vector<Decomp> slice(const Decomp& module, const HypoGroup& group, int n_I);

std::string dump_layers(const std::vector<LayerDecomp>& layers);

}  // namespace holodiff
