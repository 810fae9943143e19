#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "holodiff/hypogroup.hpp"

namespace holodiff {

// Ramification data for one H-orbit type of branch points.
struct RamPoint {
    int wild_exp = 0;                  // the p-part of inertia has order p^wild_exp
    std::vector<std::int64_t> jumps;   // lower jumps b_0 < ... < b_{wild_exp-1}
    std::int64_t tame_order = 1;       // e, divides c
    std::int64_t fund_char_exp = 0;    // exponent of the fundamental character, mod e
    std::int64_t count = 1;            // number of branch points of Z with this data

    friend bool operator==(const RamPoint&, const RamPoint&) = default;
};

struct RamInput {
    HypoGroup group;
    int n_I = 0;               // the wild inertia subgroup I has order p^n_I
    std::int64_t genus_Z = 0;
    std::vector<RamPoint> points;

    friend bool operator==(const RamInput&, const RamInput&) = default;
};

// Throws ValidationError naming the offending field.
void validate(const RamInput& input);
void validate_jumps(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps);

// H/I as a hypo-elementary group with p-part of order p^{n - n_I}.
HypoGroup quotient_group(const RamInput& input);

// Multiplicity d of the layer divisor at a point with the given wild data,
// for digit index t in [0, p^wild_exp).  Three independent evaluations.
std::int64_t divisor_multiplicity(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps, std::int64_t t);
std::int64_t divisor_multiplicity_alt(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps, std::int64_t t);
std::int64_t enumeration_oracle(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps, std::int64_t t);

// Different exponent sum_{i >= 0} (#I_i - 1) read off the lower filtration.
std::int64_t different_exponent(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps);

struct LayerDivisors {
    // multiplicity[j][k]: d_{y,j} at a point of Y above points[k].
    std::vector<std::vector<std::int64_t>> multiplicity;
    std::vector<std::int64_t> degree;  // deg D_j
    std::size_t layer_count() const { return degree.size(); }
};

LayerDivisors build_layers(const RamInput& input);

// Riemann-Hurwitz for the tame cover Y -> Z.
std::int64_t genus_Y(const RamInput& input);
// g(X) = 1 + #I (g(Y) - 1) + sum_j deg D_j.
std::int64_t genus_X(const RamInput& input, const LayerDivisors& layers);

}  // namespace holodiff
