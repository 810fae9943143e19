#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holodiff/hypogroup.hpp"

namespace holodiff::cli {

struct OracleOutcome {
    std::int64_t checked = 0;
    std::optional<std::string> counterexample;   // first failure, if any
    bool passed() const { return !counterexample.has_value(); }
};

// Strictly increasing lower jumps b_0 < ... < b_{w-1}, all prime to p and
// congruent mod p, with b_{w-1} <= max_jump.
std::vector<std::int64_t> random_jumps(std::mt19937_64& rng, std::int64_t p, int wild_exp, std::int64_t max_jump);

// Random p-hypo-elementary group of order at most max_order.
HypoGroup random_hypo_group(std::mt19937_64& rng, std::int64_t max_order);

// The three divisor evaluations on random instances with p in {3, 5, 7},
// at most three jumps, each at most 50.
OracleOutcome divisor_oracle(std::int64_t samples, std::uint64_t seed);
// The same comparison over every jump sequence for p = 3 and at most two
// jumps bounded by max_jump, at every digit index.
OracleOutcome divisor_grid(std::int64_t max_jump);
// Class number against the reduced-form count for primes l = 3 mod 4, l <= to.
OracleOutcome classnumber_oracle(std::int64_t to);
// <Phi_a, phi_b> = delta_ab on random groups of order at most max_order.
OracleOutcome orthogonality_oracle(std::int64_t samples, std::uint64_t seed, std::int64_t max_order);

}  // namespace holodiff::cli
