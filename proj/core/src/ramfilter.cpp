#include "holodiff/ramfilter.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "holodiff/errors.hpp"
#include "holodiff/numtheory.hpp"

namespace holodiff {
namespace {

std::string at_point(std::size_t k) { return "points[" + std::to_string(k) + "]"; }

void require_digit(std::int64_t p, int wild_exp, std::int64_t t) {
    if (t < 0 || t >= nt::ipow(p, wild_exp)) {
        throw ValidationError("layer index t = " + std::to_string(t) + " outside [0, p^" + std::to_string(wild_exp) + ")");
    }
}

// Base-p digits a_1, ..., a_w of t (least significant first).
std::vector<std::int64_t> digits(std::int64_t p, int wild_exp, std::int64_t t) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(wild_exp));
    for (auto& d : out) {
        d = t % p;
        t /= p;
    }
    return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    const std::int64_t q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace

void validate_jumps(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps) {
    if (static_cast<int>(jumps.size()) != wild_exp) {
        throw ValidationError("expected " + std::to_string(wild_exp) + " jumps, got " + std::to_string(jumps.size()));
    }
    for (std::size_t l = 0; l < jumps.size(); ++l) {
        const std::int64_t b = jumps[l];
        if (b <= 0) throw ValidationError("jump " + std::to_string(b) + " is not positive");
        if (b % p == 0) {
            throw ValidationError("jump " + std::to_string(b) + " not coprime to p = " + std::to_string(p) +
                                  " (jump not coprime congruence class)");
        }
        if (l > 0) {
            if (b <= jumps[l - 1]) throw ValidationError("jumps are not strictly increasing");
            if ((b - jumps[0]) % p != 0) {
                throw ValidationError("jump " + std::to_string(b) + " not congruent to " + std::to_string(jumps[0]) +
                                      " mod p (jump not coprime congruence class)");
            }
        }
    }
}

void validate(const RamInput& input) {
    const HypoGroup& g = input.group;
    if (input.n_I < 0 || input.n_I > g.n()) {
        throw ValidationError("n_I = " + std::to_string(input.n_I) + " outside [0, n]");
    }
    if (input.genus_Z < 0) throw ValidationError("genus_Z must be non-negative");
    int max_wild = 0;
    for (std::size_t k = 0; k < input.points.size(); ++k) {
        const RamPoint& pt = input.points[k];
        if (pt.wild_exp < 0 || pt.wild_exp > input.n_I) {
            throw ValidationError(at_point(k) + ".wild_exp = " + std::to_string(pt.wild_exp) + " outside [0, n_I]");
        }
        try {
            validate_jumps(g.p(), pt.wild_exp, pt.jumps);
        } catch (const ValidationError& e) {
            throw ValidationError(at_point(k) + ".jumps: " + e.what());
        }
        if (pt.tame_order < 1 || g.c() % pt.tame_order != 0) {
            throw ValidationError(at_point(k) + ".tame_order = " + std::to_string(pt.tame_order) + " does not divide c");
        }
        if (pt.tame_order > 1 && std::gcd(nt::mod(pt.fund_char_exp, pt.tame_order), pt.tame_order) != 1) {
            throw ValidationError(at_point(k) + ".fund_char_exp must be a unit modulo tame_order");
        }
        // The tame part of inertia acts on each jump quotient of the wild part
        // through theta^b, and on P through chi; the two must agree on the
        // subgroup of order e.
        if (pt.tame_order > 1) {
            for (const std::int64_t b : pt.jumps) {
                if (nt::mod(pt.fund_char_exp * b - g.chi_index(), pt.tame_order) != 0) {
                    throw ValidationError(at_point(k) + ".jumps: jump " + std::to_string(b) +
                                          " gives theta^b != chi on the tame inertia (jump not coprime congruence class)");
                }
            }
        }
        if (pt.count < 1) throw ValidationError(at_point(k) + ".count must be at least 1");
        if (pt.wild_exp == 0 && pt.tame_order == 1) {
            throw ValidationError(at_point(k) + " is unramified");
        }
        max_wild = std::max(max_wild, pt.wild_exp);
    }
    if (max_wild != input.n_I) {
        throw ValidationError("n_I = " + std::to_string(input.n_I) + " but the largest wild_exp is " +
                              std::to_string(max_wild));
    }
}

HypoGroup quotient_group(const RamInput& input) {
    const HypoGroup& g = input.group;
    const int n = g.n() - input.n_I;
    return HypoGroup(g.p(), n, g.c(), g.chi_index(), n == 0 ? 0 : nt::mod(g.action_unit(), nt::ipow(g.p(), n)));
}

std::int64_t divisor_multiplicity(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps, std::int64_t t) {
    require_digit(p, wild_exp, t);
    if (wild_exp == 0) return 0;
    const auto a = digits(p, wild_exp, t);
    std::int64_t s = 0;
    std::int64_t subtracted = 0;
    for (int l = 1; l <= wild_exp; ++l) {
        const std::int64_t weight = nt::ipow(p, wild_exp - l);
        s += (p - 1) * weight * (jumps[l - 1] + 1);
        subtracted += a[l - 1] * weight * jumps[l - 1];
    }
    return floor_div(s - subtracted, nt::ipow(p, wild_exp));
}

std::int64_t divisor_multiplicity_alt(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps,
                                      std::int64_t t) {
    require_digit(p, wild_exp, t);
    if (wild_exp == 0) return 0;
    const auto a = digits(p, wild_exp, t);
    std::int64_t numerator = 0;
    for (int l = 1; l <= wild_exp; ++l) {
        numerator += nt::ipow(p, wild_exp - l) * (p - 1 + (p - 1 - a[l - 1]) * jumps[l - 1]);
    }
    return floor_div(numerator, nt::ipow(p, wild_exp));
}

std::int64_t different_exponent(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps) {
    if (wild_exp == 0) return 0;
    std::int64_t total = 0;
    // Walk i = 0, 1, ... through the lower filtration: #I_i = p^{w-l} once i passes b_{l-1}.
    int level = 0;
    for (std::int64_t i = 0; i <= jumps.back(); ++i) {
        while (level < wild_exp && i > jumps[static_cast<std::size_t>(level)]) ++level;
        total += nt::ipow(p, wild_exp - level) - 1;
    }
    return total;
}

std::int64_t enumeration_oracle(std::int64_t p, int wild_exp, std::span<const std::int64_t> jumps, std::int64_t t) {
    require_digit(p, wild_exp, t);
    if (wild_exp == 0) return 0;
    const std::int64_t s = different_exponent(p, wild_exp, jumps);
    const auto a = digits(p, wild_exp, t);
    const std::int64_t pw = nt::ipow(p, wild_exp);
    // Order at the point of the t-th basis element of the local extension.
    std::int64_t basis_order = 0;
    for (int l = 1; l <= wild_exp; ++l) basis_order -= a[l - 1] * nt::ipow(p, wild_exp - l) * jumps[l - 1];
    // Smallest v with p^w v + basis_order >= -s.
    std::int64_t v = -(s / pw) - 2;
    while (pw * v + basis_order < -s) ++v;
    return -v;
}

LayerDivisors build_layers(const RamInput& input) {
    const HypoGroup& g = input.group;
    const std::int64_t p = g.p();
    const std::int64_t layers = nt::ipow(p, input.n_I);
    const std::int64_t hbar = g.order() / layers;
    LayerDivisors out;
    out.multiplicity.assign(static_cast<std::size_t>(layers), std::vector<std::int64_t>(input.points.size(), 0));
    out.degree.assign(static_cast<std::size_t>(layers), 0);
    for (std::size_t k = 0; k < input.points.size(); ++k) {
        const RamPoint& pt = input.points[k];
        const std::int64_t block = nt::ipow(p, input.n_I - pt.wild_exp);
        const std::int64_t orbit = pt.count * (hbar / pt.tame_order);
        for (std::int64_t j = 0; j < layers; ++j) {
            const std::int64_t d = divisor_multiplicity(p, pt.wild_exp, pt.jumps, j / block);
            out.multiplicity[j][k] = d;
            out.degree[j] += orbit * d;
        }
    }
    if (input.n_I > 0) {
        if (out.degree.back() != 0) throw ConsistencyError("top layer divisor is not zero");
        for (std::int64_t j = 0; j + 1 < layers; ++j) {
            if (out.degree[j] <= 0) throw ConsistencyError("layer " + std::to_string(j) + " divisor is not effective");
        }
    }
    return out;
}

std::int64_t genus_Y(const RamInput& input) {
    const std::int64_t hbar = input.group.order() / nt::ipow(input.group.p(), input.n_I);
    std::int64_t twice = hbar * (2 * input.genus_Z - 2);
    for (const auto& pt : input.points) twice += pt.count * (hbar / pt.tame_order) * (pt.tame_order - 1);
    if (twice % 2 != 0) throw ConsistencyError("Riemann-Hurwitz gives a non-integral genus for Y");
    const std::int64_t g = twice / 2 + 1;
    if (g < 0) throw ConsistencyError("Riemann-Hurwitz gives a negative genus for Y");
    return g;
}

std::int64_t genus_X(const RamInput& input, const LayerDivisors& layers) {
    const std::int64_t inertia = nt::ipow(input.group.p(), input.n_I);
    std::int64_t g = 1 + inertia * (genus_Y(input) - 1);
    for (auto d : layers.degree) g += d;
    if (g < 0) throw ConsistencyError("negative genus for X");
    return g;
}

}  // namespace holodiff
