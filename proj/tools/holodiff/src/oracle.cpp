#include "holodiff/cli/oracle.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "holodiff/numtheory.hpp"
#include "holodiff/psl2mod3.hpp"
#include "holodiff/ramfilter.hpp"

namespace holodiff::cli {
namespace {

std::string describe_jumps(std::int64_t p, int w, const std::vector<std::int64_t>& jumps, std::int64_t t) {
    std::ostringstream os;
    os << "p=" << p << " n_x=" << w << " jumps=[";
    for (std::size_t i = 0; i < jumps.size(); ++i) os << (i ? "," : "") << jumps[i];
    os << "] t=" << t;
    return os.str();
}

// Compares the three evaluations at one instance; returns a message on mismatch.
std::optional<std::string> compare_divisors(std::int64_t p, int w, const std::vector<std::int64_t>& jumps, std::int64_t t) {
    const std::int64_t closed = divisor_multiplicity(p, w, jumps, t);
    const std::int64_t alt = divisor_multiplicity_alt(p, w, jumps, t);
    const std::int64_t scan = enumeration_oracle(p, w, jumps, t);
    if (closed == alt && alt == scan) return std::nullopt;
    std::ostringstream os;
    os << describe_jumps(p, w, jumps, t) << ": closed form " << closed << ", digit sum " << alt << ", enumeration " << scan;
    return os.str();
}

}  // namespace

std::vector<std::int64_t> random_jumps(std::mt19937_64& rng, std::int64_t p, int wild_exp, std::int64_t max_jump) {
    for (;;) {
        std::vector<std::int64_t> jumps;
        std::int64_t b = std::uniform_int_distribution<std::int64_t>(1, p - 1)(rng);
        const std::int64_t room = std::max<std::int64_t>(1, max_jump / (p * std::max(wild_exp, 1)));
        for (int l = 0; l < wild_exp; ++l) {
            b += p * std::uniform_int_distribution<std::int64_t>(l == 0 ? 0 : 1, room)(rng);
            jumps.push_back(b);
        }
        if (jumps.empty() || jumps.back() <= max_jump) return jumps;
    }
}

HypoGroup random_hypo_group(std::mt19937_64& rng, std::int64_t max_order) {
    static constexpr std::array<std::int64_t, 6> primes{2, 3, 5, 7, 11, 13};
    for (;;) {
        const std::int64_t p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
        int max_n = 0;
        while (nt::ipow(p, max_n + 1) <= max_order) ++max_n;
        const int n = std::uniform_int_distribution<int>(0, max_n)(rng);
        const std::int64_t pn = nt::ipow(p, n);
        const std::int64_t c = std::uniform_int_distribution<std::int64_t>(1, max_order / pn)(rng);
        if (std::gcd(c, p) != 1) continue;
        // chi has order d dividing gcd(c, p - 1); pick a generator of that subgroup.
        const std::int64_t g = std::gcd(c, p - 1);
        std::vector<std::int64_t> orders;
        for (std::int64_t d = 1; d <= g; ++d) {
            if (g % d == 0) orders.push_back(d);
        }
        const std::int64_t d = orders[std::uniform_int_distribution<std::size_t>(0, orders.size() - 1)(rng)];
        std::vector<std::int64_t> chis;
        for (std::int64_t k = 0; k < d; ++k) {
            if (std::gcd(k, d) == 1) chis.push_back(k * (c / d));
        }
        const std::int64_t chi = chis[std::uniform_int_distribution<std::size_t>(0, chis.size() - 1)(rng)];
        std::int64_t u = 0;
        if (n >= 1) {
            std::vector<std::int64_t> units;
            for (std::int64_t v = 1; v < pn; ++v) {
                if (std::gcd(v, p) == 1 && nt::mult_order(v, pn) == d) units.push_back(v);
            }
            if (units.empty()) continue;
            u = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
        }
        return HypoGroup(p, n, c, chi, u);
    }
}

OracleOutcome divisor_oracle(std::int64_t samples, std::uint64_t seed) {
    static constexpr std::array<std::int64_t, 3> primes{3, 5, 7};
    std::mt19937_64 rng(seed);
    OracleOutcome out;
    for (std::int64_t s = 0; s < samples; ++s) {
        const std::int64_t p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
        const int w = std::uniform_int_distribution<int>(0, 3)(rng);
        const auto jumps = random_jumps(rng, p, w, 50);
        const std::int64_t t = std::uniform_int_distribution<std::int64_t>(0, nt::ipow(p, w) - 1)(rng);
        ++out.checked;
        if (auto bad = compare_divisors(p, w, jumps, t)) {
            out.counterexample = std::move(bad);
            return out;
        }
    }
    return out;
}

OracleOutcome divisor_grid(std::int64_t max_jump) {
    constexpr std::int64_t p = 3;
    OracleOutcome out;
    auto run = [&](int w, const std::vector<std::int64_t>& jumps) {
        for (std::int64_t t = 0; t < nt::ipow(p, w); ++t) {
            ++out.checked;
            if (auto bad = compare_divisors(p, w, jumps, t)) {
                out.counterexample = std::move(bad);
                return false;
            }
        }
        return true;
    };
    if (!run(0, {})) return out;
    for (std::int64_t b0 = 1; b0 <= max_jump; ++b0) {
        if (b0 % p == 0) continue;
        if (!run(1, {b0})) return out;
        for (std::int64_t b1 = b0 + p; b1 <= max_jump; b1 += p) {
            if (!run(2, {b0, b1})) return out;
        }
    }
    return out;
}

OracleOutcome classnumber_oracle(std::int64_t to) {
    OracleOutcome out;
    for (std::int64_t l = 7; l <= to; l += 4) {
        if (!nt::is_prime(l)) continue;
        ++out.checked;
        const std::int64_t h = psl2::class_number(l);
        const std::int64_t forms = psl2::reduced_form_count(-l);
        if (h != forms) {
            out.counterexample = "l=" + std::to_string(l) + ": character sum " + std::to_string(h) + ", reduced forms " +
                                 std::to_string(forms);
            return out;
        }
    }
    return out;
}

OracleOutcome orthogonality_oracle(std::int64_t samples, std::uint64_t seed, std::int64_t max_order) {
    // Every simple module of P x| C is one-dimensional, so
    // <phi_a * X, phi_b> = <X, phi_{b-a}>.  Once Phi_a = phi_a * Phi_0 is
    // checked pointwise, the full matrix follows from one row.  Small groups
    // also get every pairing evaluated directly.
    constexpr std::int64_t direct_limit = 150;
    std::mt19937_64 rng(seed);
    OracleOutcome out;
    auto fail = [&](const HypoGroup& g, const std::string& what) { out.counterexample = g.describe() + ": " + what; };
    for (std::int64_t s = 0; s < samples; ++s) {
        const HypoGroup g = random_hypo_group(rng, max_order);
        ++out.checked;
        const BrauerChar base = projective_char(g, 0);
        const auto row = pair_with_simples(base);
        for (std::int64_t d = 0; d < g.c(); ++d) {
            if (row[static_cast<std::size_t>(d)] != Rational(d == 0 ? 1 : 0)) {
                fail(g, "<Phi_0, phi_" + std::to_string(d) + "> = " + row[static_cast<std::size_t>(d)].to_string());
                return out;
            }
        }
        for (std::int64_t a = 1; a < g.c(); ++a) {
            const BrauerChar proj = projective_char(g, a);
            if (!(proj == simple_char(g, a) * base)) {
                fail(g, "Phi_" + std::to_string(a) + " is not phi_" + std::to_string(a) + " * Phi_0");
                return out;
            }
            if (g.c() > direct_limit) continue;
            const auto direct = pair_with_simples(proj);
            for (std::int64_t b = 0; b < g.c(); ++b) {
                const Rational& got = direct[static_cast<std::size_t>(b)];
                if (got != Rational(a == b ? 1 : 0)) {
                    fail(g, "<Phi_" + std::to_string(a) + ", phi_" + std::to_string(b) + "> = " + got.to_string());
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace holodiff::cli
