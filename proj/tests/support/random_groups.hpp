#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "holodiff/hypogroup.hpp"
#include "holodiff/numtheory.hpp"

namespace holodiff::fixtures {

// Random p-hypo-elementary group with p^n * c <= max_order.
inline HypoGroup random_hypo_group(std::mt19937_64& rng, std::int64_t max_order) {
    static const std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
    for (;;) {
        const std::int64_t p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
        int max_n = 0;
        while (nt::ipow(p, max_n + 1) <= max_order) ++max_n;
        const int n = std::uniform_int_distribution<int>(0, max_n)(rng);
        const std::int64_t pn = nt::ipow(p, n);
        const std::int64_t max_c = max_order / pn;
        if (max_c < 1) continue;
        const std::int64_t c = std::uniform_int_distribution<std::int64_t>(1, max_c)(rng);
        if (std::gcd(c, p) != 1) continue;
        std::vector<std::int64_t> orders;
        for (std::int64_t d = 1; d <= std::gcd(c, p - 1); ++d) {
            if (std::gcd(c, p - 1) % d == 0) orders.push_back(d);
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
                if (nt::mult_order(v, pn) == d) units.push_back(v);
            }
            u = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
        }
        return HypoGroup(p, n, c, chi, u);
    }
}

}  // namespace holodiff::fixtures
