#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace holodiff::nt {

bool is_prime(std::int64_t n);

// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t ipow(std::int64_t base, int exp);

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod);

// Non-negative residue of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Multiplicative order of a unit u modulo m; returns 0 if u is not a unit.
std::int64_t mult_order(std::int64_t u, std::int64_t m);

std::int64_t euler_phi(std::int64_t n);

// Moebius function.
int moebius(std::int64_t n);

// Legendre symbol (a / q) for an odd prime q.
int legendre(std::int64_t a, std::int64_t q);

// Exponent of p in n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

}  // namespace holodiff::nt
