#include "holodiff/numtheory.hpp"

#include <numeric>

namespace holodiff::nt {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

__extension__ using wide_int = __int128;

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t result = 1;
    std::int64_t b = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = static_cast<std::int64_t>(static_cast<wide_int>(result) * b % m);
        b = static_cast<std::int64_t>(static_cast<wide_int>(b) * b % m);
        exp >>= 1;
    }
    return result;
}

std::int64_t mult_order(std::int64_t u, std::int64_t m) {
    if (m == 1) return 1;
    u = mod(u, m);
    if (std::gcd(u, m) != 1) return 0;
    std::int64_t x = u;
    std::int64_t k = 1;
    while (x != 1) {
        x = x * u % m;
        ++k;
    }
    return k;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (auto [q, e] : factorize(n)) r = r / q * (q - 1);
    return r;
}

int moebius(std::int64_t n) {
    int sign = 1;
    for (auto [q, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

int legendre(std::int64_t a, std::int64_t q) {
    const std::int64_t r = powmod(a, (q - 1) / 2, q);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

int valuation(std::int64_t n, std::int64_t p) {
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace holodiff::nt
