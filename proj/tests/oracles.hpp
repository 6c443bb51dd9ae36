#pragma once

// Test-only reference computations. Each one takes a different route from
// the library code it checks: brute-force enumeration, trial division or a
// known closed form.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

inline std::int64_t totient_by_gcd(std::int64_t k) {
    std::int64_t count = 0;
    for (std::int64_t n = 1; n <= k; ++n) count += std::gcd(n, k) == 1;
    return count;
}

inline bool prime_by_trial(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Multiplicative order by repeated multiplication.
inline std::int64_t order_by_powers(std::int64_t a, std::int64_t m) {
    std::int64_t x = a % m, e = 1;
    while (x != 1) {
        x = x * a % m;
        ++e;
        if (e > m) return 0;
    }
    return e;
}

/// Exponent e with base^e = n (mod m), by walking powers.
inline std::int64_t log_by_powers(std::int64_t base, std::int64_t n, std::int64_t m) {
    std::int64_t x = 1 % m;
    for (std::int64_t e = 0; e < m; ++e) {
        if (x == ((n % m) + m) % m) return e;
        x = x * base % m;
    }
    return -1;
}

/// Quadratic residue test by listing squares.
inline bool is_square_mod(std::int64_t n, std::int64_t p) {
    for (std::int64_t x = 1; x < p; ++x) {
        if (x * x % p == ((n % p) + p) % p) return true;
    }
    return false;
}

inline constexpr double pi = std::numbers::pi;

inline double zeta2() { return pi * pi / 6.0; }

/// L(1) for the quadratic character mod 5: (2/sqrt 5) log golden ratio.
inline double l_one_mod5() { return 2.0 / std::sqrt(5.0) * std::log((1.0 + std::sqrt(5.0)) / 2.0); }

}  // namespace oracle
