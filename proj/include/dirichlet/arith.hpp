#pragma once

// Small exact integer helpers shared by the modules. Moduli stay well below
// 2^62 so products are formed in 128 bits.

#include <cstdint>
#include <utility>
#include <vector>

namespace dirichlet {

using i64 = std::int64_t;

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

i64 pow_mod(i64 base, i64 exp, i64 m);

i64 gcd(i64 a, i64 b);

/// Deterministic trial-division primality test; intended for n below ~1e12.
bool is_prime(i64 n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<i64, int>> factor(i64 n);

i64 totient(i64 n);

/// Multiplicative order of a modulo m, given the group order it divides.
i64 multiplicative_order(i64 a, i64 m, i64 group_order);

/// Solves x = r_i (mod m_i) for pairwise coprime moduli.
i64 crt(const std::vector<std::pair<i64, i64>>& residues_and_moduli);

}  // namespace dirichlet
