#pragma once

/**
 * @file modular_index.hpp
 * @brief Primitive roots, indices (discrete logarithms) and index systems.
 *
 * The multiplicative group mod k = 2^lambda * p^pi * p'^pi' ... is written as
 * a product of cyclic components:
 *
 *   - lambda >= 2: the sign component, generated by -1 (order 2);
 *   - lambda >= 3: the component generated by 5 mod 2^lambda (order 2^(lambda-2));
 *   - one component per odd prime power, generated by its smallest primitive
 *     root (order (p-1) p^(pi-1)).
 *
 * The index system of n is the tuple of exponents of n along these
 * components. lambda = 0 or 1 contributes no component.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "dirichlet/arith.hpp"

namespace dirichlet {

struct OddPrimePower {
    i64 prime = 0;
    int exponent = 0;
    i64 modulus = 0;         ///< prime^exponent
    i64 order = 0;           ///< (prime-1) prime^(exponent-1)
    i64 primitive_root = 0;  ///< smallest generator mod `modulus`

    bool operator==(const OddPrimePower&) const = default;
};

struct ModulusFactorization {
    i64 k = 0;
    int two_exponent = 0;
    std::vector<OddPrimePower> odd_factors;
    i64 group_order = 0;  ///< Euler's totient of k

    i64 two_part() const { return i64{1} << two_exponent; }
    bool has_sign_component() const { return two_exponent >= 2; }
    bool has_five_component() const { return two_exponent >= 3; }

    /// Orders of the cyclic components in index-system order.
    std::vector<i64> component_orders() const;

    bool operator==(const ModulusFactorization&) const = default;
};

struct IndexSystem {
    std::optional<i64> alpha;  ///< index to base -1, present iff lambda >= 2
    std::optional<i64> beta;   ///< index to base 5, present iff lambda >= 3
    std::vector<i64> gammas;   ///< one per odd prime power

    /// Components flattened in the order of component_orders().
    std::vector<i64> components() const;

    bool operator==(const IndexSystem&) const = default;
};

/// Throws Error(invalid_modulus) for k < 3.
ModulusFactorization factorize_modulus(i64 k);

/// Smallest c >= 2 generating (Z/p^pi)^*. Throws Error(invalid_argument)
/// unless p is an odd prime and pi >= 1.
i64 primitive_root(i64 p, int pi);

/// Discrete logarithm of `target` to `base` in a cyclic group of known order
/// mod m. Baby-step giant-step; orders below 10^4 are brute-forced.
/// Returns nullopt when target is not a power of base.
std::optional<i64> discrete_log(i64 base, i64 target, i64 m, i64 order);

/// gamma in [0, (p-1)p^(pi-1)) with c^gamma = n (mod p^pi), c = primitive_root(p, pi).
i64 index(i64 n, i64 p, int pi);

struct TwoPartIndex {
    i64 alpha = 0;
    std::optional<i64> beta;

    bool operator==(const TwoPartIndex&) const = default;
};

/// (alpha, beta) for odd n modulo 2^lambda, lambda >= 2; beta omitted for lambda == 2.
TwoPartIndex index_two_part(i64 n, int lambda);

IndexSystem index_system(i64 n, const ModulusFactorization& f);

/// Inverse of index_system: the residue in [0, k) whose system is `s`.
i64 reconstruct_residue(const IndexSystem& s, const ModulusFactorization& f);

}  // namespace dirichlet
