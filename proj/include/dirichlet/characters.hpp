#pragma once

/**
 * @file characters.hpp
 * @brief Dirichlet characters as exponent tuples over the index system.
 *
 * A character mod k is fixed by one exponent per cyclic component of
 * (Z/k)^*: chi(n) = prod_j exp(2 pi i * e_j * x_j / order_j), where x is the
 * index system of n. All phases are reduced to a single integer numerator
 * over the group exponent L = lcm(orders) and read from a shared table of
 * L-th roots of unity, so values never accumulate rounding from repeated
 * multiplication. chi(n) = 0 whenever gcd(n, k) > 1.
 */

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dirichlet/modular_index.hpp"

namespace dirichlet {

using cplx = std::complex<double>;

/// exp(2 pi i t / order) for t in [0, order); exact at quarter turns.
/// Tables are built once per order and shared between threads.
std::shared_ptr<const std::vector<cplx>> unit_roots(i64 order);

enum class CharacterClass { principal, real_nonprincipal, complex };

std::string_view to_string(CharacterClass c) noexcept;

/// Index systems of every residue mod k, -1 rows for non-coprime residues.
/// Shared by all characters of one modulus.
struct ResidueIndexTable {
    ModulusFactorization modulus;
    std::vector<i64> orders;
    std::vector<std::vector<i64>> systems;  ///< systems[r] empty iff gcd(r, k) > 1
};

std::shared_ptr<const ResidueIndexTable> make_index_table(const ModulusFactorization& f);

class Character {
public:
    /// Exponents are reduced modulo the component orders.
    /// Throws Error(invalid_argument) if the tuple length is wrong.
    Character(const ModulusFactorization& f, std::vector<i64> exponents);
    Character(std::shared_ptr<const ResidueIndexTable> table, std::vector<i64> exponents);

    const ModulusFactorization& modulus() const { return table_->modulus; }
    i64 k() const { return table_->modulus.k; }
    std::span<const i64> exponents() const { return exponents_; }
    std::span<const i64> component_orders() const { return table_->orders; }

    /// Group exponent L: every value is an L-th root of unity.
    i64 root_order() const { return root_order_; }

    /// Numerator t of chi(n) = exp(2 pi i t / L); nullopt when gcd(n, k) > 1.
    std::optional<i64> phase(i64 n) const;

    cplx operator()(i64 n) const;

    /// chi(n) for n = 0 .. k-1.
    const std::vector<cplx>& values() const { return values_; }

    /// e.g. "chi[k=24;a=1,b=0,c=2]"
    std::string label() const;

    bool operator==(const Character& other) const {
        return k() == other.k() && exponents_ == other.exponents_;
    }

private:
    void build();

    std::shared_ptr<const ResidueIndexTable> table_;
    std::vector<i64> exponents_;
    i64 root_order_ = 1;
    std::vector<i64> phases_;  ///< per residue, -1 when not coprime
    std::vector<cplx> values_;
};

/// All K characters, principal first, lexicographic on exponent tuples.
std::vector<Character> enumerate_characters(const ModulusFactorization& f);

cplx eval_character(const Character& chi, i64 n);

CharacterClass classify(const Character& chi);

Character conjugate(const Character& chi);

/// sum over all characters of chi(n) * conj(chi(m)); K if n = m (mod k), else 0.
/// Throws Error(not_coprime) if gcd(m, k) > 1 and Error(precision_failure) if
/// the floating sum is not within 1e-9 of an integer.
i64 orthogonality_sum(const ModulusFactorization& f, i64 n, i64 m);

/// Same, over a precomputed character group of one modulus.
i64 orthogonality_sum(std::span<const Character> group, i64 n, i64 m);

/// Inverse of Character::label(). Throws Error(invalid_argument) on malformed
/// labels and Error(invalid_modulus) for k < 3.
Character parse_character_label(std::string_view label);

}  // namespace dirichlet
