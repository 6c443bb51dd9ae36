#pragma once

/**
 * @file quadratic.hpp
 * @brief The quadratic (Legendre) character mod an odd prime p.
 *
 * With a over quadratic residues and b over nonresidues in [1, p):
 *
 *   p = 3 (mod 4):  L(1) = pi (sum b - sum a) / (p sqrt p)
 *   p = 1 (mod 4):  L(1) = log(prod sin(b pi/p) / prod sin(a pi/p)) / sqrt p
 *
 * and for p = 1 (mod 4) the sine products are 2^{-(p+1)/2} (g -+ h sqrt p) for
 * integers g, h with g^2 - p h^2 = 4p; writing g = p k gives h^2 - p k^2 = -4.
 */

#include <complex>
#include <cstdint>
#include <optional>

#include "dirichlet/arith.hpp"
#include "dirichlet/characters.hpp"

namespace dirichlet {

/// The character mod p of order 2, as an element of the character group.
Character legendre_character(i64 p);

/// Legendre symbol (n/p) by Euler's criterion: -1, 0 or +1.
int legendre(i64 n, i64 p);

struct ResidueSums {
    i64 residues = 0;     ///< sum of a
    i64 nonresidues = 0;  ///< sum of b

    bool operator==(const ResidueSums&) const = default;
};

/// Throws Error(invalid_argument) unless p is an odd prime (same for all below).
ResidueSums residue_sums(i64 p);

/// sum_{n=1}^{p-1} (n/p) e^{2 pi i n/p}. Throws Error(precision_failure) if the
/// result is not within 1e-9 of i sqrt p (p = 3 mod 4) or sqrt p (p = 1 mod 4).
std::complex<double> gauss_sum(i64 p);

double l_one_quadratic(i64 p);

/// prod sin(b pi/p) / prod sin(a pi/p). Throws Error(unsupported) for p = 3 (mod 4).
double sin_product_ratio(i64 p);

struct PellSolution {
    i64 g = 0;
    i64 h = 0;
    i64 k = 0;  ///< g / p

    bool operator==(const PellSolution&) const = default;
};

/// Recovers g, h from the sine products in extended precision and verifies
/// g^2 - p h^2 = 4p, p | g and h^2 - p k^2 = -4 exactly. Throws
/// Error(unsupported) for p = 3 (mod 4) and Error(precision_failure) when the
/// recovered values are not within 1e-6 of integers or overflow 64 bits.
PellSolution pell_minus4(i64 p);

struct QuadraticReport {
    i64 p = 0;
    int class_mod4 = 0;
    ResidueSums sums;
    std::complex<double> gauss;
    double l_one = 0.0;
    std::optional<PellSolution> pell;
};

/// Everything above for one prime. A precision failure in pell_minus4
/// propagates.
QuadraticReport quadratic_report(i64 p);

}  // namespace dirichlet
