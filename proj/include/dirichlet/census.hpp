#pragma once

/**
 * @file census.hpp
 * @brief Primes per residue class and the prime-power side of the
 *        progression identity.
 *
 * For s = 1 + rho the prime-power sum over a progression,
 *
 *   S(k, m, s) = sum_{q prime, h >= 1, q^h = m (mod k)} q^{-hs} / h,
 *
 * equals (1/K) sum_chi conj(chi(m)) log L(s, chi) by orthogonality of the
 * characters. The principal character's log L(s) ~ log(1/rho) dominates as
 * rho -> 0, so S grows without bound and every coprime class contains
 * infinitely many primes.
 */

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "dirichlet/arith.hpp"

namespace dirichlet {

struct CensusReport {
    std::uint64_t N = 0;
    i64 k = 0;
    std::map<i64, std::uint64_t> counts;  ///< coprime residue m -> #primes q <= N, q = m (mod k)
    std::uint64_t excluded = 0;           ///< primes dividing k
    std::uint64_t total = 0;              ///< all primes <= N
    double ratio_spread = 0.0;            ///< max count / min count over coprime classes
};

/// Throws Error(invalid_argument) unless N >= k >= 3.
CensusReport census(std::uint64_t N, i64 k);

/// Header rows N, k, excluded, ratio_spread, then "m,count" rows.
void write_census_csv(std::ostream& out, const CensusReport& report);

/// S(k, m, 1+rho) over primes q <= N. Throws Error(not_coprime) when
/// gcd(m, k) > 1 and Error(domain) for rho <= 0.
double ap_prime_sum_lhs(i64 k, i64 m, double rho, std::uint64_t N);

struct IdentityCheck {
    i64 k = 0;
    i64 m = 0;
    double rho = 0.0;
    std::uint64_t N = 0;
    std::uint64_t Q = 0;
    double lhs = 0.0;
    std::complex<double> rhs;
    double discrepancy = 0.0;
    double bound = 0.0;

    bool passed() const { return discrepancy <= bound && std::abs(rhs.imag()) <= bound; }
};

/// Compares ap_prime_sum_lhs with (1/K) sum_chi conj(chi(m)) log_l(chi, 1+rho, Q).
IdentityCheck ap_identity_check(i64 k, i64 m, double rho, std::uint64_t N, std::uint64_t Q);

struct DivergencePoint {
    double rho = 0.0;
    double lhs = 0.0;            ///< truncated at N
    double tail_estimate = 0.0;  ///< E1(rho log N) / K, prime-number-theorem tail
    double corrected() const { return lhs + tail_estimate; }
};

struct DivergenceReport {
    i64 k = 0;
    i64 m = 0;
    std::uint64_t N = 0;
    std::vector<DivergencePoint> points;
    bool monotone = false;           ///< truncated lhs strictly increases as rho decreases
    double fitted_increment = 0.0;   ///< least-squares slope of corrected lhs against log2(1/rho)
    double expected_increment = 0.0; ///< (log 2) / K
};

/// rho_values must be positive; they are processed in the order given.
DivergenceReport divergence_probe(i64 k, i64 m, const std::vector<double>& rho_values, std::uint64_t N);

}  // namespace dirichlet
