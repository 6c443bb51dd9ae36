#pragma once

/**
 * @file lseries.hpp
 * @brief L(s, chi) by four independent routes, each with a truncation bound.
 *
 *   series        sum_{n <= N} chi(n) n^{-s}, summed in increasing n. At s = 1
 *                 the series is only conditionally convergent and its value
 *                 depends on this ordering; nothing here reorders it.
 *   euler-product prod_{q <= Q, q !| k} (1 - chi(q) q^{-s})^{-1}, s > 1 only.
 *   integral      L(1, chi) = int_0^1 P(x) / (1 - x^k) dx with
 *                 P(x) = sum_{n<k} chi(n) x^{n-1}, after dividing (1 - x) out.
 *   closed-form   finite log-sine formula for prime moduli.
 *
 * Bounds cover truncation only; floating-point rounding is not included.
 */

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dirichlet/characters.hpp"

namespace dirichlet {

enum class LMethod { series, euler_product, integral, closed_form };

std::string_view to_string(LMethod m) noexcept;

struct LValue {
    cplx value;
    double error_bound = 0.0;
    LMethod method = LMethod::series;
    double s = 1.0;
};

struct SeriesOptions {
    /// Replace the plain truncation bound by an Euler-Maclaurin evaluation of
    /// the tail n > N (grouped in blocks of one period). The remainder bound
    /// is then of order (k/N)^6 rather than N^{1-s}.
    bool euler_maclaurin_tail = false;
};

/// Throws Error(divergent_series) for a principal chi with s <= 1,
/// Error(domain) for s < 1 and Error(invalid_argument) for N < k.
LValue dirichlet_series(const Character& chi, double s, std::uint64_t N, SeriesOptions options = {});

/// Throws Error(domain) for s <= 1 and Error(invalid_argument) for Q < 2.
LValue euler_product(const Character& chi, double s, std::uint64_t Q);

/// Throws Error(divergent_series) for the principal character.
LValue l_one_integral(const Character& chi);

/// Throws Error(unsupported) unless k is an odd prime and chi nonprincipal.
LValue l_one_closed_form_prime(const Character& chi);

struct PoleScanReport {
    i64 k = 0;
    std::vector<double> rho_values;
    std::vector<double> residue_estimates;  ///< rho * L_0(1 + rho)
    double extrapolated_residue = 0.0;      ///< intercept of a linear fit in rho
    double expected = 0.0;                  ///< K / k
};

/// Geometric grid from 1e-1 down to 1e-3, three points per decade.
std::vector<double> default_pole_grid();

/// Throws Error(invalid_argument) if a rho is not positive or the grid is not
/// strictly decreasing.
PoleScanReport principal_pole_scan(const ModulusFactorization& f, const std::vector<double>& rho_values);

/// Tail bound for sum_{q > N} sum_h q^{-hs}/h with s > 1:
/// N^{1-s} / ((s-1)(1 - N^{-s})).
double prime_power_tail_bound(std::uint64_t N, double s);

/// Prime-power terms q^{-hs} below this are dropped; the dropped tail of one
/// prime is below 2 * kPowerTermCutoff for s > 1.
inline constexpr double kPowerTermCutoff = 1e-16;

struct LogLValue {
    cplx value;               ///< u + i v, v continued from s = 1.5
    double error_bound = 0.0; ///< prime and prime-power truncation
    int tracking_steps = 0;
};

/// Prime-power expansion sum_h (1/h) sum_{q <= Q} chi(q)^h q^{-hs} of log L.
/// The imaginary part is fixed by continuity: v is taken in (-pi, pi] at
/// s0 = max(1.5, s) and followed down to s with steps keeping |dv| < pi/2.
/// Throws Error(domain) for s <= 1, Error(branch_tracking_failure) if the
/// step size underflows.
LogLValue log_l(const Character& chi, double s, std::uint64_t Q);

}  // namespace dirichlet
