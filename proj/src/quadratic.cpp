#include "dirichlet/quadratic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dirichlet/characters.hpp"
#include "dirichlet/error.hpp"

namespace dirichlet {

namespace {

void require_odd_prime(i64 p) {
    if (p < 3 || !is_prime(p)) {
        throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not an odd prime");
    }
}

void require_one_mod_four(i64 p) {
    require_odd_prime(p);
    if (p % 4 != 1) {
        throw Error(ErrorKind::unsupported, "needs p = 1 (mod 4), got " + std::to_string(p));
    }
}

/// log(prod sin(b pi/p)) - log(prod sin(a pi/p)) and log(prod sin(a pi/p)).
struct LogSines {
    long double residues = 0.0L;
    long double nonresidues = 0.0L;
};

LogSines log_sine_products(i64 p) {
    LogSines out;
    const long double pi = std::numbers::pi_v<long double>;
    for (i64 m = 1; m < p; ++m) {
        const long double term = std::log(std::sin(static_cast<long double>(m) * pi / static_cast<long double>(p)));
        if (legendre(m, p) == 1) {
            out.residues += term;
        } else {
            out.nonresidues += term;
        }
    }
    return out;
}

}  // namespace

Character legendre_character(i64 p) {
    require_odd_prime(p);
    return Character(factorize_modulus(p), {(p - 1) / 2});
}

int legendre(i64 n, i64 p) {
    const i64 r = pow_mod(n, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

ResidueSums residue_sums(i64 p) {
    require_odd_prime(p);
    ResidueSums sums;
    for (i64 m = 1; m < p; ++m) {
        (legendre(m, p) == 1 ? sums.residues : sums.nonresidues) += m;
    }
    return sums;
}

std::complex<double> gauss_sum(i64 p) {
    require_odd_prime(p);
    const auto roots = unit_roots(p);
    std::complex<double> sum{0.0, 0.0};
    for (i64 n = 1; n < p; ++n) sum += static_cast<double>(legendre(n, p)) * (*roots)[static_cast<std::size_t>(n)];

    const double root_p = std::sqrt(static_cast<double>(p));
    const std::complex<double> expected = p % 4 == 1 ? std::complex<double>{root_p, 0.0}
                                                     : std::complex<double>{0.0, root_p};
    if (std::abs(sum - expected) > 1e-9) {
        throw Error(ErrorKind::precision_failure, "Gauss sum mod " + std::to_string(p) + " off its closed form");
    }
    return sum;
}

double l_one_quadratic(i64 p) {
    require_odd_prime(p);
    const double root_p = std::sqrt(static_cast<double>(p));
    if (p % 4 == 3) {
        const auto sums = residue_sums(p);
        return std::numbers::pi * static_cast<double>(sums.nonresidues - sums.residues) /
               (static_cast<double>(p) * root_p);
    }
    const auto logs = log_sine_products(p);
    return static_cast<double>(logs.nonresidues - logs.residues) / root_p;
}

double sin_product_ratio(i64 p) {
    require_one_mod_four(p);
    const auto logs = log_sine_products(p);
    return static_cast<double>(std::exp(logs.nonresidues - logs.residues));
}

PellSolution pell_minus4(i64 p) {
    require_one_mod_four(p);
    const auto logs = log_sine_products(p);
    const long double scale = static_cast<long double>(p + 1) / 2.0L * std::log(2.0L);
    const long double minus = std::exp(scale + logs.residues);     // g - h sqrt p
    const long double plus = std::exp(scale + logs.nonresidues);   // g + h sqrt p
    const long double root_p = std::sqrt(static_cast<long double>(p));
    const long double g_real = (plus + minus) / 2.0L;
    const long double h_real = (plus - minus) / (2.0L * root_p);

    constexpr long double kLimit = 4.0e18L;
    if (!(g_real < kLimit) || !(h_real < kLimit)) {
        throw Error(ErrorKind::precision_failure, "g, h exceed 64-bit range for p = " + std::to_string(p));
    }
    const long double g_round = std::round(g_real);
    const long double h_round = std::round(h_real);
    if (std::abs(g_real - g_round) >= 1e-6L || std::abs(h_real - h_round) >= 1e-6L) {
        throw Error(ErrorKind::precision_failure, "sine products too inexact to recover g, h for p = " +
                                                      std::to_string(p));
    }

    PellSolution out;
    out.g = static_cast<i64>(g_round);
    out.h = static_cast<i64>(h_round);
    const __int128 g = out.g, h = out.h, P = p;
    if (g * g - P * h * h != 4 * P || out.g % p != 0) {
        throw Error(ErrorKind::precision_failure, "recovered g, h fail g^2 - p h^2 = 4p for p = " + std::to_string(p));
    }
    out.k = out.g / p;
    const __int128 kk = out.k;
    if (h * h - P * kk * kk != -4) {
        throw Error(ErrorKind::precision_failure, "h^2 - p k^2 != -4 for p = " + std::to_string(p));
    }
    return out;
}

QuadraticReport quadratic_report(i64 p) {
    require_odd_prime(p);
    QuadraticReport r;
    r.p = p;
    r.class_mod4 = static_cast<int>(p % 4);
    r.sums = residue_sums(p);
    r.gauss = gauss_sum(p);
    r.l_one = l_one_quadratic(p);
    if (p % 4 == 1) r.pell = pell_minus4(p);
    return r;
}

}  // namespace dirichlet
