#include "dirichlet/census.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include <boost/math/special_functions/expint.hpp>

#include "dirichlet/characters.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/lseries.hpp"
#include "dirichlet/primes.hpp"

namespace dirichlet {

namespace {

void require_coprime(i64 k, i64 m) {
    if (gcd(mod(m, k), k) != 1) {
        throw Error(ErrorKind::not_coprime, std::to_string(m) + " is not coprime to " + std::to_string(k));
    }
}

}  // namespace

CensusReport census(std::uint64_t N, i64 k) {
    if (k < 3 || N < static_cast<std::uint64_t>(k)) {
        throw Error(ErrorKind::invalid_argument, "census needs N >= k >= 3");
    }
    CensusReport report;
    report.N = N;
    report.k = k;
    for (i64 m = 1; m < k; ++m) {
        if (gcd(m, k) == 1) report.counts[m] = 0;
    }
    const auto table = shared_primes(N);
    for (std::uint32_t q : primes_up_to(*table, N)) {
        ++report.total;
        const i64 r = static_cast<i64>(q) % k;
        if (auto it = report.counts.find(r); it != report.counts.end() && gcd(r, k) == 1) {
            ++it->second;
        } else {
            ++report.excluded;
        }
    }
    std::uint64_t lo = report.counts.begin()->second, hi = lo;
    for (const auto& [m, c] : report.counts) {
        lo = std::min(lo, c);
        hi = std::max(hi, c);
    }
    report.ratio_spread = lo == 0 ? std::numeric_limits<double>::infinity()
                                  : static_cast<double>(hi) / static_cast<double>(lo);
    return report;
}

void write_census_csv(std::ostream& out, const CensusReport& report) {
    char spread[64];
    std::snprintf(spread, sizeof spread, "%.6f", report.ratio_spread);
    out << "N," << report.N << '\n'
        << "k," << report.k << '\n'
        << "excluded," << report.excluded << '\n'
        << "ratio_spread," << spread << '\n'
        << "m,count\n";
    for (const auto& [m, c] : report.counts) out << m << ',' << c << '\n';
}

double ap_prime_sum_lhs(i64 k, i64 m, double rho, std::uint64_t N) {
    require_coprime(k, m);
    if (!(rho > 0.0)) throw Error(ErrorKind::domain, "rho must be positive");
    const i64 target = mod(m, k);
    const double s = 1.0 + rho;
    const auto table = shared_primes(N);
    double sum = 0.0, comp = 0.0;
    for (std::uint32_t q : primes_up_to(*table, N)) {
        const i64 qr = static_cast<i64>(q) % k;
        if (gcd(qr, k) != 1) continue;
        const double x = std::pow(static_cast<double>(q), -s);
        double power = x;
        i64 residue = qr;
        for (int h = 1; power >= kPowerTermCutoff; ++h) {
            if (residue == target) {
                const double term = power / h;
                const double t = sum + term;
                comp += std::abs(sum) >= term ? (sum - t) + term : (term - t) + sum;
                sum = t;
            }
            power *= x;
            residue = mul_mod(residue, qr, k);
        }
    }
    return sum + comp;
}

IdentityCheck ap_identity_check(i64 k, i64 m, double rho, std::uint64_t N, std::uint64_t Q) {
    require_coprime(k, m);
    IdentityCheck check;
    check.k = k;
    check.m = mod(m, k);
    check.rho = rho;
    check.N = N;
    check.Q = Q;
    check.lhs = ap_prime_sum_lhs(k, m, rho, N);

    const auto f = factorize_modulus(k);
    const auto group = enumerate_characters(f);
    cplx total{0.0, 0.0};
    double rhs_bound = 0.0;
    for (const auto& chi : group) {
        const auto log_value = log_l(chi, 1.0 + rho, Q);
        total += std::conj(chi(m)) * log_value.value;
        rhs_bound += log_value.error_bound;
    }
    const auto K = static_cast<double>(f.group_order);
    check.rhs = total / K;

    const double s = 1.0 + rho;
    const auto lhs_primes = primes_up_to(*shared_primes(N), N).size();
    const double lhs_bound = prime_power_tail_bound(N, s) + 2.0 * kPowerTermCutoff * static_cast<double>(lhs_primes);
    check.bound = lhs_bound + rhs_bound / K;
    check.discrepancy = std::abs(cplx{check.lhs, 0.0} - check.rhs);
    return check;
}

DivergenceReport divergence_probe(i64 k, i64 m, const std::vector<double>& rho_values, std::uint64_t N) {
    require_coprime(k, m);
    const auto K = static_cast<double>(totient(k));
    DivergenceReport report;
    report.k = k;
    report.m = mod(m, k);
    report.N = N;
    report.expected_increment = std::log(2.0) / K;
    for (double rho : rho_values) {
        DivergencePoint point;
        point.rho = rho;
        point.lhs = ap_prime_sum_lhs(k, m, rho, N);
        // sum_{q > N} q^{-s} ~ int_N^inf x^{-s} / log x dx = E1(rho log N)
        point.tail_estimate = boost::math::expint(1, rho * std::log(static_cast<double>(N))) / K;
        report.points.push_back(point);
    }

    report.monotone = true;
    for (std::size_t i = 1; i < report.points.size(); ++i) {
        const bool smaller_rho = report.points[i].rho < report.points[i - 1].rho;
        const bool larger_lhs = report.points[i].lhs > report.points[i - 1].lhs;
        if (smaller_rho != larger_lhs) report.monotone = false;
    }

    // slope of corrected lhs against log2(1/rho) = per-halving increment
    const auto n = static_cast<double>(report.points.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : report.points) {
        const double x = -std::log2(p.rho), y = p.corrected();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    if (report.points.size() >= 2) report.fitted_increment = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return report;
}

}  // namespace dirichlet
