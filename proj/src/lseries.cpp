#include "dirichlet/lseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dirichlet/error.hpp"
#include "dirichlet/primes.hpp"
#include "dirichlet/quadrature.hpp"

namespace dirichlet {

namespace {

constexpr double kPi = std::numbers::pi;

/// Neumaier compensated summation over complex terms.
class CompensatedSum {
public:
    void add(cplx term) {
        add_part(re_, re_c_, term.real());
        add_part(im_, im_c_, term.imag());
    }
    cplx value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_part(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

bool is_principal(const Character& chi) { return classify(chi) == CharacterClass::principal; }

/// Euler-Maclaurin evaluation of sum_{n > N} chi(n) n^{-s}, written as
/// sum_{j >= 0} g(j) with g(x) = sum_{r=1}^{k} chi(N+r) (N + r + k x)^{-s}.
/// Returns the tail and a bound on the Euler-Maclaurin remainder.
std::pair<cplx, double> euler_maclaurin_tail(const Character& chi, double s, std::uint64_t N) {
    constexpr int kTerms = 3;  // B2, B4, B6
    constexpr double kBernoulli[kTerms] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0};
    constexpr double kFactorial[2 * kTerms + 1] = {1, 1, 2, 6, 24, 120, 720};
    constexpr double kZeta6 = 1.0173430619844491;

    const auto k = static_cast<double>(chi.k());
    const bool principal = is_principal(chi);

    CompensatedSum integral;
    CompensatedSum head;          // g(0) / 2
    CompensatedSum corrections;   // sum_i B_{2i}/(2i)! g^{(2i-1)}(0)
    double remainder = 0.0;

    for (i64 r = 1; r <= chi.k(); ++r) {
        const cplx c = chi(static_cast<i64>(N) + r);
        if (c == cplx{0.0, 0.0}) continue;
        const double a = static_cast<double>(N) + static_cast<double>(r);
        const double log_a = std::log(a);
        // int_0^inf (a + k x)^{-s} dx = a^{1-s} / (k (s-1)); for nonprincipal
        // chi the constant -1/(k(s-1)) cancels across r, which also covers s = 1.
        double antiderivative;
        if (principal) {
            antiderivative = std::exp((1.0 - s) * log_a) / (k * (s - 1.0));
        } else if (s == 1.0) {
            antiderivative = -log_a / k;
        } else {
            antiderivative = std::expm1((1.0 - s) * log_a) / (k * (s - 1.0));
        }
        integral.add(c * antiderivative);
        head.add(c * (0.5 * std::exp(-s * log_a)));

        // d^j/dx^j (a + kx)^{-s} at 0 = (-s)(-s-1)...(-s-j+1) k^j a^{-s-j}
        double falling = 1.0;
        double power = std::exp(-s * log_a);
        for (int j = 1; j <= 2 * kTerms - 1; ++j) {
            falling *= -(s + j - 1.0);
            power *= k / a;
            if (j % 2 == 1) {
                const int i = (j + 1) / 2;
                corrections.add(c * (kBernoulli[i - 1] / kFactorial[2 * i] * falling * power));
            }
        }
        // |R| <= 2 zeta(2M)/(2 pi)^{2M} int_0^inf |g^{(2M)}|
        double rising = 1.0;
        for (int j = 0; j < 2 * kTerms; ++j) rising *= s + j;
        const double integral_abs = rising * std::pow(k, 2.0 * kTerms - 1.0) *
                                    std::exp((1.0 - s - 2.0 * kTerms) * log_a) / (s + 2.0 * kTerms - 1.0);
        remainder += 2.0 * kZeta6 / std::pow(2.0 * kPi, 2.0 * kTerms) * integral_abs;
    }
    return {integral.value() + head.value() - corrections.value(), remainder};
}

}  // namespace

std::string_view to_string(LMethod m) noexcept {
    switch (m) {
        case LMethod::series: return "series";
        case LMethod::euler_product: return "euler-product";
        case LMethod::integral: return "integral";
        case LMethod::closed_form: return "closed-form";
    }
    return "unknown";
}

double prime_power_tail_bound(std::uint64_t N, double s) {
    const auto n = static_cast<double>(N);
    return std::pow(n, 1.0 - s) / ((s - 1.0) * (1.0 - std::pow(n, -s)));
}

LValue dirichlet_series(const Character& chi, double s, std::uint64_t N, SeriesOptions options) {
    const bool principal = is_principal(chi);
    if (principal && s <= 1.0) {
        throw Error(ErrorKind::divergent_series, "principal L-series diverges for s <= 1");
    }
    if (s < 1.0) {
        throw Error(ErrorKind::domain, "series evaluation needs s >= 1");
    }
    if (N < static_cast<std::uint64_t>(chi.k())) {
        throw Error(ErrorKind::invalid_argument, "cutoff N must be at least k");
    }

    const auto& values = chi.values();
    const auto k = static_cast<std::uint64_t>(chi.k());
    CompensatedSum sum;
    std::uint64_t r = 1 % k;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const cplx c = values[r];
        if (++r == k) r = 0;
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        const double weight = s == 1.0 ? 1.0 / static_cast<double>(n) : std::pow(static_cast<double>(n), -s);
        sum.add(c * weight);
    }

    LValue out;
    out.method = LMethod::series;
    out.s = s;
    if (options.euler_maclaurin_tail) {
        const auto [tail, remainder] = euler_maclaurin_tail(chi, s, N);
        out.value = sum.value() + tail;
        out.error_bound = remainder;
        return out;
    }

    out.value = sum.value();
    const auto n = static_cast<double>(N);
    double bound = std::numeric_limits<double>::infinity();
    if (s > 1.0) {
        const double density = static_cast<double>(chi.modulus().group_order) / static_cast<double>(chi.k());
        bound = std::pow(n, 1.0 - s) / (s - 1.0) * (density + 1.0);
    }
    if (!principal) bound = std::min(bound, 2.0 * static_cast<double>(chi.k()) * std::pow(n, -s));
    out.error_bound = bound;
    return out;
}

LValue euler_product(const Character& chi, double s, std::uint64_t Q) {
    if (s <= 1.0) {
        throw Error(ErrorKind::domain, "Euler product needs s > 1");
    }
    if (Q < 2) {
        throw Error(ErrorKind::invalid_argument, "prime cutoff Q must be at least 2");
    }
    const auto table = shared_primes(Q);
    cplx product{1.0, 0.0};
    for (std::uint32_t q : primes_up_to(*table, Q)) {
        const cplx c = chi(static_cast<i64>(q));
        if (c == cplx{0.0, 0.0}) continue;
        product /= 1.0 - c * std::pow(static_cast<double>(q), -s);
    }
    LValue out;
    out.value = product;
    out.method = LMethod::euler_product;
    out.s = s;
    out.error_bound = std::abs(product) * std::expm1(prime_power_tail_bound(Q, s));
    return out;
}

LValue l_one_integral(const Character& chi) {
    if (is_principal(chi)) {
        throw Error(ErrorKind::divergent_series, "principal character: integral diverges at x = 1");
    }
    const i64 k = chi.k();
    // P(x) = sum_{j=0}^{k-2} chi(j+1) x^j = (1 - x) R(x), R_j = prefix sums.
    std::vector<cplx> reduced(static_cast<std::size_t>(k - 2));
    cplx prefix{0.0, 0.0};
    for (i64 j = 0; j + 2 < k; ++j) {
        prefix += chi(j + 1);
        reduced[static_cast<std::size_t>(j)] = prefix;
    }
    prefix += chi(k - 1);
    if (std::abs(prefix) > 1e-9) {
        throw Error(ErrorKind::precision_failure, "character sum over a period does not vanish");
    }

    auto integrand = [&](double x) {
        cplx num{0.0, 0.0};
        for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) num = num * x + *it;
        double den = 0.0;
        for (i64 j = 0; j < k; ++j) den = den * x + 1.0;
        return num / den;
    };
    const auto q = adaptive_gauss_legendre(integrand, 0.0, 1.0, 1e-10);

    LValue out;
    out.value = q.value;
    out.error_bound = q.error_estimate;
    out.method = LMethod::integral;
    out.s = 1.0;
    return out;
}

LValue l_one_closed_form_prime(const Character& chi) {
    const auto& f = chi.modulus();
    const bool prime_modulus =
        f.two_exponent == 0 && f.odd_factors.size() == 1 && f.odd_factors.front().exponent == 1;
    if (!prime_modulus) {
        throw Error(ErrorKind::unsupported, "closed form needs an odd prime modulus, got " + std::to_string(f.k));
    }
    if (is_principal(chi)) {
        throw Error(ErrorKind::unsupported, "closed form is for nonprincipal characters");
    }
    const i64 p = f.k;
    const auto roots = unit_roots(p);

    // Gauss-type sum f(zeta_p) = sum_g chi(g) zeta_p^g
    cplx gauss{0.0, 0.0};
    for (i64 g = 1; g < p; ++g) gauss += chi(g) * (*roots)[static_cast<std::size_t>(g)];

    // int_0^1 dx / (x - e^{2 pi i m/p}) = log(2 sin(m pi/p)) + (pi/2)(1 - 2m/p) i
    CompensatedSum weighted;
    const auto pd = static_cast<double>(p);
    for (i64 m = 1; m < p; ++m) {
        const double md = static_cast<double>(m);
        const cplx integral{std::log(2.0 * std::sin(md * kPi / pd)), 0.5 * kPi * (1.0 - 2.0 * md / pd)};
        weighted.add(std::conj(chi(m)) * integral);
    }

    LValue out;
    out.value = -gauss * weighted.value() / pd;
    out.error_bound = 0.0;
    out.method = LMethod::closed_form;
    out.s = 1.0;
    return out;
}

std::vector<double> default_pole_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 6; ++i) grid.push_back(std::pow(10.0, -1.0 - i / 3.0));
    return grid;
}

PoleScanReport principal_pole_scan(const ModulusFactorization& f, const std::vector<double>& rho_values) {
    for (std::size_t i = 0; i < rho_values.size(); ++i) {
        if (!(rho_values[i] > 0.0)) throw Error(ErrorKind::invalid_argument, "rho values must be positive");
        if (i > 0 && !(rho_values[i] < rho_values[i - 1])) {
            throw Error(ErrorKind::invalid_argument, "rho values must be strictly decreasing");
        }
    }
    const Character principal(f, std::vector<i64>(f.component_orders().size(), 0));

    PoleScanReport report;
    report.k = f.k;
    report.rho_values = rho_values;
    report.expected = static_cast<double>(f.group_order) / static_cast<double>(f.k);

    for (double rho : rho_values) {
        std::uint64_t N = 16 * static_cast<std::uint64_t>(f.k);
        LValue l;
        while (true) {
            l = dirichlet_series(principal, 1.0 + rho, N, {.euler_maclaurin_tail = true});
            if (l.error_bound < rho * 1e-3) break;
            if (N > (std::uint64_t{1} << 32)) {
                throw Error(ErrorKind::precision_failure, "pole scan cutoff exceeded 2^32");
            }
            N *= 2;
        }
        report.residue_estimates.push_back(rho * l.value.real());
    }

    // least squares y = a + b rho
    const auto n = static_cast<double>(rho_values.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < rho_values.size(); ++i) {
        const double x = rho_values[i], y = report.residue_estimates[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    if (rho_values.size() >= 2) {
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        report.extrapolated_residue = (sy - slope * sx) / n;
    } else if (!rho_values.empty()) {
        report.extrapolated_residue = report.residue_estimates.front();
    }
    return report;
}

namespace {

struct PrimeTerm {
    double log_q;
    i64 phase;
};

/// sum_h (1/h) sum_q chi(q)^h q^{-hs} over the prepared primes.
cplx prime_power_log(const std::vector<PrimeTerm>& terms, const std::vector<cplx>& roots, i64 root_order, double s) {
    CompensatedSum sum;
    for (const auto& t : terms) {
        const double x = std::exp(-s * t.log_q);
        double power = x;
        i64 phase = t.phase;
        for (int h = 1; power >= kPowerTermCutoff; ++h) {
            sum.add(roots[static_cast<std::size_t>(phase)] * (power / h));
            power *= x;
            phase += t.phase;
            if (phase >= root_order) phase -= root_order;
        }
    }
    return sum.value();
}

}  // namespace

LogLValue log_l(const Character& chi, double s, std::uint64_t Q) {
    if (s <= 1.0) {
        throw Error(ErrorKind::domain, "log L expansion needs s > 1");
    }
    if (Q < 2) {
        throw Error(ErrorKind::invalid_argument, "prime cutoff Q must be at least 2");
    }
    const auto table = shared_primes(Q);
    const auto primes = primes_up_to(*table, Q);
    std::vector<PrimeTerm> terms;
    terms.reserve(primes.size());
    for (std::uint32_t q : primes) {
        if (auto t = chi.phase(static_cast<i64>(q))) {
            terms.push_back({std::log(static_cast<double>(q)), *t});
        }
    }
    const i64 L = chi.root_order();
    const auto roots = unit_roots(L);

    auto evaluate = [&](double at) { return prime_power_log(terms, *roots, L, at); };
    auto principal_arg = [](double im) { return std::remainder(im, 2.0 * kPi); };

    constexpr double kStart = 1.5;
    constexpr double kMaxStep = 0.05;
    constexpr double kMinStep = 1e-12;

    double current_s = std::max(kStart, s);
    cplx current = evaluate(current_s);
    double v = principal_arg(current.imag());
    double wrapped = v;
    double step = kMaxStep;
    int steps = 0;
    while (current_s > s) {
        const double next_s = std::max(s, current_s - step);
        const cplx next = evaluate(next_s);
        const double next_wrapped = principal_arg(next.imag());
        const double dv = std::remainder(next_wrapped - wrapped, 2.0 * kPi);
        if (std::abs(dv) >= kPi / 2) {
            step *= 0.5;
            if (step < kMinStep) {
                throw Error(ErrorKind::branch_tracking_failure,
                            "argument of L jumps near s = " + std::to_string(current_s));
            }
            continue;
        }
        v += dv;
        wrapped = next_wrapped;
        current_s = next_s;
        current = next;
        step = std::min(kMaxStep, 2.0 * step);
        ++steps;
    }

    LogLValue out;
    out.value = {current.real(), v};
    out.error_bound = prime_power_tail_bound(Q, s) + 2.0 * kPowerTermCutoff * static_cast<double>(terms.size());
    out.tracking_steps = steps;
    return out;
}

}  // namespace dirichlet
