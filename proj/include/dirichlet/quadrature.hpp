#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

namespace dirichlet {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
template <int N>
struct GaussLegendreRule {
    std::array<double, N> nodes{};
    std::array<double, N> weights{};

    GaussLegendreRule() {
        for (int i = 0; i < N; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= N; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

struct QuadratureResult {
    std::complex<double> value;
    double error_estimate = 0.0;
    int intervals = 0;
};

/// Adaptive bisection with a 20-point Gauss-Legendre rule: an interval is
/// accepted when the rule on it agrees with the rule on its two halves to
/// within rel_tol of the running magnitude (or abs_tol).
template <class F>
QuadratureResult adaptive_gauss_legendre(F&& f, double a, double b, double rel_tol, double abs_tol = 1e-15,
                                         int max_depth = 40) {
    static const GaussLegendreRule<20> rule;
    auto apply = [&](double lo, double hi) {
        const double half = 0.5 * (hi - lo);
        const double mid = 0.5 * (hi + lo);
        std::complex<double> acc{0.0, 0.0};
        for (int i = 0; i < 20; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        return acc * half;
    };

    QuadratureResult result;
    const std::complex<double> whole = apply(a, b);
    const double scale = std::abs(whole);

    auto recurse = [&](auto&& self, double lo, double hi, std::complex<double> estimate, int depth) -> void {
        const double mid = 0.5 * (lo + hi);
        const std::complex<double> left = apply(lo, mid);
        const std::complex<double> right = apply(mid, hi);
        const double diff = std::abs(left + right - estimate);
        if (diff <= std::max(rel_tol * scale, abs_tol) * (hi - lo) / (b - a) || depth >= max_depth) {
            result.value += left + right;
            result.error_estimate += diff;
            result.intervals += 2;
            return;
        }
        self(self, lo, mid, left, depth + 1);
        self(self, mid, hi, right, depth + 1);
    };
    recurse(recurse, a, b, whole, 0);
    return result;
}

}  // namespace dirichlet
