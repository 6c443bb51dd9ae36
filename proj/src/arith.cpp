#include "dirichlet/arith.hpp"

#include <numeric>
#include <tuple>

namespace dirichlet {

i64 pow_mod(i64 base, i64 exp, i64 m) {
    if (m == 1) return 0;
    i64 result = 1;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (i64 d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

std::vector<std::pair<i64, int>> factor(i64 n) {
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

i64 totient(i64 n) {
    i64 result = n;
    for (auto [p, e] : factor(n)) result = result / p * (p - 1);
    return result;
}

i64 multiplicative_order(i64 a, i64 m, i64 group_order) {
    i64 order = group_order;
    for (auto [q, e] : factor(group_order)) {
        for (int i = 0; i < e; ++i) {
            if (pow_mod(a, order / q, m) != 1) break;
            order /= q;
        }
    }
    return order;
}

i64 crt(const std::vector<std::pair<i64, i64>>& rm) {
    i64 x = 0;
    i64 modulus = 1;
    for (auto [r, m] : rm) {
        // x + modulus*t = r (mod m)  =>  t = (r - x) * modulus^{-1} (mod m)
        i64 inv = 1;
        {
            // extended Euclid for modulus^{-1} mod m
            i64 a = mod(modulus, m), b = m, x0 = 1, x1 = 0;
            while (b != 0) {
                i64 q = a / b;
                std::tie(a, b) = std::make_pair(b, a - q * b);
                std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
            }
            inv = mod(x0, m);
        }
        i64 t = mul_mod(mod(r - x, m), inv, m);
        x += modulus * t;
        modulus *= m;
        x = mod(x, modulus);
    }
    return x;
}

}  // namespace dirichlet
