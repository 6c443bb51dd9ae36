#include "dirichlet/modular_index.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "dirichlet/error.hpp"

namespace dirichlet {

namespace {

constexpr i64 kBruteForceOrder = 10'000;

i64 ipow(i64 base, int exp) {
    i64 r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

void require_odd_prime_power(i64 p, int pi) {
    if (p < 3 || !is_prime(p)) {
        throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not an odd prime");
    }
    if (pi < 1) {
        throw Error(ErrorKind::invalid_argument, "prime exponent must be positive");
    }
}

}  // namespace

std::vector<i64> ModulusFactorization::component_orders() const {
    std::vector<i64> orders;
    if (has_sign_component()) orders.push_back(2);
    if (has_five_component()) orders.push_back(i64{1} << (two_exponent - 2));
    for (const auto& f : odd_factors) orders.push_back(f.order);
    return orders;
}

std::vector<i64> IndexSystem::components() const {
    std::vector<i64> out;
    if (alpha) out.push_back(*alpha);
    if (beta) out.push_back(*beta);
    out.insert(out.end(), gammas.begin(), gammas.end());
    return out;
}

ModulusFactorization factorize_modulus(i64 k) {
    if (k < 3) {
        throw Error(ErrorKind::invalid_modulus, "modulus must be at least 3, got " + std::to_string(k));
    }
    ModulusFactorization f;
    f.k = k;
    f.group_order = 1;
    for (auto [p, e] : factor(k)) {
        if (p == 2) {
            f.two_exponent = e;
            f.group_order *= i64{1} << (e - 1);
            continue;
        }
        OddPrimePower pp;
        pp.prime = p;
        pp.exponent = e;
        pp.modulus = ipow(p, e);
        pp.order = (p - 1) * ipow(p, e - 1);
        pp.primitive_root = primitive_root(p, e);
        f.group_order *= pp.order;
        f.odd_factors.push_back(pp);
    }
    return f;
}

i64 primitive_root(i64 p, int pi) {
    require_odd_prime_power(p, pi);
    const i64 m = ipow(p, pi);
    const i64 order = (p - 1) * ipow(p, pi - 1);
    for (i64 c = 2; c < m; ++c) {
        if (c % p == 0) continue;
        if (multiplicative_order(c, m, order) == order) return c;
    }
    throw Error(ErrorKind::invalid_argument, "no primitive root found");  // unreachable for odd p
}

std::optional<i64> discrete_log(i64 base, i64 target, i64 m, i64 order) {
    base = mod(base, m);
    target = mod(target, m);
    if (order <= kBruteForceOrder) {
        i64 x = 1 % m;
        for (i64 e = 0; e < order; ++e) {
            if (x == target) return e;
            x = mul_mod(x, base, m);
        }
        return std::nullopt;
    }
    const i64 step = static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(order))));
    std::unordered_map<i64, i64> baby;
    baby.reserve(static_cast<std::size_t>(step) * 2);
    i64 x = 1 % m;
    for (i64 j = 0; j < step; ++j) {
        baby.emplace(x, j);
        x = mul_mod(x, base, m);
    }
    // giant step factor base^{-step} = base^{order - step}
    const i64 giant = pow_mod(base, order - (step % order), m);
    i64 y = target;
    for (i64 i = 0; i <= step; ++i) {
        if (auto it = baby.find(y); it != baby.end()) {
            return (i * step + it->second) % order;
        }
        y = mul_mod(y, giant, m);
    }
    return std::nullopt;
}

i64 index(i64 n, i64 p, int pi) {
    require_odd_prime_power(p, pi);
    if (mod(n, p) == 0) {
        throw Error(ErrorKind::not_coprime, std::to_string(n) + " is divisible by " + std::to_string(p));
    }
    const i64 m = ipow(p, pi);
    const i64 order = (p - 1) * ipow(p, pi - 1);
    return *discrete_log(primitive_root(p, pi), n, m, order);
}

TwoPartIndex index_two_part(i64 n, int lambda) {
    if (lambda < 2) {
        throw Error(ErrorKind::invalid_argument, "two-part index needs lambda >= 2");
    }
    if (mod(n, 2) == 0) {
        throw Error(ErrorKind::not_coprime, std::to_string(n) + " is even");
    }
    TwoPartIndex out;
    out.alpha = mod(n, 4) == 1 ? 0 : 1;
    if (lambda >= 3) {
        const i64 m = i64{1} << lambda;
        const i64 target = out.alpha == 0 ? mod(n, m) : mod(-n, m);
        out.beta = *discrete_log(5, target, m, m / 4);
    }
    return out;
}

IndexSystem index_system(i64 n, const ModulusFactorization& f) {
    if (gcd(mod(n, f.k), f.k) != 1) {
        throw Error(ErrorKind::not_coprime,
                    std::to_string(n) + " is not coprime to " + std::to_string(f.k));
    }
    IndexSystem s;
    if (f.has_sign_component()) {
        auto two = index_two_part(n, f.two_exponent);
        s.alpha = two.alpha;
        s.beta = two.beta;
    }
    s.gammas.reserve(f.odd_factors.size());
    for (const auto& pp : f.odd_factors) {
        s.gammas.push_back(*discrete_log(pp.primitive_root, n, pp.modulus, pp.order));
    }
    return s;
}

i64 reconstruct_residue(const IndexSystem& s, const ModulusFactorization& f) {
    std::vector<std::pair<i64, i64>> parts;
    if (f.two_exponent >= 1) {
        const i64 m = f.two_part();
        i64 r = 1 % m;
        if (f.has_sign_component()) {
            r = pow_mod(5, s.beta.value_or(0), m);
            if (s.alpha.value_or(0) == 1) r = mod(-r, m);
        }
        parts.emplace_back(r, m);
    }
    for (std::size_t i = 0; i < f.odd_factors.size(); ++i) {
        const auto& pp = f.odd_factors[i];
        parts.emplace_back(pow_mod(pp.primitive_root, s.gammas.at(i), pp.modulus), pp.modulus);
    }
    return crt(parts);
}

}  // namespace dirichlet
