#include <doctest.h>

#include <random>
#include <set>

#include "dirichlet/error.hpp"
#include "dirichlet/modular_index.hpp"
#include "oracles.hpp"

using namespace dirichlet;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected dirichlet::Error");
    return ErrorKind::domain;
}

}  // namespace

TEST_CASE("factorize_modulus examples") {
    const auto f24 = factorize_modulus(24);
    CHECK(f24.two_exponent == 3);
    REQUIRE(f24.odd_factors.size() == 1);
    CHECK(f24.odd_factors[0].prime == 3);
    CHECK(f24.odd_factors[0].exponent == 1);
    CHECK(f24.group_order == oracle::totient_by_gcd(24));
    CHECK(f24.group_order == 8);

    const auto f7 = factorize_modulus(7);
    CHECK(f7.two_exponent == 0);
    CHECK(f7.odd_factors.size() == 1);
    CHECK(f7.group_order == 6);

    const auto f8 = factorize_modulus(8);
    CHECK(f8.two_exponent == 3);
    CHECK(f8.odd_factors.empty());
    CHECK(f8.group_order == oracle::totient_by_gcd(8));
    CHECK(f8.component_orders() == std::vector<i64>{2, 2});
}

TEST_CASE("factorize_modulus rejects k < 3") {
    CHECK(kind_of([] { factorize_modulus(2); }) == ErrorKind::invalid_modulus);
    CHECK(kind_of([] { factorize_modulus(0); }) == ErrorKind::invalid_modulus);
    CHECK(kind_of([] { factorize_modulus(-5); }) == ErrorKind::invalid_modulus);
}

TEST_CASE("factorization reproduces k and its totient") {
    for (i64 k = 3; k <= 2000; ++k) {
        const auto f = factorize_modulus(k);
        i64 product = f.two_part();
        std::set<i64> primes;
        for (const auto& pp : f.odd_factors) {
            product *= pp.modulus;
            primes.insert(pp.prime);
            CHECK(pp.prime % 2 == 1);
        }
        CHECK(product == k);
        CHECK(primes.size() == f.odd_factors.size());
        if (k <= 500) CHECK(f.group_order == oracle::totient_by_gcd(k));
        if (f.two_exponent >= 3) {
            i64 K = 2 * (i64{1} << (f.two_exponent - 2));
            for (const auto& pp : f.odd_factors) K *= pp.order;
            CHECK(K == f.group_order);
        }
    }
}

TEST_CASE("primitive_root examples") {
    CHECK(primitive_root(7, 1) == 3);
    CHECK(primitive_root(3, 2) == 2);
    CHECK(primitive_root(3, 1) == 2);
}

TEST_CASE("primitive_root is the smallest generator") {
    for (i64 p = 3; p < 60; ++p) {
        if (!oracle::prime_by_trial(p)) continue;
        for (int pi = 1; pi <= 3; ++pi) {
            i64 m = 1;
            for (int i = 0; i < pi; ++i) m *= p;
            if (m > 20000) break;
            const i64 order = oracle::totient_by_gcd(m);
            i64 expected = 0;
            for (i64 c = 2; c < m; ++c) {
                if (c % p != 0 && oracle::order_by_powers(c, m) == order) {
                    expected = c;
                    break;
                }
            }
            CHECK_MESSAGE(primitive_root(p, pi) == expected, "p=" << p << " pi=" << pi);
        }
    }
}

TEST_CASE("primitive_root rejects non-odd-primes") {
    CHECK(kind_of([] { primitive_root(2, 1); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { primitive_root(9, 1); }) == ErrorKind::invalid_argument);
    CHECK(kind_of([] { primitive_root(7, 0); }) == ErrorKind::invalid_argument);
}

TEST_CASE("index examples") {
    CHECK(index(1, 7, 1) == 0);
    CHECK(index(6, 7, 1) == 3);  // gamma_{p-1} = (p-1)/2
    CHECK(index(2, 7, 1) == oracle::log_by_powers(3, 2, 7));
    CHECK(index(2, 7, 1) == 2);
    CHECK(kind_of([] { index(14, 7, 1); }) == ErrorKind::not_coprime);
}

TEST_CASE("index of -1 is half the group order") {
    for (i64 p = 3; p < 200; p += 2) {
        if (!oracle::prime_by_trial(p)) continue;
        CHECK(index(p - 1, p, 1) == (p - 1) / 2);
        CHECK(index(-1, p, 1) == (p - 1) / 2);
    }
}

TEST_CASE("baby-step giant-step beyond the brute-force range") {
    // order 10^6 + 2 and 3^12 have orders far above 10^4
    const i64 p = 1000003;
    const i64 c = primitive_root(p, 1);
    for (i64 n : {2, 17, 999999, 123456, 1000002}) {
        const i64 g = index(n, p, 1);
        CHECK(pow_mod(c, g, p) == n);
        CHECK(g < p - 1);
    }
    const i64 c3 = primitive_root(3, 12);
    const i64 m = 531441;
    for (i64 n : {2, 5, 7, 531440, 100000}) {
        const i64 g = index(n, 3, 12);
        CHECK(pow_mod(c3, g, m) == n % m);
        CHECK(g < 354294);
    }
}

TEST_CASE("index_two_part examples") {
    CHECK(index_two_part(1, 3) == TwoPartIndex{0, 0});
    CHECK(index_two_part(7, 3) == TwoPartIndex{1, 0});
    CHECK(index_two_part(3, 3) == TwoPartIndex{1, 1});
    CHECK(index_two_part(3, 2) == TwoPartIndex{1, std::nullopt});
    CHECK(kind_of([] { index_two_part(4, 3); }) == ErrorKind::not_coprime);
    CHECK(kind_of([] { index_two_part(3, 1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("index_two_part satisfies its congruences") {
    for (int lambda = 2; lambda <= 12; ++lambda) {
        const i64 m = i64{1} << lambda;
        for (i64 n = 1; n < m; n += 2) {
            const auto t = index_two_part(n, lambda);
            CHECK(mod(t.alpha == 0 ? 1 : -1, 4) == n % 4);
            if (lambda >= 3) {
                REQUIRE(t.beta.has_value());
                CHECK(*t.beta < m / 4);
                const i64 signed_n = t.alpha == 0 ? n : m - n;
                CHECK(pow_mod(5, *t.beta, m) == signed_n);
            }
        }
    }
}

TEST_CASE("index_system examples") {
    const auto f24 = factorize_modulus(24);
    const auto one = index_system(1, f24);
    CHECK(one.components() == std::vector<i64>{0, 0, 0});

    const auto five = index_system(5, f24);
    CHECK(five.alpha == 0);
    CHECK(five.beta == 1);                 // 5 = 5^1 (mod 8)
    CHECK(five.gammas == std::vector<i64>{1});  // 5 = 2 = 2^1 (mod 3)

    const auto seven = index_system(7, f24);
    const auto product = index_system(35, f24);
    const auto orders = f24.component_orders();
    for (std::size_t j = 0; j < orders.size(); ++j) {
        CHECK(product.components()[j] == (five.components()[j] + seven.components()[j]) % orders[j]);
    }
    CHECK(kind_of([&] { index_system(9, f24); }) == ErrorKind::not_coprime);
}

TEST_CASE("index_system component presence follows lambda") {
    CHECK_FALSE(index_system(1, factorize_modulus(15)).alpha.has_value());
    CHECK_FALSE(index_system(1, factorize_modulus(30)).alpha.has_value());
    const auto s12 = index_system(5, factorize_modulus(12));
    CHECK(s12.alpha.has_value());
    CHECK_FALSE(s12.beta.has_value());
    const auto s40 = index_system(3, factorize_modulus(40));
    CHECK(s40.alpha.has_value());
    CHECK(s40.beta.has_value());
}

TEST_CASE("property: reconstruction and bijectivity for k <= 120") {
    for (i64 k = 3; k <= 120; ++k) {
        const auto f = factorize_modulus(k);
        std::set<std::vector<i64>> seen;
        for (i64 n = 1; n < k; ++n) {
            if (std::gcd(n, k) != 1) continue;
            const auto s = index_system(n, f);
            CHECK(reconstruct_residue(s, f) == n);
            seen.insert(s.components());
        }
        CHECK(static_cast<i64>(seen.size()) == f.group_order);
    }
}

TEST_CASE("property: index system is a homomorphism") {
    std::mt19937_64 rng(20240701);
    std::uniform_int_distribution<i64> pick(1, 500);
    for (i64 k : {3, 4, 5, 8, 12, 15, 16, 24, 45, 60, 63, 64, 77, 96, 105, 120}) {
        const auto f = factorize_modulus(k);
        const auto orders = f.component_orders();
        int tested = 0;
        while (tested < 300) {
            const i64 n = pick(rng), m = pick(rng);
            if (std::gcd(n, k) != 1 || std::gcd(m, k) != 1) continue;
            const auto sn = index_system(n, f).components();
            const auto sm = index_system(m, f).components();
            const auto snm = index_system(n * m % k, f).components();
            for (std::size_t j = 0; j < orders.size(); ++j) CHECK(snm[j] == (sn[j] + sm[j]) % orders[j]);
            ++tested;
        }
    }
}

TEST_CASE("property: index parity tracks quadratic residuosity") {
    for (i64 p = 3; p < 200; p += 2) {
        if (!oracle::prime_by_trial(p)) continue;
        for (i64 n = 1; n < p; ++n) {
            CHECK((index(n, p, 1) % 2 == 0) == oracle::is_square_mod(n, p));
        }
    }
}
