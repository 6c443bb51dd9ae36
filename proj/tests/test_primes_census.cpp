#include <doctest.h>

#include <cmath>
#include <sstream>

#include "dirichlet/census.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/lseries.hpp"
#include "dirichlet/primes.hpp"
#include "oracles.hpp"

using namespace dirichlet;

TEST_CASE("sieve examples") {
    CHECK(sieve(10) == std::vector<std::uint32_t>{2, 3, 5, 7});
    CHECK(sieve(100).size() == 25);
    CHECK(sieve(100000).size() == 9592);
    CHECK(sieve(1).empty());
    CHECK(sieve(2) == std::vector<std::uint32_t>{2});
}

TEST_CASE("sieve matches trial division, including across segment boundaries") {
    const std::uint64_t n = 600000;  // spans several 2^17-odd segments
    const auto primes = sieve(n);
    std::size_t i = 0;
    for (std::uint64_t m = 0; m <= n; ++m) {
        if (!oracle::prime_by_trial(static_cast<std::int64_t>(m))) continue;
        REQUIRE(i < primes.size());
        CHECK(primes[i] == m);
        ++i;
    }
    CHECK(i == primes.size());
    CHECK(sieve(262147).back() == sieve(262150).back());
}

TEST_CASE("sieve count at 1e7") { CHECK(sieve(10000000).size() == 664579); }

TEST_CASE("shared prime table covers the request") {
    const auto t = shared_primes(5000);
    CHECK(t->back() >= 4999);
    CHECK(primes_up_to(*t, 100).size() == 25);
    CHECK(primes_up_to(*t, 1).empty());
}

TEST_CASE("census examples") {
    const auto c4 = census(100000, 4);
    REQUIRE(c4.counts.size() == 2);
    CHECK(c4.counts.at(1) == 4783);
    CHECK(c4.counts.at(3) == 4808);
    CHECK(c4.excluded == 1);
    CHECK(c4.counts.at(1) + c4.counts.at(3) + c4.excluded == 9592);

    const auto c3 = census(100, 3);
    CHECK(c3.counts.at(1) == 11);
    CHECK(c3.counts.at(2) == 13);
    CHECK(c3.excluded == 1);

    const auto small = census(10, 3);
    CHECK(small.counts.at(1) == 1);
    CHECK(small.counts.at(2) == 2);
    CHECK(small.excluded == 1);

    CHECK_THROWS_AS(census(5, 7), Error);
    CHECK_THROWS_AS(census(100, 2), Error);
}

TEST_CASE("property: census keys and totals reconcile") {
    for (std::uint64_t N : {1000u, 54321u, 1000000u}) {
        const auto total = sieve(N).size();
        for (i64 k = 3; k <= 60; ++k) {
            const auto c = census(N, k);
            std::uint64_t sum = c.excluded;
            for (const auto& [m, count] : c.counts) {
                CHECK(std::gcd(m, k) == 1);
                CHECK(m < k);
                sum += count;
            }
            CHECK(static_cast<i64>(c.counts.size()) == oracle::totient_by_gcd(k));
            CHECK(sum == total);
            CHECK(c.total == total);
        }
    }
}

TEST_CASE("property: every coprime class holds a prime below 1e4 for k <= 60") {
    for (i64 k = 3; k <= 60; ++k) {
        for (const auto& [m, count] : census(10000, k).counts) CHECK_MESSAGE(count > 0, "k=" << k << " m=" << m);
    }
}

TEST_CASE("census CSV layout") {
    std::ostringstream out;
    write_census_csv(out, census(10, 3));
    CHECK(out.str() == "N,10\nk,3\nexcluded,1\nratio_spread,2.000000\nm,count\n1,1\n2,2\n");
}

TEST_CASE("ap_prime_sum_lhs examples") {
    // direct summation: explicit prime test and explicit powers
    double expected = 0.0, h1 = 0.0;
    for (std::int64_t q = 2; q <= 10000; ++q) {
        if (!oracle::prime_by_trial(q)) continue;
        long double power = 1.0L;
        std::int64_t residue = 1;
        for (int h = 1; h < 60; ++h) {
            power /= static_cast<long double>(q) * static_cast<long double>(q);
            residue = residue * q % 4;
            if (residue == 1) {
                expected += static_cast<double>(power / h);
                if (h == 1) h1 += static_cast<double>(power);
            }
        }
    }
    const double lhs = ap_prime_sum_lhs(4, 1, 1.0, 10000);
    CHECK(lhs == doctest::Approx(expected).epsilon(1e-13));
    CHECK(lhs > h1);
    CHECK(lhs - h1 < oracle::zeta2() - 1.0);

    CHECK(ap_prime_sum_lhs(4, 3, 60.0, 10000) < 1e-16);
    CHECK(ap_prime_sum_lhs(4, 3, 1.0, 10000) > ap_prime_sum_lhs(4, 3, 2.0, 10000));
    CHECK_THROWS_AS(ap_prime_sum_lhs(6, 3, 1.0, 100), Error);
}

TEST_CASE("ap_identity_check examples") {
    const auto c8 = ap_identity_check(8, 3, 0.5, 1000000, 1000000);
    CHECK(c8.passed());
    CHECK(c8.discrepancy <= c8.bound);

    const auto c5 = ap_identity_check(5, 1, 0.5, 100000, 100000);
    CHECK(c5.passed());
    // for m = 1 every weight conj(chi(1)) is 1
    double direct = 0.0;
    for (const auto& chi : enumerate_characters(factorize_modulus(5))) {
        direct += log_l(chi, 1.5, 100000).value.real();
    }
    CHECK(c5.rhs.real() == doctest::Approx(direct / 4.0).epsilon(1e-12));

    const auto c4 = ap_identity_check(4, 3, 0.5, 100000, 100000);
    CHECK(std::abs(c4.rhs.imag()) <= c4.bound);
    CHECK(c4.passed());
}

TEST_CASE("identity check detects mismatched truncations honestly") {
    // N != Q: the sides differ by primes in (N, Q], still inside the tail bounds
    const auto c = ap_identity_check(7, 3, 0.25, 10000, 200000);
    CHECK(c.discrepancy > 1e-6);
    CHECK(c.passed());
}

TEST_CASE("divergence_probe examples") {
    const auto r1 = divergence_probe(4, 1, {0.2, 0.1, 0.05}, 1000000);
    CHECK(r1.monotone);
    CHECK(r1.points[0].lhs < r1.points[1].lhs);
    CHECK(r1.points[1].lhs < r1.points[2].lhs);
    CHECK(r1.expected_increment == doctest::Approx(std::log(2.0) / 2.0));
    CHECK(std::abs(r1.fitted_increment - r1.expected_increment) < 0.2 * r1.expected_increment);

    const auto r3 = divergence_probe(4, 3, {0.2, 0.1, 0.05}, 1000000);
    CHECK(r3.monotone);
    CHECK(std::abs(r3.fitted_increment - r3.expected_increment) < 0.2 * r3.expected_increment);
}

TEST_CASE("divergence tail estimate tracks the identity value") {
    // corrected lhs should approach the full sum, read off through log L
    const auto r = divergence_probe(4, 1, {0.2}, 1000000);
    const auto chis = enumerate_characters(factorize_modulus(4));
    const double s = 1.2;
    const double l0 = dirichlet_series(chis[0], s, 4000, {.euler_maclaurin_tail = true}).value.real();
    const double l1 = dirichlet_series(chis[1], s, 4000, {.euler_maclaurin_tail = true}).value.real();
    const double truth = (std::log(l0) + std::log(l1)) / 2.0;
    CHECK(std::abs(r.points[0].corrected() - truth) < 1e-3);
    CHECK(std::abs(r.points[0].lhs - truth) > 1e-3);
}
