#include <cstdint>

#include <doctest.h>

#include "overp/errors.hpp"
#include "overp/oracle.hpp"

using namespace overp;

TEST_CASE("enumeration: listed small values") {
    CHECK(oracle::enumerate_overpartitions(0) == 1);
    CHECK(oracle::enumerate_overpartitions(3) == 8);
    CHECK(oracle::enumerate_overpartitions(5) == 24);
    CHECK(oracle::enumerate_odd(0) == 1);
    CHECK(oracle::enumerate_odd(2) == 2);
    CHECK(oracle::enumerate_odd(3) == 4);
}

TEST_CASE("theta prefix coefficients") {
    const auto t = oracle::theta_prefix(17);
    CHECK(t.coeffs[0] == 1);
    CHECK(t.coeffs[1] == -2);
    CHECK(t.coeffs[2] == 0);
    CHECK(t.coeffs[4] == 2);
    CHECK(t.coeffs[9] == -2);
    CHECK(t.coeffs[16] == 2);
}

TEST_CASE("series inversion: small values and worked example") {
    CHECK(oracle::series_inverse(0) == 1);
    CHECK(oracle::series_inverse(11) == 344);
}

TEST_CASE("inversion requires a unit leading coefficient") {
    oracle::SeriesPrefix s;
    s.coeffs = {mpz_class(2), mpz_class(1)};
    CHECK_THROWS_AS((void)oracle::invert(s), DomainError);
    s.coeffs.clear();
    CHECK_THROWS_AS((void)oracle::invert(s), DomainError);
    s.coeffs = {mpz_class(-1), mpz_class(3)};
    const auto inv = oracle::invert(s); // (-1 + 3q)^{-1} = -1 - 3q - 9q^2 ...
    CHECK(inv.coeffs[0] == -1);
    CHECK(inv.coeffs[1] == -3);
}

TEST_CASE("inverse of the inverse returns the original prefix") {
    const auto t = oracle::theta_prefix(60);
    const auto back = oracle::invert(oracle::invert(t));
    REQUIRE(back.length() == t.length());
    for (std::uint64_t i = 0; i < t.length(); ++i)
        CHECK(back.coeffs[i] == t.coeffs[i]);
}

TEST_CASE("the two oracles agree pointwise through 200") {
    const auto dp = oracle::enumerate_overpartitions_prefix(200);
    const auto inv = oracle::invert(oracle::theta_prefix(201));
    for (std::uint64_t n = 0; n <= 200; ++n)
        CHECK(dp[n] == inv.coeffs[n]);
}

TEST_CASE("convolution identity holds on oracle values alone through 200") {
    // p(n) = sum_k p(k) p_odd(n - 2k), both factors from the DP oracles
    const auto p = oracle::enumerate_overpartitions_prefix(200);
    const auto po = oracle::enumerate_odd_prefix(200);
    for (std::uint64_t n = 0; n <= 200; ++n) {
        mpz_class acc;
        for (std::uint64_t k = 0; k <= n / 2; ++k)
            acc += p[k] * po[n - 2 * k];
        CHECK(acc == p[n]);
    }
}
