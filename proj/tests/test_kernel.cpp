#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include <unistd.h>

#include <doctest.h>

#include "overp/errors.hpp"
#include "overp/kernel.hpp"
#include "overp/oracle.hpp"

using namespace overp;

namespace {

OverpartitionTable table_to(std::uint64_t n) {
    OverpartitionTable t;
    linear_extend(t, n);
    return t;
}

} // namespace

TEST_CASE("linear recurrence reproduces the small worked values") {
    OverpartitionTable t;
    linear_extend(t, 3);
    REQUIRE(t.max_n() == 3);
    CHECK(t[0] == 1);
    CHECK(t[1] == 2);
    CHECK(t[2] == 4);
    CHECK(t[3] == 8);

    linear_extend(t, 5); // extend in place, earlier entries untouched
    CHECK(t[3] == 8);
    CHECK(t[4] == 14); // 2(p3 - p0)
    CHECK(t[5] == 24); // 2(p4 - p1)
}

TEST_CASE("linear values match the enumeration oracle through 200") {
    const auto t = table_to(200);
    const auto dp = oracle::enumerate_overpartitions_prefix(200);
    for (std::uint64_t n = 0; n <= 200; ++n)
        CHECK(t[n] == dp[n]);
}

TEST_CASE("step form: worked example p(11) from a table filled to 5") {
    const auto t = table_to(5);
    CHECK(nonlinear_value(t, 11) == 344);
    // 4(p0(p5+p1) + p1 p4 + p2 p3) = 4(1*26 + 2*14 + 4*8)
    CHECK(4 * (t[0] * (t[5] + t[1]) + t[1] * t[4] + t[2] * t[3]) == 344);
}

TEST_CASE("step form: degenerate and hand-expanded cases") {
    OverpartitionTable t0; // just p(0) = 1
    CHECK(nonlinear_value(t0, 0) == 1);
    CHECK(nonlinear_value(t0, 1) == 2); // 2 p(0)^2

    const auto t = table_to(2);
    CHECK(nonlinear_value(t, 4) == 14); // 2 p0 p2 + 2 p0^2 + p1^2 = 8 + 2 + 4
}

TEST_CASE("step form requires coverage to floor(n/2)") {
    const auto t = table_to(4);
    CHECK_THROWS_AS((void)nonlinear_value(t, 11), TableTooShort);
    CHECK_NOTHROW((void)nonlinear_value(t, 8));
    CHECK_THROWS_AS((void)nonlinear_value(t, 10), TableTooShort);
}

TEST_CASE("step form equals linear for n = 0..400") {
    const auto full = table_to(400);
    const auto t = table_to(200); // coverage floor(400/2)
    for (std::uint64_t n = 0; n <= 400; ++n)
        CHECK(nonlinear_value(t, n) == full[n]);
}

TEST_CASE("symmetric two-sided form equals the residue forms for n = 0..400") {
    const auto t = table_to(200);
    for (std::uint64_t n = 0; n <= 400; ++n)
        CHECK(nonlinear_value_symmetric(t, n) == nonlinear_value(t, n));
}

TEST_CASE("hybrid: base cases and the worked example") {
    ComputePlan plan;
    CHECK(hybrid_compute(0, plan) == 1);
    CHECK(hybrid_compute(11, plan) == 344);
    // builds exactly through floor(11/2)
    CHECK(load_or_extend(11 / 2, plan).max_n() == 5);
}

TEST_CASE("hybrid equals linear at 2000 for worker counts 1, 2, 8") {
    const auto t = table_to(2000);
    for (const unsigned workers : {1u, 2u, 8u}) {
        ComputePlan plan;
        plan.workers = workers;
        const mpz_class v = hybrid_compute(2000, plan);
        CHECK(v == t[2000]);
        CHECK(v.get_str() == t[2000].get_str()); // bit-identical rendering
    }
    // all residue classes near the top, odd worker counts included
    for (std::uint64_t n = 1997; n <= 2000; ++n) {
        for (const unsigned workers : {3u, 5u, 13u}) {
            ComputePlan plan;
            plan.workers = workers;
            CHECK(hybrid_compute(n, plan) == t[n]);
        }
    }
}

TEST_CASE("worker partitioning is exact for every count up to the outer range") {
    const auto t = table_to(80);
    for (std::uint64_t n : {157ull, 158ull, 159ull, 160ull}) {
        const mpz_class expect = nonlinear_value(t, n, 1);
        for (unsigned workers = 2; workers <= 64; ++workers)
            CHECK(nonlinear_value(t, n, workers) == expect);
    }
}

TEST_CASE("odd-part values: small cases and oracle sweep") {
    const auto t = table_to(150);
    const OddSeriesView view{t};
    CHECK(podd_value(view, 0) == 1);
    CHECK(podd_value(view, 2) == 2); // 1+1, ov(1)+1
    CHECK(podd_value(view, 3) == 4); // 3, ov(3), 1+1+1, ov(1)+1+1

    const auto dp = oracle::enumerate_odd_prefix(300);
    for (std::uint64_t m = 0; m <= 300; ++m)
        CHECK(podd_value(view, m) == dp[m]);
}

TEST_CASE("odd-part values: symmetric form agrees through 500") {
    const auto t = table_to(250);
    const OddSeriesView view{t};
    for (std::uint64_t m = 0; m <= 500; ++m)
        CHECK(podd_value(view, m) == podd_value_symmetric(view, m));
}

TEST_CASE("odd-part values need coverage floor(m/2)") {
    const auto t = table_to(10);
    const OddSeriesView view{t};
    CHECK_NOTHROW((void)podd_value(view, 21));
    CHECK_THROWS_AS((void)podd_value(view, 22), TableTooShort);
    CHECK_THROWS_AS((void)podd_value_symmetric(view, 23), TableTooShort);
}

TEST_CASE("convolution identity: hand cases and sweep to 500") {
    const auto t = table_to(500);
    CHECK(check_convolution(t, 0)); // p0 * podd(0) = 1
    CHECK(check_convolution(t, 3)); // p0 podd(3) + p1 podd(1) = 4 + 4 = 8
    for (std::uint64_t n = 0; n <= 500; ++n)
        CHECK(check_convolution(t, n));
    CHECK_THROWS_AS((void)check_convolution(t, 501), TableTooShort);
}

TEST_CASE("table invariants: parity, monotonicity, evenness of odd-part values") {
    const auto t = table_to(2000);
    const OddSeriesView view{t};
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        CHECK(mpz_even_p(t[n].get_mpz_t()) != 0);
        CHECK(t[n] > t[n - 1]);
    }
    for (std::uint64_t m = 1; m <= 500; ++m)
        CHECK(mpz_even_p(podd_value(view, m).get_mpz_t()) != 0);
}

TEST_CASE("linear_extend validates its starting point") {
    OverpartitionTable t;
    t.values[0] = 7;
    CHECK_THROWS_AS(linear_extend(t, 5), DomainError);
}

TEST_CASE("step form vs linear at random points up to 20000") {
    const auto t = table_to(20000);
    const auto half = table_to(10000);
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::uint64_t> dist(0, 20000);
    for (int i = 0; i < 40; ++i) {
        const std::uint64_t n = dist(rng);
        CHECK(nonlinear_value(half, n) == t[n]);
    }
    for (std::uint64_t n = 19997; n <= 20000; ++n)
        CHECK(nonlinear_value(half, n, 3) == t[n]);
}

TEST_CASE("load_or_extend only rewrites the cache when it grows") {
    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("overp-kernel-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    ComputePlan plan;
    plan.cache_path = dir / "t.cache";

    const auto t200 = load_or_extend(200, plan);
    CHECK(t200.max_n() == 200);
    const auto grown_size = fs::file_size(*plan.cache_path);

    // smaller target: keeps the longer cached prefix, file untouched
    const auto again = load_or_extend(50, plan);
    CHECK(again.max_n() == 200);
    CHECK(fs::file_size(*plan.cache_path) == grown_size);

    // larger target: extends and rewrites
    const auto t300 = load_or_extend(300, plan);
    CHECK(t300.max_n() == 300);
    CHECK(fs::file_size(*plan.cache_path) > grown_size);
    for (std::uint64_t n = 0; n <= 200; ++n)
        CHECK(t300[n] == t200[n]);

    std::error_code ec;
    fs::remove_all(dir, ec);
}
