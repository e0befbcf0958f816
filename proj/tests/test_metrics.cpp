#include <cstdint>

#include <doctest.h>

#include "overp/errors.hpp"
#include "overp/intsqrt.hpp"
#include "overp/metrics.hpp"

using namespace overp;
using metrics::m2_instrumented;

TEST_CASE("M1: worked example, empty sum, and table anchors") {
    CHECK(metrics::m1(0) == 0);
    CHECK(metrics::m1(11) == 22); // 1+1+1+2+2+2+2+2+3+3+3
    CHECK(metrics::m1(101) == 635);
    CHECK(metrics::m1(10004) == 662150);
}

TEST_CASE("M2: worked example with its linear/step breakdown") {
    const auto rep = m2_instrumented(11);
    CHECK(rep.m2 == 14);
    CHECK(rep.m2_linear_part == 7); // M1(5)
    CHECK(rep.m2_step_part == 7);   // p0,p5,p1 | p1,p4 | p2,p3 factored
    CHECK(rep.m2 == rep.m2_linear_part + rep.m2_step_part);
    CHECK(rep.m1 == 22);
}

TEST_CASE("M2: anchors from the reference tables") {
    CHECK(m2_instrumented(1).m2 == 2);
    CHECK(m2_instrumented(4).m2 == 8);
    CHECK(m2_instrumented(10001).m2 == 319225);
    CHECK_THROWS_AS((void)m2_instrumented(0), DomainError);
}

TEST_CASE("closed form for the 0 (mod 4) class") {
    CHECK(metrics::m2_closed_form_4n(1) == 8);    // 3 + 2 + 1 + (1+1)
    CHECK(metrics::m2_closed_form_4n(26) == 395); // the n=104 cell
    CHECK_THROWS_AS((void)metrics::m2_closed_form_4n(0), DomainError);
    for (std::uint64_t m = 1; m <= 500; ++m)
        CHECK(metrics::m2_closed_form_4n(m) == m2_instrumented(4 * m).m2);
}

TEST_CASE("step term counts: hand case and both closed formulas") {
    CHECK(metrics::step_term_count(11) == 4); // p0p5, p0p1, p1p4, p2p3
    CHECK(metrics::step_term_count(0) == 1);  // p(0)^2 alone

    std::uint64_t sum_floor = 0;   // sum_{k=1}^{m} floor(sqrt(k))
    std::uint64_t sum_nearest = 0; // sum_{k=1}^{m+1} [sqrt(k)]
    for (std::uint64_t m = 0; m <= 200; ++m) {
        if (m >= 1)
            sum_floor += isqrt_floor(m);
        sum_nearest += isqrt_nearest(m + 1);
        CHECK(metrics::step_term_count(4 * m) == m + 1 + sum_floor);
        CHECK(metrics::step_term_count(4 * m + 2) == m + 1 + sum_floor);
        CHECK(metrics::step_term_count(4 * m + 1) == sum_nearest);
        CHECK(metrics::step_term_count(4 * m + 3) == sum_nearest);
    }
}

TEST_CASE("ratio rendering truncates to three decimals") {
    CHECK(m2_instrumented(1).ratio_string() == "2.000");
    CHECK(m2_instrumented(5).ratio_string() == "0.857");  // 6/7
    CHECK(m2_instrumented(11).ratio_string() == "0.636"); // 14/22
}

TEST_CASE("ratio_table: anchors and residue validation") {
    const auto rows = metrics::ratio_table(1, {1, 5, 9});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].m1 == 1);
    CHECK(rows[0].m2 == 2);
    CHECK(rows[1].m1 == 7);
    CHECK(rows[1].m2 == 6);
    CHECK(rows[2].m1 == 16);
    CHECK(rows[2].m2 == 13);

    const auto at1002 = metrics::ratio_table(2, {1002});
    CHECK(at1002[0].m1 == 20677);
    CHECK(at1002[0].m2 == 10526);

    const auto at103 = metrics::ratio_table(3, {103});
    CHECK(at103[0].m1 == 655);
    CHECK(at103[0].m2 == 340);

    CHECK_THROWS_AS((void)metrics::ratio_table(1, {2}), DomainError);
    CHECK_THROWS_AS((void)metrics::ratio_table(0, {0}), DomainError);
    CHECK_THROWS_AS((void)metrics::ratio_table(4, {4}), DomainError);
}

TEST_CASE("every published table cell is reproduced") {
    for (unsigned residue = 0; residue < 4; ++residue) {
        for (const auto& row : metrics::reference_table(residue)) {
            const auto rep = m2_instrumented(row.n);
            CHECK(rep.m1 == row.m1);
            CHECK(rep.m2 == row.m2);
            CHECK(rep.ratio_string() == row.ratio);
        }
    }
}

TEST_CASE("limit comparator brackets the constant") {
    // 1/8 + sqrt(1/8) = 0.4785533...
    CHECK(metrics::compare_to_limit(mpq_class(478, 1000)) < 0);
    CHECK(metrics::compare_to_limit(mpq_class(479, 1000)) > 0);
    CHECK(metrics::compare_to_limit(mpq_class(4785533, 10000000)) < 0);
    CHECK(metrics::compare_to_limit(mpq_class(4785534, 10000000)) > 0);
    CHECK(metrics::compare_to_limit(mpq_class(1, 2), mpq_class(1, 100)) > 0);
    CHECK(metrics::compare_to_limit(mpq_class(48, 100), mpq_class(1, 100)) < 0);
}

TEST_CASE("ratio deviation shrinks along powers of ten in every residue class") {
    const mpq_class hundredth(1, 100);
    for (unsigned residue = 0; residue < 4; ++residue) {
        mpq_class prev;
        bool first = true;
        for (const std::uint64_t decade : {100ull, 1000ull, 10000ull, 100000ull}) {
            const std::uint64_t n = decade + ((residue + 4 - decade % 4) % 4);
            REQUIRE(n % 4 == residue);
            const auto rep = m2_instrumented(n);
            // all these points sit above the limit, so deviations order as ratios
            CHECK(metrics::compare_to_limit(rep.ratio) > 0);
            if (!first)
                CHECK(rep.ratio < prev);
            prev = rep.ratio;
            first = false;
            if (decade == 10000) { // within 0.01 of the limit by then
                CHECK(metrics::compare_to_limit(rep.ratio, hundredth) < 0);
                CHECK(metrics::compare_to_limit(rep.ratio, -hundredth) > 0);
            }
        }
    }
}

TEST_CASE("term-count inequality chain holds through 10^4") {
    CHECK(metrics::term_count_chain_holds(10000));
}

TEST_CASE("M1 sqrt-sum sandwich holds through 4m = 4000") {
    CHECK(metrics::m1_sqrt_sandwich_holds(1000));
}

TEST_CASE("sqrt-sum lower/upper bounds hold through 10^4") {
    CHECK(metrics::sqrt_sum_bounds_hold(10000));
}
