#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <span>
#include <string>
#include <vector>

namespace overp::metrics {

// Reference-count comparison of the two methods for one n: the pure linear
// recurrence touches m1 = sum_{k<=n} floor(sqrt(k)) table values; the
// two-phase method touches m2 = m2_linear_part + m2_step_part of them.
struct RefCountReport {
    std::uint64_t n = 0;
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    std::uint64_t m2_linear_part = 0;
    std::uint64_t m2_step_part = 0;
    mpq_class ratio; // exact m2/m1 (n >= 1)

    // 3 decimals, truncated toward zero (how the reference tables render).
    std::string ratio_string() const;
};

// sum_{k=1}^{n} floor(sqrt(k)), one exact integer square root per term.
std::uint64_t m1(std::uint64_t n);

// Reference count of the two-phase method, by walking the actual expansion
// structure: the linear phase contributes floor(sqrt(k)) per new entry
// k <= n/2; in the step, each factored group contributes 1 + (inner terms),
// each plain product 2, each squared term 2. Throws DomainError at n = 0.
RefCountReport m2_instrumented(std::uint64_t n);

// Closed form for the n == 0 (mod 4) class:
//   M2(4m) = 2m+1 + 2 floor(sqrt(m)) + sum_{k=1}^{m} ceil(sqrt(k))
//          + sum_{k=1}^{2m} floor(sqrt(k)).
// Throws DomainError at m = 0.
std::uint64_t m2_closed_form_4n(std::uint64_t m);

// Number of product summands in the residue-class expansion of p(n):
// m+1+sum_{k=1}^{m} floor(sqrt(k)) for n = 4m and 4m+2,
// sum_{k=1}^{m+1} [sqrt(k)] for n = 4m+1 and 4m+3 (counted by enumeration).
std::uint64_t step_term_count(std::uint64_t n);

// One report per n; every n must satisfy n >= 1 and n == residue (mod 4).
std::vector<RefCountReport> ratio_table(unsigned residue,
                                        const std::vector<std::uint64_t>& ns);

// Published values of the four residue-class tables, for regression suites.
struct TableRow {
    std::uint64_t n, m1, m2;
    const char* ratio;
};
std::span<const TableRow> reference_table(unsigned residue);

// Exact sign of q - (1/8 + sqrt(1/8) + offset). The irrational limit is
// compared by squaring, so the result is never 0 for rational q.
int compare_to_limit(const mpq_class& q, const mpq_class& offset = mpq_class(0));

// floor(sqrt(4n+3)) <= sum_{k=1}^{n+1} [sqrt(k)] < n+1+sum_{k=1}^{n} floor(sqrt(k))
// for all 1 <= n <= n_max.
bool term_count_chain_holds(std::uint64_t n_max);

// sum_{k=1}^{4m} sqrt(k) - 4m < M1(4m) <= sum_{k=1}^{4m} sqrt(k) for all
// 1 <= m <= m_max, via exact 64-fractional-bit integer bounds on each sqrt.
bool m1_sqrt_sandwich_holds(std::uint64_t m_max);

// (2n/3 + 1/8 - 1/(8 sqrt(n+1))) sqrt(n+1) < sum_{k=1}^{n} sqrt(k)
//   < (2n/3 + 1/6 - 1/(6 sqrt(n+1))) sqrt(n+1) for all 1 <= n <= n_max,
// same exact fixed-point technique.
bool sqrt_sum_bounds_hold(std::uint64_t n_max);

} // namespace overp::metrics
