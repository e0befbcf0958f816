// Cost accounting for the linear vs two-phase methods, plus the exact
// inequality suites backing the asymptotic ratio analysis.

#include "overp/metrics.hpp"

#include <array>
#include <cstdio>

#include "overp/errors.hpp"
#include "overp/intsqrt.hpp"
#include "overp/step_form.hpp"

namespace overp::metrics {

namespace {

struct StepCounter {
    std::uint64_t refs = 0;
    std::uint64_t terms = 0;

    void group_begin(std::uint64_t) { refs += 1; } // the factored p(k)
    void group_arg(std::uint64_t) {
        refs += 1;
        terms += 1;
    }
    void group_end() {}
    void product(std::uint64_t, std::uint64_t) {
        refs += 2;
        terms += 1;
    }
    void square(std::uint64_t) {
        refs += 2;
        terms += 1;
    }
    void final_square(std::uint64_t) {
        refs += 2;
        terms += 1;
    }
};

StepCounter count_step(std::uint64_t n) {
    StepCounter c;
    detail::visit_step_terms(n, 0, detail::step_outer_count(n), true, c);
    return c;
}

// Exact integer bounds lo <= sqrt(k) * 2^frac_bits <= hi, hi - lo <= 1
// with equality exactly at perfect squares.
constexpr unsigned kFracBits = 64;

void sqrt_fixed_bounds(std::uint64_t k, mpz_class& lo, mpz_class& hi) {
    mpz_class t = mpz_class(static_cast<unsigned long>(k)) << (2 * kFracBits);
    lo = sqrt(t);
    hi = lo + (lo * lo == t ? 0 : 1);
}

} // namespace

std::string RefCountReport::ratio_string() const {
    const std::uint64_t q = m2 * 1000 / m1; // truncation toward zero
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%llu.%03llu",
                  static_cast<unsigned long long>(q / 1000),
                  static_cast<unsigned long long>(q % 1000));
    return buf.data();
}

std::uint64_t m1(std::uint64_t n) {
    std::uint64_t sum = 0;
    for (std::uint64_t k = 1; k <= n; ++k)
        sum += isqrt_floor(k);
    return sum;
}

RefCountReport m2_instrumented(std::uint64_t n) {
    if (n == 0)
        throw DomainError("M2 is defined for n >= 1");
    const StepCounter c = count_step(n);
    RefCountReport r;
    r.n = n;
    r.m1 = m1(n);
    r.m2_linear_part = m1(n / 2);
    r.m2_step_part = c.refs;
    r.m2 = r.m2_linear_part + r.m2_step_part;
    r.ratio = mpq_class(static_cast<unsigned long>(r.m2));
    r.ratio /= static_cast<unsigned long>(r.m1);
    return r;
}

std::uint64_t m2_closed_form_4n(std::uint64_t m) {
    if (m == 0)
        throw DomainError("closed form is defined for m >= 1");
    std::uint64_t sum = 2 * m + 1 + 2 * isqrt_floor(m);
    for (std::uint64_t k = 1; k <= m; ++k)
        sum += isqrt_ceil(k);
    for (std::uint64_t k = 1; k <= 2 * m; ++k)
        sum += isqrt_floor(k);
    return sum;
}

std::uint64_t step_term_count(std::uint64_t n) {
    return count_step(n).terms;
}

std::vector<RefCountReport> ratio_table(unsigned residue,
                                        const std::vector<std::uint64_t>& ns) {
    if (residue > 3)
        throw DomainError("residue must be in 0..3");
    std::vector<RefCountReport> rows;
    rows.reserve(ns.size());
    for (const std::uint64_t n : ns) {
        if (n == 0 || n % 4 != residue)
            throw DomainError("n = " + std::to_string(n) + " is not in residue class " +
                              std::to_string(residue) + " (mod 4)");
        rows.push_back(m2_instrumented(n));
    }
    return rows;
}

std::span<const TableRow> reference_table(unsigned residue) {
    // n == 1 (mod 4)
    static constexpr TableRow r1[] = {
        {1, 1, 2, "2.000"},         {5, 7, 6, "0.857"},
        {9, 16, 13, "0.812"},       {13, 28, 20, "0.714"},
        {17, 42, 27, "0.642"},      {21, 58, 36, "0.620"},
        {25, 75, 47, "0.626"},      {101, 635, 337, "0.530"},
        {1001, 20646, 10149, "0.491"}, {10001, 661850, 319225, "0.482"},
    };
    // n == 2 (mod 4)
    static constexpr TableRow r2[] = {
        {2, 2, 3, "1.500"},         {6, 9, 9, "1.000"},
        {10, 19, 17, "0.894"},      {14, 31, 25, "0.806"},
        {18, 46, 35, "0.760"},      {22, 62, 46, "0.741"},
        {26, 80, 57, "0.712"},      {102, 645, 376, "0.582"},
        {1002, 20677, 10526, "0.509"}, {10002, 661950, 322972, "0.487"},
    };
    // n == 3 (mod 4)
    static constexpr TableRow r3[] = {
        {3, 3, 3, "1.000"},         {7, 11, 7, "0.636"},
        {11, 22, 14, "0.636"},      {15, 34, 21, "0.617"},
        {19, 50, 29, "0.580"},      {23, 66, 38, "0.575"},
        {27, 85, 48, "0.564"},      {103, 655, 340, "0.519"},
        {1003, 20708, 10156, "0.490"}, {10003, 662050, 319246, "0.482"},
    };
    // n == 0 (mod 4)
    static constexpr TableRow r0[] = {
        {4, 5, 8, "1.600"},         {8, 13, 15, "1.153"},
        {12, 25, 23, "0.920"},      {16, 38, 33, "0.868"},
        {20, 54, 44, "0.814"},      {24, 70, 55, "0.785"},
        {28, 90, 66, "0.733"},      {104, 665, 395, "0.593"},
        {1004, 20739, 10580, "0.510"}, {10004, 662150, 323144, "0.488"},
    };
    switch (residue) {
    case 1: return r1;
    case 2: return r2;
    case 3: return r3;
    case 0: return r0;
    default: throw DomainError("residue must be in 0..3");
    }
}

int compare_to_limit(const mpq_class& q, const mpq_class& offset) {
    // q vs 1/8 + sqrt(1/8) + offset: move the rational part across and
    // square. t = q - 1/8 - offset is rational, so t^2 != 1/8 always.
    mpq_class qc = q, oc = offset;
    qc.canonicalize();
    oc.canonicalize();
    mpq_class t = qc - mpq_class(1, 8) - oc;
    if (t < 0)
        return -1;
    return (t * t > mpq_class(1, 8)) ? 1 : -1;
}

bool term_count_chain_holds(std::uint64_t n_max) {
    std::uint64_t sum_nearest = isqrt_nearest(1); // sum_{k=1}^{n+1} [sqrt(k)]
    std::uint64_t sum_floor = 0;                  // sum_{k=1}^{n} floor(sqrt(k))
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        sum_nearest += isqrt_nearest(n + 1);
        sum_floor += isqrt_floor(n);
        if (!(isqrt_floor(4 * n + 3) <= sum_nearest && sum_nearest < n + 1 + sum_floor))
            return false;
    }
    return true;
}

bool m1_sqrt_sandwich_holds(std::uint64_t m_max) {
    mpz_class sum_lo, sum_hi, lo, hi;
    std::uint64_t m1_val = 0;
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        for (std::uint64_t k = 4 * (m - 1) + 1; k <= 4 * m; ++k) {
            sqrt_fixed_bounds(k, lo, hi);
            sum_lo += lo;
            sum_hi += hi;
            m1_val += isqrt_floor(k);
        }
        // sum sqrt(k) - 4m < M1(4m):  sum_hi/2^F < M1 + 4m suffices
        const mpz_class scaled_m1 = mpz_class(static_cast<unsigned long>(m1_val)) << kFracBits;
        const mpz_class scaled_4m = mpz_class(static_cast<unsigned long>(4 * m)) << kFracBits;
        if (!(sum_hi < scaled_m1 + scaled_4m))
            return false;
        // M1(4m) <= sum sqrt(k):  M1*2^F <= sum_lo suffices
        if (!(scaled_m1 <= sum_lo))
            return false;
    }
    return true;
}

bool sqrt_sum_bounds_hold(std::uint64_t n_max) {
    mpz_class sum_lo, sum_hi, lo, hi, root_lo, root_hi;
    const mpz_class unit = mpz_class(1) << kFracBits;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        sqrt_fixed_bounds(n, lo, hi);
        sum_lo += lo;
        sum_hi += hi;
        sqrt_fixed_bounds(n + 1, root_lo, root_hi);
        // lower: (sqrt(n+1)(16n+3) - 3)/24 < sum  <=  root_hi(16n+3) - 3*2^F < 24*sum_lo
        if (!(root_hi * (16 * n + 3) - 3 * unit < 24 * sum_lo))
            return false;
        // upper: sum < (sqrt(n+1)(4n+1) - 1)/6  <=  6*sum_hi < root_lo(4n+1) - 2^F
        if (!(6 * sum_hi < root_lo * (4 * n + 1) - unit))
            return false;
    }
    return true;
}

} // namespace overp::metrics
