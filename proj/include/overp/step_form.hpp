#pragma once

#include <algorithm>
#include <cstdint>

#include "overp/intsqrt.hpp"

namespace overp::detail {

// Number of outer summation indices in the residue-class expansion of p(n)
// (the double-sum and single-sum k ranges share one partition domain).
inline std::uint64_t step_outer_count(std::uint64_t n) {
    const std::uint64_t m = n / 4;
    switch (n % 4) {
    case 0:  return m;     // double sum k <= m-2, single sum k <= m-1
    case 1:  return m;     // double sum k <= m-1
    case 2:  return m + 1; // double sum k <= m-1, single sum k <= m
    default: return m + 1; // double sum k <= m
    }
}

// Enumerates the product terms of the residue-class expansion of p(n).
// All emitted arguments lie in [0, floor(n/2)].
//
// Visitor callbacks:
//   group_begin(k)   factored group p(k)*(p(b1)+p(b2)+...), overall weight 4
//   group_arg(b)     one argument inside the current group
//   group_end()
//   product(a, b)    term p(a)*p(b), weight 2
//   square(a)        term p(a)^2, weight 2
//   final_square(a)  the trailing p(a)^2, weight 1 (n == 0 mod 4 only)
//
// Outer k indices of the double and single sums are restricted to
// [k_lo, k_hi) so workers can own disjoint contiguous ranges; the square
// terms (O(sqrt n) of them) are emitted only when `tail` is set.
template <class Visitor>
void visit_step_terms(std::uint64_t n, std::uint64_t k_lo, std::uint64_t k_hi,
                      bool tail, Visitor&& vis) {
    const std::uint64_t m = n / 4;
    const auto hi = [&](std::uint64_t count) { return std::min(k_hi, count); };

    switch (n % 4) {
    case 0: {
        // p(4m) = 4 sum_{k=0}^{m-2} sum_{j=1}^{ceil(sqrt(m-k))-1} p(k) p(2m-k-2j^2)
        //       + 2 sum_{k=0}^{m-1} p(k) p(2m-k)
        //       + 2 sum_{j=1}^{floor(sqrt(m))} p(m-j^2)^2 + p(m)^2
        const std::uint64_t dbl = m >= 1 ? m - 1 : 0;
        for (std::uint64_t k = k_lo; k < hi(dbl); ++k) {
            const std::uint64_t jmax = isqrt_ceil(m - k) - 1;
            if (jmax == 0) continue;
            vis.group_begin(k);
            for (std::uint64_t j = 1; j <= jmax; ++j)
                vis.group_arg(2 * m - k - 2 * j * j);
            vis.group_end();
        }
        for (std::uint64_t k = k_lo; k < hi(m); ++k)
            vis.product(k, 2 * m - k);
        if (tail) {
            for (std::uint64_t j = 1; j <= isqrt_floor(m); ++j)
                vis.square(m - j * j);
            vis.final_square(m);
        }
        break;
    }
    case 1: {
        // p(4m+1) = 4 sum_{k=0}^{m-1} sum_{j=1}^{[sqrt(m-k)]} p(k) p(2m-k-2j(j-1))
        //         + 2 sum_{j=1}^{[sqrt(m+1)]} p(m-j(j-1))^2
        for (std::uint64_t k = k_lo; k < hi(m); ++k) {
            const std::uint64_t jmax = isqrt_nearest(m - k);
            if (jmax == 0) continue;
            vis.group_begin(k);
            for (std::uint64_t j = 1; j <= jmax; ++j)
                vis.group_arg(2 * m - k - 2 * j * (j - 1));
            vis.group_end();
        }
        if (tail) {
            for (std::uint64_t j = 1; j <= isqrt_nearest(m + 1); ++j)
                vis.square(m - j * (j - 1));
        }
        break;
    }
    case 2: {
        // p(4m+2) = 4 sum_{k=0}^{m-1} sum_{j=1}^{floor(sqrt(m-k))} p(k) p(2m+1-k-2j^2)
        //         + 2 sum_{k=0}^{m} p(k) p(2m+1-k)
        for (std::uint64_t k = k_lo; k < hi(m); ++k) {
            const std::uint64_t jmax = isqrt_floor(m - k);
            if (jmax == 0) continue;
            vis.group_begin(k);
            for (std::uint64_t j = 1; j <= jmax; ++j)
                vis.group_arg(2 * m + 1 - k - 2 * j * j);
            vis.group_end();
        }
        for (std::uint64_t k = k_lo; k < hi(m + 1); ++k)
            vis.product(k, 2 * m + 1 - k);
        break;
    }
    default: {
        // p(4m+3) = 4 sum_{k=0}^{m} sum_{j=1}^{[sqrt(m+1-k)]} p(k) p(2m+1-k-2j(j-1))
        for (std::uint64_t k = k_lo; k < hi(m + 1); ++k) {
            const std::uint64_t jmax = isqrt_nearest(m + 1 - k);
            if (jmax == 0) continue;
            vis.group_begin(k);
            for (std::uint64_t j = 1; j <= jmax; ++j)
                vis.group_arg(2 * m + 1 - k - 2 * j * (j - 1));
            vis.group_end();
        }
        break;
    }
    }
}

} // namespace overp::detail
