#pragma once

#include <cstdint>
#include <gmpxx.h>

#include "overp/plan.hpp"
#include "overp/table.hpp"

namespace overp {

// Fills the table through index `target` with
//   p(n) = -2 sum_{j=1}^{floor(sqrt(n))} (-1)^j p(n - j^2),
// leaving already-filled entries untouched. No-op if the table already
// covers `target`.
void linear_extend(OverpartitionTable& table, std::uint64_t target);

// p(n) by the residue-class expansion matching n mod 4. Reads only
// p(0..floor(n/2)); throws TableTooShort if the table ends earlier.
mpz_class nonlinear_value(const OverpartitionTable& table, std::uint64_t n);

// Same value with the outer summations split into contiguous per-worker
// ranges; the table is shared read-only and partial sums are merged by
// addition, so every worker count yields the identical integer.
mpz_class nonlinear_value(const OverpartitionTable& table, std::uint64_t n,
                          unsigned workers);

// p(n) through the symmetric two-sided form
//   sum_{k=0}^{floor(n/2)} sum_{j in Z} p(k) p(floor(n/2) - k - j(2j+1-(-1)^n)),
// terms with negative argument contributing nothing. Test reference path.
mpz_class nonlinear_value_symmetric(const OverpartitionTable& table, std::uint64_t n);

// Overpartitions of m into odd parts, from the even/odd split
//   p_odd(2n)   = p(n) + 2 sum_{k=1}^{floor(sqrt(n/2))} p(n - 2k^2)
//   p_odd(2n+1) = 2 sum_{k=0}^{floor(sqrt(n/2))} p(n - 2k(k+1))
// (negative arguments dropped). Needs table coverage floor(m/2).
mpz_class podd_value(const OddSeriesView& view, std::uint64_t m);

// The same series as a two-sided sum over k in Z. Test reference path.
mpz_class podd_value_symmetric(const OddSeriesView& view, std::uint64_t m);

// Checks p(n) == sum_{k=0}^{floor(n/2)} p(k) p_odd(n - 2k) exactly.
// Needs table coverage n.
bool check_convolution(const OverpartitionTable& table, std::uint64_t n);

// Cache-aware table construction: loads plan.cache_path when set (corrupt
// files fall back to recomputation unless plan.cache_fallback is off),
// extends to `target`, and writes back if the table grew.
OverpartitionTable load_or_extend(std::uint64_t target, const ComputePlan& plan);

// The two-phase method: linear recurrence through floor(n/2), then one
// nonlinear step across plan.workers threads.
mpz_class hybrid_compute(std::uint64_t n, const ComputePlan& plan);

} // namespace overp
