#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace overp::oracle {

// Power-series prefix c_0..c_{N-1}. Inversion requires c_0 = +/-1 so that
// all quotients stay integral.
struct SeriesPrefix {
    std::vector<mpz_class> coeffs;
    std::uint64_t length() const { return coeffs.size(); }
};

// Prefix of sum_{k in Z} (-q)^{k^2} = 1 + 2 sum_{m>=1} (-1)^m q^{m^2}.
SeriesPrefix theta_prefix(std::uint64_t length);

// Multiplicative inverse prefix by quadratic-time long division.
SeriesPrefix invert(const SeriesPrefix& series);

// p(0..n) by part-by-part DP over the factors (1+q^k)/(1-q^k): for each
// part size one optional overlined occurrence, then unbounded plain ones.
std::vector<mpz_class> enumerate_overpartitions_prefix(std::uint64_t n);

// Same DP restricted to odd part sizes: p_odd(0..n).
std::vector<mpz_class> enumerate_odd_prefix(std::uint64_t n);

mpz_class enumerate_overpartitions(std::uint64_t n);
mpz_class enumerate_odd(std::uint64_t n);

// Coefficient n of the inverse theta prefix.
mpz_class series_inverse(std::uint64_t n);

} // namespace overp::oracle
