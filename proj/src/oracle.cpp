// Slow trusted reference paths: direct DP enumeration and theta-series
// inversion. Verification-only; nothing here is tuned for speed.

#include "overp/oracle.hpp"

#include "overp/errors.hpp"

namespace overp::oracle {

namespace {

std::vector<mpz_class> dp_prefix(std::uint64_t n, bool odd_only) {
    std::vector<mpz_class> c(n + 1);
    c[0] = 1;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (odd_only && k % 2 == 0)
            continue;
        // one optional overlined part of size k: descending keeps each
        // source coefficient at its pre-factor value
        for (std::uint64_t i = n; i >= k; --i)
            c[i] += c[i - k];
        // unbounded plain parts of size k
        for (std::uint64_t i = k; i <= n; ++i)
            c[i] += c[i - k];
    }
    return c;
}

} // namespace

SeriesPrefix theta_prefix(std::uint64_t length) {
    std::vector<mpz_class> t(length);
    if (length > 0)
        t[0] = 1;
    for (std::uint64_t m = 1; m * m < length; ++m)
        t[m * m] = (m % 2 == 1) ? -2 : 2;
    return SeriesPrefix{std::move(t)};
}

SeriesPrefix invert(const SeriesPrefix& series) {
    if (series.coeffs.empty())
        throw DomainError("cannot invert an empty series prefix");
    const mpz_class& c0 = series.coeffs[0];
    if (c0 != 1 && c0 != -1)
        throw DomainError("series inversion requires leading coefficient +/-1, got " +
                          c0.get_str());
    const std::uint64_t n = series.length();
    std::vector<mpz_class> b(n);
    b[0] = c0;
    mpz_class acc;
    for (std::uint64_t i = 1; i < n; ++i) {
        acc = 0;
        for (std::uint64_t j = 1; j <= i; ++j) {
            if (mpz_sgn(series.coeffs[j].get_mpz_t()) == 0)
                continue;
            mpz_addmul(acc.get_mpz_t(), series.coeffs[j].get_mpz_t(),
                       b[i - j].get_mpz_t());
        }
        b[i] = -acc * c0; // division by c0 = +/-1
    }
    return SeriesPrefix{std::move(b)};
}

std::vector<mpz_class> enumerate_overpartitions_prefix(std::uint64_t n) {
    return dp_prefix(n, false);
}

std::vector<mpz_class> enumerate_odd_prefix(std::uint64_t n) {
    return dp_prefix(n, true);
}

mpz_class enumerate_overpartitions(std::uint64_t n) {
    return dp_prefix(n, false)[n];
}

mpz_class enumerate_odd(std::uint64_t n) {
    return dp_prefix(n, true)[n];
}

mpz_class series_inverse(std::uint64_t n) {
    return invert(theta_prefix(n + 1)).coeffs[n];
}

} // namespace overp::oracle
