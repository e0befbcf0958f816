#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <vector>

namespace overp {

// Dense memo of exact overpartition numbers p(0..max_n). Construction is
// sequential (see kernel); once filled, the table is shared read-only
// across worker threads.
struct OverpartitionTable {
    std::vector<mpz_class> values{mpz_class(1)}; // p(0) = 1

    std::uint64_t max_n() const { return values.size() - 1; }
    bool covers(std::uint64_t n) const { return n < values.size(); }
    const mpz_class& operator[](std::uint64_t i) const { return values[i]; }

    friend bool operator==(const OverpartitionTable& a, const OverpartitionTable& b) {
        return a.values == b.values;
    }
};

// Lazy view of the odd-part overpartition numbers p_odd(m), derived from a
// p table that must cover floor(m/2).
struct OddSeriesView {
    const OverpartitionTable& source;
};

} // namespace overp
