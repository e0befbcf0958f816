#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

namespace overp {

struct SelftestOptions {
    std::uint64_t max_n = 200; // must be >= 12 to cover all four residue classes
    std::optional<std::filesystem::path> cache_path; // validated when present
};

// Runs the invariant suites (cross-method, oracle, identities, parity,
// table cells, inequalities, cache) up to opts.max_n, printing one
// pass/fail line per suite. Returns true iff everything passed.
bool run_selftest(const SelftestOptions& opts, std::ostream& out);

} // namespace overp
