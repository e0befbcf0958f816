#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

namespace overp {

enum class Method { linear, hybrid, series, enumerate };

enum class OutputFormat { plain, structured };

// How a value request is carried out: which algorithm, how many worker
// threads for the nonlinear step, and the on-disk table cache policy.
struct ComputePlan {
    Method method = Method::hybrid;
    unsigned workers = 1;
    std::optional<std::filesystem::path> cache_path;
    bool cache_fallback = true; // corrupt cache: recompute (true) or error out (false)
    OutputFormat output = OutputFormat::plain;
    std::uint64_t max_oracle_n = 10000; // safety bound for series/enumerate methods
};

} // namespace overp
