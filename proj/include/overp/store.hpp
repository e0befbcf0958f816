#pragma once

#include <filesystem>
#include <string_view>

#include "overp/table.hpp"

namespace overp::store {

inline constexpr std::string_view kMagic = "OVERP1";

// Cache file layout (LF, ASCII):
//   OVERP1
//   <count>
//   0<TAB>1
//   1<TAB>2
//   ...
// one record per index 0..count-1, gap-free and in order.

// Writes the table to `path` atomically (temp file + rename), creating
// parent directories as needed. I/O failures throw with path context.
void save(const OverpartitionTable& table, const std::filesystem::path& path);

// Reads a table back, re-validating every format invariant (magic, count,
// order, decimal values, p(0) = 1, even values from index 1 on). Throws
// FormatError on violations; plain I/O failures throw other types.
OverpartitionTable load(const std::filesystem::path& path);

} // namespace overp::store
