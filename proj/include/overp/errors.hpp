#pragma once

#include <stdexcept>
#include <string>

namespace overp {

// Raised when a recurrence needs table entries beyond the filled prefix.
struct TableTooShort : std::out_of_range {
    explicit TableTooShort(const std::string& what) : std::out_of_range(what) {}
};

// Raised on arguments outside an operation's domain (e.g. M2 at n = 0).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a cache file violates the on-disk format; callers may fall
// back to recomputation. I/O failures use other exception types.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace overp
