#pragma once

#include <bit>
#include <cstdint>

namespace overp {

// Rounding mode for integer square roots. `nearest` is the bracket
// [x] = floor(x + 1/2); since sqrt(k) is never a half-integer there is
// no tie to break.
enum class SqrtKind { floor, ceil, nearest };

// floor(sqrt(k)) by Newton iteration on integers, no floating point.
constexpr std::uint64_t isqrt_floor(std::uint64_t k) {
    if (k < 2) return k;
    // initial estimate >= sqrt(k)
    std::uint64_t x = std::uint64_t{1} << ((std::bit_width(k) + 1) / 2);
    std::uint64_t y = (x + k / x) / 2;
    while (y < x) {
        x = y;
        y = (x + k / x) / 2;
    }
    return x;
}

constexpr std::uint64_t isqrt_ceil(std::uint64_t k) {
    const std::uint64_t r = isqrt_floor(k);
    return r + (r * r != k ? 1 : 0);
}

// Nearest integer to sqrt(k): with r = floor(sqrt(k)), round up exactly
// when k >= r^2 + r + 1, i.e. when k > r^2 + r, since (r + 1/2)^2 = r^2 + r + 1/4.
constexpr std::uint64_t isqrt_nearest(std::uint64_t k) {
    const std::uint64_t r = isqrt_floor(k);
    return r + (k - r * r > r ? 1 : 0);
}

constexpr std::uint64_t int_sqrt(std::uint64_t k, SqrtKind kind) {
    switch (kind) {
    case SqrtKind::ceil:    return isqrt_ceil(k);
    case SqrtKind::nearest: return isqrt_nearest(k);
    case SqrtKind::floor:   break;
    }
    return isqrt_floor(k);
}

} // namespace overp
