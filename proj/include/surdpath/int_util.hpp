#pragma once

// Checked 64-bit integer helpers. All tree and continued-fraction arithmetic
// in this library goes through these: a silent wraparound would corrupt
// period detection, so overflow always raises.

#include <cmath>
#include <cstdint>
#include <limits>

#include "surdpath/errors.hpp"

namespace surdpath {

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "integer addition overflow");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) fail(Errc::Overflow, "integer subtraction overflow");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "integer multiplication overflow");
    return r;
}

inline int64_t checked_neg(int64_t a) {
    if (a == std::numeric_limits<int64_t>::min()) fail(Errc::Overflow, "integer negation overflow");
    return -a;
}

/// Floor division with positive divisor: largest m with m*b <= a.
inline int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

/// Exact integer square root: k with k*k <= n < (k+1)*(k+1).
inline int64_t isqrt(int64_t n) {
    if (n < 0) fail(Errc::PreconditionViolated, "isqrt of negative number");
    if (n == 0) return 0;
    auto un = static_cast<uint64_t>(n);
    auto k = static_cast<uint64_t>(std::sqrt(static_cast<double>(un)));
    // The double seed can be off by one in either direction near 2^53+.
    while (k > 0 && k > un / k) --k;
    while ((k + 1) <= un / (k + 1)) ++k;
    return static_cast<int64_t>(k);
}

inline bool is_perfect_square(int64_t n) {
    if (n < 0) return false;
    int64_t k = isqrt(n);
    return k * k == n;
}

}  // namespace surdpath
