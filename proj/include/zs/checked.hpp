#pragma once

#include <cstdint>
#include <optional>

#include "zs/errors.hpp"

namespace zs {

using i64 = std::int64_t;
using i128 = __int128;

constexpr i64 kI64Max = INT64_MAX;
constexpr i64 kI64Min = INT64_MIN;

inline bool fits_i64(i128 v) { return v >= (i128)kI64Min && v <= (i128)kI64Max; }

inline i64 narrow_i64(i128 v, const char* what = "value") {
    if (!fits_i64(v)) throw OverflowError(std::string(what) + " exceeds 64-bit range");
    return (i64)v;
}

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflows");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflows");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflows");
    return r;
}

inline i64 checked_neg(i64 a) {
    if (a == kI64Min) throw OverflowError("integer negation overflows");
    return -a;
}

// Non-throwing variants for membership probes: overflow means "not representable,
// hence not a member", never a hard failure.
inline std::optional<i64> try_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) return std::nullopt;
    return r;
}

inline i64 checked_pow(i64 base, int exp) {
    i64 r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// gcd over non-negative values, gcd(0,0)=0.
inline i64 gcd_i64(i64 a, i64 b) {
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace zs
