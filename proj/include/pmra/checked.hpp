#pragma once

#include <cstdint>

#include "pmra/errors.hpp"

namespace pmra {

using i64 = std::int64_t;

// Exact 64-bit arithmetic. Overflow is always an error, never a wraparound.

inline i64 add_i(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i64 sub_i(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i64 mul_i(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline i64 neg_i(i64 a) { return sub_i(0, a); }

inline i64 abs_i(i64 a) { return a < 0 ? neg_i(a) : a; }

inline int sign_i(i64 a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

/// gcd with the convention gcd(0,k) = |k|; result >= 0.
inline i64 gcd_i(i64 a, i64 b) {
    a = abs_i(a);
    b = abs_i(b);
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// a^k for k >= 0 with overflow checking.
inline i64 pow_i(i64 a, int k) {
    i64 r = 1;
    for (int j = 0; j < k; ++j) r = mul_i(r, a);
    return r;
}

/// Floor division (rounds toward negative infinity).
inline i64 floor_div_i(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Non-negative remainder: a - floor_div(a,b)*b, in [0, |b|).
inline i64 mod_i(i64 a, i64 b) {
    i64 m = a % b;
    if (m < 0) m += (b < 0 ? -b : b);
    return m;
}

} // namespace pmra
