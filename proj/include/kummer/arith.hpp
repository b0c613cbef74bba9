#pragma once

#include <cstdint>
#include <numeric>

#include "kummer/error.hpp"

namespace kummer {

using Int = std::int64_t;

/// Mathematical floor of a/b for b > 0 (rounds toward minus infinity).
constexpr Int floor_div(Int a, Int b) noexcept {
    Int q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

/// Mathematical ceiling of a/b for b > 0.
constexpr Int ceil_div(Int a, Int b) noexcept {
    return -floor_div(-a, b);
}

/// Least non-negative residue of a modulo m (m > 0).
constexpr Int mod(Int a, Int m) noexcept {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline Int checked_mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(Errc::overflow, "integer overflow in product");
    return out;
}

inline Int checked_add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(Errc::overflow, "integer overflow in sum");
    return out;
}

/// Unique x in [1, m-1] with a*x = 1 (mod m). `a` may be negative.
/// Throws Errc::not_coprime when gcd(a, m) != 1.
Int mod_inverse(Int a, Int m);

/// Scans 1 <= j <= m-1 and reports whether
/// floor(r(j+1)/m) - floor(rj/m) >= floor(r/m) holds throughout.
bool check_floor_minus(Int m, Int r);

} // namespace kummer
