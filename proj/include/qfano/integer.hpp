#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>

#include "qfano/errors.hpp"

namespace qfano {

using Int = std::int64_t;

// Overflow-checked arithmetic on Int. Every operation either returns the
// exact result or throws OverflowError; nothing wraps.
namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

// a + b * c
inline Int fma(Int a, Int b, Int c) { return add(a, mul(b, c)); }

}  // namespace checked

// Nonnegative gcd; gcd(0, 0) == 0.
inline Int gcd(Int a, Int b) {
    if (a == INT64_MIN || b == INT64_MIN) throw OverflowError("gcd of INT64_MIN");
    return std::gcd(a, b);
}

// gcd of all entries, 0 for an empty or all-zero input.
inline Int gcd_of(std::span<const Int> values) {
    Int g = 0;
    for (Int v : values) g = gcd(g, v);
    return g;
}

struct Bezout {
    Int g;  // gcd(a, b) >= 0
    Int x;  // a*x + b*y == g
    Int y;
};

// Extended Euclid on nonnegative inputs.
inline Bezout extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = checked::sub(old_r, checked::mul(q, r));
        std::swap(old_r, r);
        old_s = checked::sub(old_s, checked::mul(q, s));
        std::swap(old_s, s);
        old_t = checked::sub(old_t, checked::mul(q, t));
        std::swap(old_t, t);
    }
    return {old_r, old_s, old_t};
}

}  // namespace qfano
