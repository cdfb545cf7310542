#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rankcrank {

/// Exact count type used by every table, series and moment.
using count_t = std::int64_t;

namespace checked {

inline count_t add(count_t a, count_t b) {
    count_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in " + std::to_string(a) + " + " +
                                  std::to_string(b));
    }
    return r;
}

inline count_t sub(count_t a, count_t b) {
    count_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in " + std::to_string(a) + " - " +
                                  std::to_string(b));
    }
    return r;
}

inline count_t mul(count_t a, count_t b) {
    count_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("integer overflow in " + std::to_string(a) + " * " +
                                  std::to_string(b));
    }
    return r;
}

inline count_t pow(count_t base, int exponent) {
    count_t r = 1;
    for (int i = 0; i < exponent; ++i) {
        r = mul(r, base);
    }
    return r;
}

inline count_t& add_to(count_t& acc, count_t v) { return acc = add(acc, v); }

}  // namespace checked
}  // namespace rankcrank
