#pragma once

#include <cstdint>
#include <stdexcept>

namespace wdp {

// All lattice arithmetic in this library is exact int64. Ranks never exceed
// 13 and coefficients stay tiny, so overflow is a bug, not a rounding mode;
// these helpers turn it into an exception.

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

}  // namespace wdp
