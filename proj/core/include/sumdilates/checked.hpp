#pragma once

#include <cstdint>
#include <string>

#include "sumdilates/errors.hpp"

namespace sumdilates {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw arithmetic_overflow("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw arithmetic_overflow("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    }
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw arithmetic_overflow("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return out;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

/// |a| as an unsigned value; well-defined for INT64_MIN too.
inline std::uint64_t magnitude(std::int64_t a) {
    return a < 0 ? 0u - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
}

} // namespace sumdilates
