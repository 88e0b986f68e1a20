#pragma once

#include <stdexcept>

namespace sumdilates {

/// Checked 64-bit arithmetic overflowed while building a set or an exponent.
struct arithmetic_overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured resource limit was hit (cardinality cap, edge limit, time budget).
struct limit_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sumdilates
