#pragma once

#include <cstdint>
#include <vector>

#include "sumdilates/int_set.hpp"

namespace sumdilates {

/// Generalized arithmetic progression {base + x_1*d_1 + ... + x_k*d_k : 0 <= x_i < L_i}.
struct GapSpec {
    std::int64_t base = 0;
    std::vector<std::int64_t> diffs;    // d_1 ... d_k
    std::vector<std::int64_t> lengths;  // L_1 ... L_k, each >= 1
};

struct GapResult {
    IntSet set;
    bool proper = false;  // |P| == L_1 * ... * L_k
};

/// Enumerates the progression. Throws std::invalid_argument on a malformed
/// spec, limit_exceeded when the length product exceeds `cap`, and
/// arithmetic_overflow on element overflow.
GapResult gap_generate(const GapSpec& spec, std::int64_t cap = kDefaultCardinalityCap);

} // namespace sumdilates
