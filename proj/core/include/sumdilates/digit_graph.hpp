#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumdilates/bipartite_graph.hpp"

namespace sumdilates {

/// lambda = sign * sum(2^j for j in digits); digits are the set bits of |lambda|.
struct DigitExpansion {
    std::int64_t lambda = 0;
    int sign = 1;  // +1 or -1
    std::vector<int> digits;
};

/// Bipartite graph joining coefficient positions (left) to the powers of two
/// present in the binary expansion of their magnitudes (right, vertex j is 2^j).
/// Left vertices are positions, so repeated coefficient values stay distinct.
struct DigitGraph {
    std::vector<DigitExpansion> expansions;  // indexed by position, 0-based
    int max_exp = 0;                         // r; right side is 0..r
    BipartiteGraph graph;

    std::int64_t h() const { return static_cast<std::int64_t>(expansions.size()); }
};

/// Throws std::invalid_argument for lambda == 0.
DigitExpansion binary_expansion(std::int64_t lambda);

/// max_i floor(log2 |lambda_i|); the list must be nonempty and zero-free.
int max_exponent(std::span<const std::int64_t> lambdas);

DigitGraph build_digit_graph(std::span<const std::int64_t> lambdas);

} // namespace sumdilates
