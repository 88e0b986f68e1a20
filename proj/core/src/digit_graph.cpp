#include "sumdilates/digit_graph.hpp"

#include <bit>
#include <stdexcept>

#include "sumdilates/checked.hpp"

namespace sumdilates {

DigitExpansion binary_expansion(std::int64_t lambda) {
    if (lambda == 0) throw std::invalid_argument("binary expansion of zero is not defined here");
    DigitExpansion e;
    e.lambda = lambda;
    e.sign = lambda < 0 ? -1 : 1;
    std::uint64_t bits = magnitude(lambda);
    while (bits) {
        e.digits.push_back(std::countr_zero(bits));
        bits &= bits - 1;
    }
    return e;
}

int max_exponent(std::span<const std::int64_t> lambdas) {
    if (lambdas.empty()) throw std::invalid_argument("max_exponent of an empty tuple");
    int r = 0;
    for (std::int64_t lambda : lambdas) {
        if (lambda == 0) throw std::invalid_argument("coefficient tuple contains a zero");
        const int top = 63 - std::countl_zero(magnitude(lambda));
        if (top > r) r = top;
    }
    return r;
}

DigitGraph build_digit_graph(std::span<const std::int64_t> lambdas) {
    DigitGraph g;
    g.max_exp = max_exponent(lambdas);
    g.graph = BipartiteGraph(static_cast<int>(lambdas.size()), g.max_exp + 1);
    g.expansions.reserve(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        DigitExpansion e = binary_expansion(lambdas[i]);
        for (int j : e.digits) g.graph.add_edge(static_cast<int>(i), j);
        g.expansions.push_back(std::move(e));
    }
    return g;
}

} // namespace sumdilates
