#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumdilates/decompose.hpp"

namespace sumdilates {

/// An exponent bound E in |lambda_1*A + ... + lambda_h*A| <= K^E |A|.
/// Integer-valued bounds carry their exact value so argmin comparisons never
/// flip on rounding.
struct Exponent {
    double value = 0.0;
    std::optional<std::int64_t> exact;

    static Exponent from_int(std::int64_t v) { return {static_cast<double>(v), v}; }
    static Exponent from_real(double v) { return {v, std::nullopt}; }
};

bool exponent_less(const Exponent& a, const Exponent& b);

/// sum_i |lambda_i|.
std::int64_t plunnecke_exponent(std::span<const std::int64_t> lambdas);

/// 7 + 12 * sum_i log2(1 + |lambda_i|).
double bukh_exponent(std::span<const std::int64_t> lambdas);

/// 7 + 10r + 2 * sum_i popcount(|lambda_i|).
std::int64_t binbound_exponent(std::span<const std::int64_t> lambdas);

/// 7 + 10r + 2 * weight(d); d must be a valid decomposition of the tuple's digit graph.
std::int64_t decomposition_exponent(std::span<const std::int64_t> lambdas, const Decomposition& d);

struct MainTheoremBound {
    double value = 0.0;      // 7rh / ln(r + h)
    bool applicable = false; // min{r+1, h} >= 10 (ln max{r+1, h})^2
};

/// Requires r >= 1, h >= 1 and r + h >= 3.
MainTheoremBound main_theorem_exponent(std::int64_t r, std::int64_t h);

struct DecompositionBound {
    std::string label;          // star-rows | star-cols | greedy | exact
    std::int64_t weight = 0;
    std::int64_t q = 0;
    std::int64_t exponent = 0;        // 7 + 10r + 2*weight
    std::int64_t sharp_exponent = 0;  // 7 + 10r + q + sum|X_i| + 2*sum|Y_i|
};

struct ExponentReport {
    std::vector<std::int64_t> lambdas;
    std::int64_t r = 0;
    std::int64_t h = 0;
    std::int64_t plunnecke = 0;
    double bukh = 0.0;
    std::int64_t binbound = 0;
    std::vector<DecompositionBound> decompositions;
    std::optional<MainTheoremBound> main_theorem;
    std::string best_label;
    Exponent best;
    std::string best_decomposition_label;
    Decomposition best_decomposition;
};

struct ReportParams {
    GreedyParams greedy;
    ExactLimits exact;
};

/// Builds the digit graph, runs star-rows, star-cols, greedy and (within
/// limits.max_edges) the exact solver, and reports every bound. best is the
/// argmin over plunnecke, bukh, binbound, the decomposition exponents, and —
/// only when its applicability condition holds — the main-theorem value.
ExponentReport exponent_report(std::span<const std::int64_t> lambdas, const ReportParams& params = {});

} // namespace sumdilates
