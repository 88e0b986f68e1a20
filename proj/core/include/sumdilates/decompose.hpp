#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumdilates/bipartite_graph.hpp"
#include "sumdilates/digit_graph.hpp"

namespace sumdilates {

/// Complete bipartite subgraph (left_part x right_part), indices 0-based.
struct Biclique {
    std::vector<int> left;
    std::vector<int> right;

    std::int64_t weight() const { return static_cast<std::int64_t>(left.size() + right.size()); }
    std::int64_t edge_cover() const { return static_cast<std::int64_t>(left.size()) * static_cast<std::int64_t>(right.size()); }
};

/// Edge-disjoint biclique family covering the host graph's edge set exactly.
/// gammas is filled for digit-graph hosts: gammas[j] = sum(2^v for v in right of biclique j).
struct Decomposition {
    std::vector<Biclique> bicliques;
    std::int64_t weight = 0;
    std::vector<std::uint64_t> gammas;

    std::int64_t q() const { return static_cast<std::int64_t>(bicliques.size()); }
    std::int64_t left_sum() const;
    std::int64_t right_sum() const;
};

enum class StarOrientation { rows, columns };

enum class DecomposeAlgo { star_rows, star_cols, greedy, exact };
std::string to_string(DecomposeAlgo algo);
DecomposeAlgo parse_algo(const std::string& name);

struct GreedyParams {
    int max_q = 4;                      // seed-subset size bound for the biclique search
    int beam_width = 32;                // beam kept per search level
    std::int64_t time_budget_ms = -1;   // < 0 means unlimited
    std::uint64_t seed = 0;             // reserved; the search itself is deterministic
};

struct ExactLimits {
    int max_edges = 12;
};

/// rows: one biclique ({u}, N(u)) per nonisolated left vertex;
/// columns: one biclique (N(v), {v}) per nonisolated right vertex.
Decomposition star_decomposition(const BipartiteGraph& g, StarOrientation orientation);

/// Density-driven peeling: repeatedly extracts the biclique maximizing covered
/// edges per unit weight, found by beam search over small left-vertex seed sets
/// and closed to all left vertices adjacent to the full common neighborhood.
/// Deterministic; never returns a result heavier than either star baseline.
Decomposition greedy_decomposition(const BipartiteGraph& g, const GreedyParams& params = {});

/// Provable minimum-weight partition by exhaustive branching on the first
/// uncovered edge, memoized over residual edge masks. Exponential; guarded by
/// limits.max_edges (hard ceiling 62 edges).
Decomposition exact_min_weight_decomposition(const BipartiteGraph& g, const ExactLimits& limits = {});

struct ValidationReport {
    bool is_partition = false;        // every host edge covered exactly once, nothing else
    bool parts_are_bicliques = false; // nonempty parts, all pairs are host edges
    bool weight_matches = false;
    std::int64_t recomputed_weight = 0;
    std::optional<bool> gamma_reconstruction;  // digit-graph hosts only

    bool ok() const {
        return is_partition && parts_are_bicliques && weight_matches &&
               gamma_reconstruction.value_or(true);
    }
};

ValidationReport validate_decomposition(const BipartiteGraph& g, const Decomposition& d);
/// Additionally checks sum(gamma_j : i in X_j) == |lambda_i| for every i.
ValidationReport validate_decomposition(const DigitGraph& g, const Decomposition& d);

/// gamma_j = sum of 2^v over the right part of biclique j.
std::vector<std::uint64_t> biclique_gammas(const DigitGraph& g, const Decomposition& d);

/// Runs a solver on the digit graph and fills in the gammas.
Decomposition decompose(const DigitGraph& g, DecomposeAlgo algo,
                        const GreedyParams& greedy = {}, const ExactLimits& exact = {});

struct TuzaBudget {
    double budget = 0.0;      // 3mn / ln m with m the larger side
    bool applicable = false;  // n >= 10 (ln m)^2, necessary-condition check only
};

/// Throws std::invalid_argument unless max(m, n) >= 2 and min(m, n) >= 1.
TuzaBudget tuza_budget(std::int64_t m, std::int64_t n);

} // namespace sumdilates
