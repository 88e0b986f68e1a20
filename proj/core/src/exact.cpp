#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sumdilates/decompose.hpp"
#include "sumdilates/errors.hpp"

namespace sumdilates {

namespace {

// Exhaustive minimum-weight search over residual edge masks. Branches on the
// lexicographically first uncovered edge (u0, v0) and tries every biclique of
// the residual containing it: every left set L with u0 drawn from the
// residual neighbors of v0, crossed with every right set R with v0 drawn from
// the common residual neighborhood of L. Restricting R (or L) to maximal
// choices has no optimality proof for the weight objective, so nothing is
// pruned; memoization keeps the state space at <= 2^edges.
struct ExactSearch {
    int m = 0;
    int n = 0;
    std::vector<std::pair<int, int>> edge_list;            // lex order
    std::vector<std::vector<int>> edge_index;              // [u][v] -> edge id or -1
    std::vector<std::vector<int>> left_adj;                // u -> right neighbors
    std::vector<std::vector<int>> right_adj;               // v -> left neighbors
    std::unordered_map<std::uint64_t, std::int64_t> memo;

    explicit ExactSearch(const BipartiteGraph& g)
        : m(g.left_size()),
          n(g.right_size()),
          edge_list(g.edges()),
          edge_index(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(n), -1)),
          left_adj(static_cast<std::size_t>(m)),
          right_adj(static_cast<std::size_t>(n)) {
        for (std::size_t k = 0; k < edge_list.size(); ++k) {
            const auto [u, v] = edge_list[k];
            edge_index[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = static_cast<int>(k);
            left_adj[static_cast<std::size_t>(u)].push_back(v);
            right_adj[static_cast<std::size_t>(v)].push_back(u);
        }
    }

    // Calls visit(weight, edge_mask) for every biclique of residual `mask`
    // containing its first edge. Stops early if visit returns true.
    template <typename Visit>
    bool for_each_branch(std::uint64_t mask, Visit&& visit) const {
        const int first = std::countr_zero(mask);
        const auto [u0, v0] = edge_list[static_cast<std::size_t>(first)];

        std::vector<int> left_pool;  // residual neighbors of v0 other than u0
        for (int x : right_adj[static_cast<std::size_t>(v0)]) {
            if (x == u0) continue;
            const int e = edge_index[static_cast<std::size_t>(x)][static_cast<std::size_t>(v0)];
            if (mask >> e & 1u) left_pool.push_back(x);
        }

        std::vector<int> left_set;
        std::vector<int> right_pool;
        std::vector<std::uint64_t> right_masks;
        for (std::uint64_t lsel = 0; lsel < (std::uint64_t(1) << left_pool.size()); ++lsel) {
            left_set.assign(1, u0);
            for (std::size_t i = 0; i < left_pool.size(); ++i) {
                if (lsel >> i & 1u) left_set.push_back(left_pool[i]);
            }
            // rights adjacent (within the residual) to all of left_set;
            // per right: the OR of the covered edge bits
            right_pool.clear();
            right_masks.clear();
            std::uint64_t v0_mask = 0;
            for (int y : left_adj[static_cast<std::size_t>(u0)]) {
                std::uint64_t bmask = 0;
                bool full = true;
                for (int x : left_set) {
                    const int e = edge_index[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
                    if (e < 0 || !(mask >> e & 1u)) {
                        full = false;
                        break;
                    }
                    bmask |= std::uint64_t(1) << e;
                }
                if (!full) continue;
                if (y == v0) {
                    v0_mask = bmask;
                } else {
                    right_pool.push_back(y);
                    right_masks.push_back(bmask);
                }
            }
            for (std::uint64_t rsel = 0; rsel < (std::uint64_t(1) << right_pool.size()); ++rsel) {
                std::uint64_t bmask = v0_mask;
                int right_count = 1;
                for (std::size_t i = 0; i < right_pool.size(); ++i) {
                    if (rsel >> i & 1u) {
                        bmask |= right_masks[i];
                        ++right_count;
                    }
                }
                const std::int64_t weight =
                    static_cast<std::int64_t>(left_set.size()) + right_count;
                if (visit(weight, bmask)) return true;
            }
        }
        return false;
    }

    std::int64_t min_weight(std::uint64_t mask) {
        if (mask == 0) return 0;
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        std::int64_t best = INT64_MAX;
        for_each_branch(mask, [&](std::int64_t weight, std::uint64_t bmask) {
            const std::int64_t sub = min_weight(mask & ~bmask);
            if (weight + sub < best) best = weight + sub;
            return false;
        });
        memo.emplace(mask, best);
        return best;
    }

    // Walks the memoized table again, picking the first branch (in enumeration
    // order) that achieves the optimum at each step.
    std::vector<std::uint64_t> reconstruct(std::uint64_t full) {
        std::vector<std::uint64_t> picked;
        std::uint64_t mask = full;
        while (mask) {
            const std::int64_t target = min_weight(mask);
            std::uint64_t chosen = 0;
            for_each_branch(mask, [&](std::int64_t weight, std::uint64_t bmask) {
                if (weight + min_weight(mask & ~bmask) == target) {
                    chosen = bmask;
                    return true;
                }
                return false;
            });
            if (!chosen) throw std::logic_error("exact reconstruction lost the optimum");
            picked.push_back(chosen);
            mask &= ~chosen;
        }
        return picked;
    }
};

} // namespace

Decomposition exact_min_weight_decomposition(const BipartiteGraph& g, const ExactLimits& limits) {
    if (g.edge_count() == 0) throw std::invalid_argument("cannot decompose an edgeless graph");
    if (g.edge_count() > limits.max_edges) {
        throw limit_exceeded("exact solver limited to " + std::to_string(limits.max_edges) +
                             " edges, graph has " + std::to_string(g.edge_count()));
    }
    if (g.edge_count() > 62) {
        throw limit_exceeded("exact solver supports at most 62 edges");
    }

    ExactSearch search(g);
    const std::uint64_t full = (std::uint64_t(1) << search.edge_list.size()) - 1;
    const std::int64_t optimum = search.min_weight(full);

    Decomposition d;
    d.weight = optimum;
    for (std::uint64_t bmask : search.reconstruct(full)) {
        Biclique b;
        std::vector<bool> left_seen(static_cast<std::size_t>(g.left_size()), false);
        std::vector<bool> right_seen(static_cast<std::size_t>(g.right_size()), false);
        for (std::size_t k = 0; k < search.edge_list.size(); ++k) {
            if (!(bmask >> k & 1u)) continue;
            const auto [u, v] = search.edge_list[k];
            if (!left_seen[static_cast<std::size_t>(u)]) {
                left_seen[static_cast<std::size_t>(u)] = true;
                b.left.push_back(u);
            }
            if (!right_seen[static_cast<std::size_t>(v)]) {
                right_seen[static_cast<std::size_t>(v)] = true;
                b.right.push_back(v);
            }
        }
        d.bicliques.push_back(std::move(b));
    }
    return d;
}

} // namespace sumdilates
