#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sumdilates/bitset.hpp"

namespace sumdilates {

/// Bipartite graph with adjacency kept bitset-per-vertex on both sides.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int left_count, int right_count);

    static BipartiteGraph complete(int left_count, int right_count);

    void add_edge(int u, int v);

    int left_size() const { return m_; }
    int right_size() const { return n_; }
    std::int64_t edge_count() const { return edges_; }

    bool has_edge(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
    const Bitset& row(int u) const { return rows_[static_cast<std::size_t>(u)]; }
    const Bitset& col(int v) const { return cols_[static_cast<std::size_t>(v)]; }

    std::size_t row_degree(int u) const { return rows_[static_cast<std::size_t>(u)].count(); }
    std::size_t col_degree(int v) const { return cols_[static_cast<std::size_t>(v)].count(); }

    /// Edges in lexicographic (left, right) order.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    int m_ = 0;
    int n_ = 0;
    std::int64_t edges_ = 0;
    std::vector<Bitset> rows_;
    std::vector<Bitset> cols_;
};

} // namespace sumdilates
