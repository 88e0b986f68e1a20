#include "sumdilates/bipartite_graph.hpp"

#include <stdexcept>

namespace sumdilates {

BipartiteGraph::BipartiteGraph(int left_count, int right_count)
    : m_(left_count), n_(right_count) {
    if (left_count < 0 || right_count < 0) {
        throw std::invalid_argument("bipartite graph sides must be nonnegative");
    }
    rows_.assign(static_cast<std::size_t>(m_), Bitset(static_cast<std::size_t>(n_)));
    cols_.assign(static_cast<std::size_t>(n_), Bitset(static_cast<std::size_t>(m_)));
}

BipartiteGraph BipartiteGraph::complete(int left_count, int right_count) {
    BipartiteGraph g(left_count, right_count);
    for (int u = 0; u < left_count; ++u) {
        for (int v = 0; v < right_count; ++v) g.add_edge(u, v);
    }
    return g;
}

void BipartiteGraph::add_edge(int u, int v) {
    if (u < 0 || u >= m_ || v < 0 || v >= n_) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (has_edge(u, v)) return;
    rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    cols_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    ++edges_;
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < m_; ++u) {
        rows_[static_cast<std::size_t>(u)].for_each_set(
            [&](std::size_t v) { out.emplace_back(u, static_cast<int>(v)); });
    }
    return out;
}

} // namespace sumdilates
