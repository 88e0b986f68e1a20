#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "sumdilates/decompose.hpp"
#include "sumdilates/errors.hpp"

namespace sumdilates {

namespace {

// Candidate biclique during the beam search: seed set S of left vertices plus
// the common residual neighborhood C of S. Scored by edges covered per unit
// weight, |S||C| / (|S|+|C|), compared as exact fractions.
struct Candidate {
    std::vector<int> seeds;
    Bitset common;
    std::int64_t common_count = 0;
};

std::int64_t score_num(const Candidate& c) {
    return static_cast<std::int64_t>(c.seeds.size()) * c.common_count;
}
std::int64_t score_den(const Candidate& c) {
    return static_cast<std::int64_t>(c.seeds.size()) + c.common_count;
}

// score desc, then lexicographically smaller seed set
bool candidate_before(const Candidate& a, const Candidate& b) {
    const std::int64_t lhs = score_num(a) * score_den(b);
    const std::int64_t rhs = score_num(b) * score_den(a);
    if (lhs != rhs) return lhs > rhs;
    return a.seeds < b.seeds;
}

struct Extraction {
    std::vector<int> left;
    Bitset left_bits;
    Bitset right_bits;
    std::int64_t left_count = 0;
    std::int64_t right_count = 0;
};

bool extraction_before(const Extraction& a, const Extraction& b) {
    const std::int64_t lhs = a.left_count * a.right_count * (b.left_count + b.right_count);
    const std::int64_t rhs = b.left_count * b.right_count * (a.left_count + a.right_count);
    if (lhs != rhs) return lhs > rhs;
    const int cl = set_compare(a.left_bits, b.left_bits);
    if (cl != 0) return cl < 0;
    return set_compare(a.right_bits, b.right_bits) < 0;
}

// Bounded best-of list; rejects most offers with a single comparison.
class Shortlist {
public:
    explicit Shortlist(std::size_t cap) : cap_(cap) {}

    void offer(const Candidate& c) {
        if (entries_.size() == cap_ && !candidate_before(c, entries_.back())) return;
        auto pos = std::upper_bound(entries_.begin(), entries_.end(), c, candidate_before);
        entries_.insert(pos, c);
        if (entries_.size() > cap_) entries_.pop_back();
    }

    const std::vector<Candidate>& entries() const { return entries_; }

private:
    std::size_t cap_;
    std::vector<Candidate> entries_;
};

} // namespace

Decomposition greedy_decomposition(const BipartiteGraph& g, const GreedyParams& params) {
    if (g.edge_count() == 0) throw std::invalid_argument("cannot decompose an edgeless graph");
    if (params.max_q < 1) throw std::invalid_argument("greedy max_q must be >= 1");

    const auto start_time = std::chrono::steady_clock::now();
    const auto check_budget = [&] {
        if (params.time_budget_ms < 0) return;
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start_time)
                                 .count();
        if (elapsed >= params.time_budget_ms) {
            throw limit_exceeded("greedy decomposition time budget exhausted");
        }
    };

    const int m = g.left_size();
    std::vector<Bitset> rows;
    rows.reserve(static_cast<std::size_t>(m));
    for (int u = 0; u < m; ++u) rows.push_back(g.row(u));
    std::vector<std::int64_t> row_deg(static_cast<std::size_t>(m));
    for (int u = 0; u < m; ++u) {
        row_deg[static_cast<std::size_t>(u)] = static_cast<std::int64_t>(rows[static_cast<std::size_t>(u)].count());
    }
    std::int64_t edges_left = g.edge_count();

    const std::size_t beam_width = static_cast<std::size_t>(std::max(params.beam_width, 1));

    Decomposition result;
    while (edges_left > 0) {
        check_budget();

        Shortlist shortlist(8);

        // level 1: every nonisolated left vertex, i.e. descending-degree stars
        std::vector<Candidate> level;
        for (int u = 0; u < m; ++u) {
            const std::int64_t deg = row_deg[static_cast<std::size_t>(u)];
            if (deg == 0) continue;
            level.push_back(Candidate{{u}, rows[static_cast<std::size_t>(u)], deg});
        }
        std::sort(level.begin(), level.end(), candidate_before);
        if (level.size() > beam_width) level.resize(beam_width);
        for (const auto& c : level) shortlist.offer(c);

        for (int depth = 2; depth <= params.max_q && !level.empty(); ++depth) {
            // enumerate children cheaply as (parent, extension, |C'|); only
            // the beam survivors are materialized
            struct ChildRef {
                int parent;
                int u;
                std::int64_t cnt;
            };
            std::vector<ChildRef> children;
            for (std::size_t p = 0; p < level.size(); ++p) {
                const Candidate& c = level[p];
                for (int u = 0; u < m; ++u) {
                    if (row_deg[static_cast<std::size_t>(u)] == 0) continue;
                    if (std::binary_search(c.seeds.begin(), c.seeds.end(), u)) continue;
                    const std::int64_t cnt = static_cast<std::int64_t>(
                        Bitset::and_count(c.common, rows[static_cast<std::size_t>(u)]));
                    if (cnt == 0) continue;
                    children.push_back(ChildRef{static_cast<int>(p), u, cnt});
                }
            }
            if (children.empty()) break;
            // fixed depth makes the density score monotone in |C'|
            std::sort(children.begin(), children.end(), [](const ChildRef& a, const ChildRef& b) {
                if (a.cnt != b.cnt) return a.cnt > b.cnt;
                if (a.parent != b.parent) return a.parent < b.parent;
                return a.u < b.u;
            });

            std::vector<Candidate> next;
            std::set<std::vector<int>> seen;
            for (const auto& ch : children) {
                if (next.size() >= beam_width) break;
                const Candidate& parent = level[static_cast<std::size_t>(ch.parent)];
                std::vector<int> seeds = parent.seeds;
                seeds.insert(std::upper_bound(seeds.begin(), seeds.end(), ch.u), ch.u);
                if (!seen.insert(seeds).second) continue;
                Candidate c{std::move(seeds), parent.common & rows[static_cast<std::size_t>(ch.u)], ch.cnt};
                shortlist.offer(c);
                next.push_back(std::move(c));
            }
            level.swap(next);
        }

        // close each shortlisted candidate: all left vertices whose residual
        // neighborhood contains the full common set, then pick the densest
        // closed biclique
        Extraction best;
        bool have_best = false;
        for (const auto& c : shortlist.entries()) {
            Extraction e;
            e.right_bits = c.common;
            e.right_count = c.common_count;
            e.left_bits = Bitset(static_cast<std::size_t>(m));
            for (int u = 0; u < m; ++u) {
                if (row_deg[static_cast<std::size_t>(u)] < e.right_count) continue;
                if (c.common.is_subset_of(rows[static_cast<std::size_t>(u)])) {
                    e.left.push_back(u);
                    e.left_bits.set(static_cast<std::size_t>(u));
                }
            }
            e.left_count = static_cast<std::int64_t>(e.left.size());
            if (!have_best || extraction_before(e, best)) {
                best = std::move(e);
                have_best = true;
            }
        }
        if (!have_best) {
            throw std::logic_error("greedy found no candidate despite remaining edges");
        }

        for (int u : best.left) {
            rows[static_cast<std::size_t>(u)].subtract(best.right_bits);
            row_deg[static_cast<std::size_t>(u)] -= best.right_count;
        }
        edges_left -= best.left_count * best.right_count;

        Biclique b;
        b.left = best.left;
        b.right = best.right_bits.to_indices();
        result.weight += b.weight();
        result.bicliques.push_back(std::move(b));
    }

    // contract: never heavier than either star baseline
    Decomposition rows_baseline = star_decomposition(g, StarOrientation::rows);
    Decomposition cols_baseline = star_decomposition(g, StarOrientation::columns);
    if (result.weight > rows_baseline.weight || result.weight > cols_baseline.weight) {
        return rows_baseline.weight <= cols_baseline.weight ? rows_baseline : cols_baseline;
    }
    return result;
}

} // namespace sumdilates
