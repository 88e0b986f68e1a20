#include "sumdilates/decompose.hpp"

#include <cmath>
#include <stdexcept>

#include "sumdilates/checked.hpp"
#include "sumdilates/errors.hpp"

namespace sumdilates {

std::int64_t Decomposition::left_sum() const {
    std::int64_t s = 0;
    for (const auto& b : bicliques) s += static_cast<std::int64_t>(b.left.size());
    return s;
}

std::int64_t Decomposition::right_sum() const {
    std::int64_t s = 0;
    for (const auto& b : bicliques) s += static_cast<std::int64_t>(b.right.size());
    return s;
}

std::string to_string(DecomposeAlgo algo) {
    switch (algo) {
        case DecomposeAlgo::star_rows: return "star-rows";
        case DecomposeAlgo::star_cols: return "star-cols";
        case DecomposeAlgo::greedy: return "greedy";
        case DecomposeAlgo::exact: return "exact";
    }
    return "?";
}

DecomposeAlgo parse_algo(const std::string& name) {
    if (name == "star-rows") return DecomposeAlgo::star_rows;
    if (name == "star-cols") return DecomposeAlgo::star_cols;
    if (name == "greedy") return DecomposeAlgo::greedy;
    if (name == "exact") return DecomposeAlgo::exact;
    throw std::invalid_argument("unknown decomposition algorithm: " + name);
}

Decomposition star_decomposition(const BipartiteGraph& g, StarOrientation orientation) {
    if (g.edge_count() == 0) throw std::invalid_argument("cannot decompose an edgeless graph");
    Decomposition d;
    if (orientation == StarOrientation::rows) {
        for (int u = 0; u < g.left_size(); ++u) {
            const Bitset& nbrs = g.row(u);
            if (nbrs.none()) continue;
            d.bicliques.push_back(Biclique{{u}, nbrs.to_indices()});
        }
    } else {
        for (int v = 0; v < g.right_size(); ++v) {
            const Bitset& nbrs = g.col(v);
            if (nbrs.none()) continue;
            d.bicliques.push_back(Biclique{nbrs.to_indices(), {v}});
        }
    }
    for (const auto& b : d.bicliques) d.weight += b.weight();
    return d;
}

ValidationReport validate_decomposition(const BipartiteGraph& g, const Decomposition& d) {
    ValidationReport report;
    report.parts_are_bicliques = true;

    // coverage[u][v] counts how often each host edge appears across parts
    std::vector<std::vector<int>> coverage(
        static_cast<std::size_t>(g.left_size()),
        std::vector<int>(static_cast<std::size_t>(g.right_size()), 0));
    bool out_of_range = false;
    for (const auto& b : d.bicliques) {
        if (b.left.empty() || b.right.empty()) report.parts_are_bicliques = false;
        for (int u : b.left) {
            for (int v : b.right) {
                if (u < 0 || u >= g.left_size() || v < 0 || v >= g.right_size()) {
                    out_of_range = true;
                    continue;
                }
                if (!g.has_edge(u, v)) report.parts_are_bicliques = false;
                else ++coverage[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
            }
        }
        report.recomputed_weight += b.weight();
    }

    report.is_partition = !out_of_range;
    for (int u = 0; u < g.left_size() && report.is_partition; ++u) {
        for (int v = 0; v < g.right_size(); ++v) {
            const int want = g.has_edge(u, v) ? 1 : 0;
            if (coverage[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != want) {
                report.is_partition = false;
                break;
            }
        }
    }
    if (out_of_range) report.parts_are_bicliques = false;
    report.weight_matches = report.recomputed_weight == d.weight;
    return report;
}

std::vector<std::uint64_t> biclique_gammas(const DigitGraph& g, const Decomposition& d) {
    std::vector<std::uint64_t> gammas;
    gammas.reserve(d.bicliques.size());
    for (const auto& b : d.bicliques) {
        std::uint64_t gamma = 0;
        for (int v : b.right) {
            if (v < 0 || v > g.max_exp) throw std::invalid_argument("gamma exponent out of range");
            gamma += std::uint64_t(1) << v;
        }
        gammas.push_back(gamma);
    }
    return gammas;
}

ValidationReport validate_decomposition(const DigitGraph& g, const Decomposition& d) {
    ValidationReport report = validate_decomposition(g.graph, d);

    // reconstruction: sum of gamma_j over bicliques containing left vertex i
    // must give back |lambda_i|
    bool gamma_ok = true;
    const std::vector<std::uint64_t> gammas = biclique_gammas(g, d);
    if (!d.gammas.empty() && d.gammas != gammas) gamma_ok = false;
    std::vector<unsigned __int128> sums(g.expansions.size(), 0);
    for (std::size_t j = 0; j < d.bicliques.size(); ++j) {
        for (int u : d.bicliques[j].left) {
            if (u < 0 || static_cast<std::size_t>(u) >= sums.size()) {
                gamma_ok = false;
                continue;
            }
            sums[static_cast<std::size_t>(u)] += gammas[j];
        }
    }
    for (std::size_t i = 0; i < sums.size(); ++i) {
        if (sums[i] != static_cast<unsigned __int128>(magnitude(g.expansions[i].lambda))) {
            gamma_ok = false;
        }
    }
    report.gamma_reconstruction = gamma_ok;
    return report;
}

Decomposition decompose(const DigitGraph& g, DecomposeAlgo algo, const GreedyParams& greedy,
                        const ExactLimits& exact) {
    Decomposition d;
    switch (algo) {
        case DecomposeAlgo::star_rows: d = star_decomposition(g.graph, StarOrientation::rows); break;
        case DecomposeAlgo::star_cols: d = star_decomposition(g.graph, StarOrientation::columns); break;
        case DecomposeAlgo::greedy: d = greedy_decomposition(g.graph, greedy); break;
        case DecomposeAlgo::exact: d = exact_min_weight_decomposition(g.graph, exact); break;
    }
    d.gammas = biclique_gammas(g, d);
    return d;
}

TuzaBudget tuza_budget(std::int64_t m, std::int64_t n) {
    if (m < n) std::swap(m, n);
    if (n < 1) throw std::invalid_argument("tuza_budget requires positive side sizes");
    if (m < 2) throw std::invalid_argument("tuza_budget requires the larger side to be >= 2");
    const double log_m = std::log(static_cast<double>(m));
    TuzaBudget out;
    out.budget = 3.0 * static_cast<double>(m) * static_cast<double>(n) / log_m;
    out.applicable = static_cast<double>(n) >= 10.0 * log_m * log_m;
    return out;
}

} // namespace sumdilates
