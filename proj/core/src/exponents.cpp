#include "sumdilates/exponents.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "sumdilates/checked.hpp"
#include "sumdilates/errors.hpp"

namespace sumdilates {

bool exponent_less(const Exponent& a, const Exponent& b) {
    if (a.exact && b.exact) return *a.exact < *b.exact;
    return a.value < b.value;
}

std::int64_t plunnecke_exponent(std::span<const std::int64_t> lambdas) {
    if (lambdas.empty()) throw std::invalid_argument("empty coefficient tuple");
    std::uint64_t sum = 0;
    for (std::int64_t lambda : lambdas) {
        if (lambda == 0) throw std::invalid_argument("coefficient tuple contains a zero");
        const std::uint64_t mag = magnitude(lambda);
        if (sum + mag < sum) throw arithmetic_overflow("coefficient magnitudes overflow");
        sum += mag;
    }
    if (sum > static_cast<std::uint64_t>(INT64_MAX)) {
        throw arithmetic_overflow("coefficient magnitudes overflow");
    }
    return static_cast<std::int64_t>(sum);
}

double bukh_exponent(std::span<const std::int64_t> lambdas) {
    if (lambdas.empty()) throw std::invalid_argument("empty coefficient tuple");
    double sum = 0.0;
    for (std::int64_t lambda : lambdas) {
        if (lambda == 0) throw std::invalid_argument("coefficient tuple contains a zero");
        sum += std::log2(1.0 + static_cast<double>(magnitude(lambda)));
    }
    return 7.0 + 12.0 * sum;
}

std::int64_t binbound_exponent(std::span<const std::int64_t> lambdas) {
    const int r = max_exponent(lambdas);
    std::int64_t digit_sum = 0;
    for (std::int64_t lambda : lambdas) digit_sum += std::popcount(magnitude(lambda));
    return 7 + 10 * static_cast<std::int64_t>(r) + 2 * digit_sum;
}

std::int64_t decomposition_exponent(std::span<const std::int64_t> lambdas, const Decomposition& d) {
    const DigitGraph g = build_digit_graph(lambdas);
    if (!validate_decomposition(g, d).ok()) {
        throw std::invalid_argument("decomposition does not partition this tuple's digit graph");
    }
    return 7 + 10 * static_cast<std::int64_t>(g.max_exp) + 2 * d.weight;
}

MainTheoremBound main_theorem_exponent(std::int64_t r, std::int64_t h) {
    if (r < 1 || h < 1 || r + h < 3) {
        throw std::invalid_argument("main theorem bound requires r >= 1, h >= 1, r + h >= 3");
    }
    MainTheoremBound out;
    out.value = 7.0 * static_cast<double>(r) * static_cast<double>(h) /
                std::log(static_cast<double>(r + h));
    const double small = static_cast<double>(std::min(r + 1, h));
    const double large = static_cast<double>(std::max(r + 1, h));
    out.applicable = small >= 10.0 * std::log(large) * std::log(large);
    return out;
}

ExponentReport exponent_report(std::span<const std::int64_t> lambdas, const ReportParams& params) {
    ExponentReport report;
    report.lambdas.assign(lambdas.begin(), lambdas.end());
    const DigitGraph graph = build_digit_graph(lambdas);
    report.r = graph.max_exp;
    report.h = graph.h();
    report.plunnecke = plunnecke_exponent(lambdas);
    report.bukh = bukh_exponent(lambdas);
    report.binbound = binbound_exponent(lambdas);

    const std::int64_t base = 7 + 10 * report.r;
    const auto add_entry = [&](DecomposeAlgo algo) {
        Decomposition d = decompose(graph, algo, params.greedy, params.exact);
        DecompositionBound entry;
        entry.label = to_string(algo);
        entry.weight = d.weight;
        entry.q = d.q();
        entry.exponent = base + 2 * d.weight;
        entry.sharp_exponent = base + d.q() + d.left_sum() + 2 * d.right_sum();
        if (report.best_decomposition_label.empty() || d.weight < report.best_decomposition.weight) {
            report.best_decomposition_label = entry.label;
            report.best_decomposition = std::move(d);
        }
        report.decompositions.push_back(std::move(entry));
    };
    add_entry(DecomposeAlgo::star_rows);
    add_entry(DecomposeAlgo::star_cols);
    add_entry(DecomposeAlgo::greedy);
    if (graph.graph.edge_count() <= params.exact.max_edges) {
        add_entry(DecomposeAlgo::exact);
    }

    if (report.r >= 1 && report.r + report.h >= 3) {
        report.main_theorem = main_theorem_exponent(report.r, report.h);
    }

    report.best_label = "plunnecke";
    report.best = Exponent::from_int(report.plunnecke);
    const auto consider = [&](const std::string& label, const Exponent& e) {
        if (exponent_less(e, report.best)) {
            report.best_label = label;
            report.best = e;
        }
    };
    consider("bukh", Exponent::from_real(report.bukh));
    consider("binbound", Exponent::from_int(report.binbound));
    for (const auto& entry : report.decompositions) {
        consider("decomposition/" + entry.label, Exponent::from_int(entry.exponent));
    }
    if (report.main_theorem && report.main_theorem->applicable) {
        consider("main", Exponent::from_real(report.main_theorem->value));
    }
    return report;
}

} // namespace sumdilates
