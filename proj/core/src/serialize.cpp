#include "sumdilates/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sumdilates {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
    auto j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return j;
}

// Serialized form: left/coefficient indices 1-based, right/exponent 0-based.
ordered_json biclique_to_json(const Biclique& b) {
    ordered_json j;
    ordered_json left = ordered_json::array();
    for (int u : b.left) left.push_back(u + 1);
    ordered_json right = ordered_json::array();
    for (int v : b.right) right.push_back(v);
    j["left"] = std::move(left);
    j["right"] = std::move(right);
    return j;
}

ordered_json decomposition_to_json(const Decomposition& d) {
    ordered_json j;
    ordered_json parts = ordered_json::array();
    for (const auto& b : d.bicliques) parts.push_back(biclique_to_json(b));
    j["bicliques"] = std::move(parts);
    j["weight"] = d.weight;
    j["gammas"] = ordered_json(d.gammas);
    return j;
}

ordered_json main_theorem_to_json(const MainTheoremBound& m) {
    ordered_json j;
    j["value"] = m.value;
    j["applicable"] = m.applicable;
    return j;
}

ordered_json report_to_json(const ExponentReport& r) {
    ordered_json j;
    j["lambdas"] = ordered_json(r.lambdas);
    j["r"] = r.r;
    j["h"] = r.h;
    j["plunnecke"] = r.plunnecke;
    j["bukh"] = r.bukh;
    j["binbound"] = r.binbound;
    ordered_json decs = ordered_json::object();
    for (const auto& d : r.decompositions) {
        ordered_json entry;
        entry["weight"] = d.weight;
        entry["q"] = d.q;
        entry["exponent"] = d.exponent;
        entry["sharp_exponent"] = d.sharp_exponent;
        decs[d.label] = std::move(entry);
    }
    j["decompositions"] = std::move(decs);
    j["main_theorem"] = r.main_theorem ? main_theorem_to_json(*r.main_theorem) : ordered_json(nullptr);
    j["best"] = r.best_label;
    j["best_exponent"] = r.best.value;
    ordered_json winner = decomposition_to_json(r.best_decomposition);
    winner["label"] = r.best_decomposition_label;
    j["best_decomposition"] = std::move(winner);
    return j;
}

ordered_json trial_to_json(const TrialRecord& r) {
    ordered_json j;
    j["suite"] = r.suite;
    j["instance"] = parse(r.instance_json);
    j["lhs_log"] = r.lhs_log;
    j["rhs_log"] = r.rhs_log;
    j["slack"] = r.slack;
    j["verdict"] = to_string(r.verdict);
    j["seed"] = r.seed;
    return j;
}

ordered_json config_to_json(const VerifyConfig& c) {
    ordered_json j;
    j["universe"] = c.universe;
    j["max_set_size"] = c.max_set_size;
    j["max_h"] = c.max_h;
    j["lambda_max"] = c.lambda_max;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["exhaustive"] = c.exhaustive;
    j["max_fold"] = c.max_fold;
    j["max_p_sum"] = c.max_p_sum;
    j["max_sets"] = c.max_sets;
    j["tolerance"] = c.tolerance;
    j["cardinality_cap"] = c.cardinality_cap;
    return j;
}

} // namespace

std::string to_json(const IntSet& s) { return ordered_json(s.elements()).dump(); }

IntSet int_set_from_json(const std::string& text) {
    const ordered_json j = parse(text);
    if (!j.is_array()) throw std::invalid_argument("integer set JSON must be an array");
    return IntSet(j.get<std::vector<std::int64_t>>());
}

std::string to_json(const GapSpec& s) {
    ordered_json j;
    j["base"] = s.base;
    j["diffs"] = ordered_json(s.diffs);
    j["lengths"] = ordered_json(s.lengths);
    return j.dump();
}

GapSpec gap_spec_from_json(const std::string& text) {
    const ordered_json j = parse(text);
    GapSpec s;
    s.base = j.at("base").get<std::int64_t>();
    s.diffs = j.at("diffs").get<std::vector<std::int64_t>>();
    s.lengths = j.at("lengths").get<std::vector<std::int64_t>>();
    return s;
}

std::string to_json(const DigitGraph& g) {
    ordered_json j;
    std::vector<std::int64_t> lambdas;
    lambdas.reserve(g.expansions.size());
    for (const auto& e : g.expansions) lambdas.push_back(e.lambda);
    j["lambdas"] = ordered_json(lambdas);
    j["r"] = g.max_exp;
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.graph.edges()) edges.push_back(ordered_json::array({u + 1, v}));
    j["edges"] = std::move(edges);
    return j.dump();
}

std::string to_json(const BipartiteGraph& g) {
    ordered_json j;
    j["m"] = g.left_size();
    j["n"] = g.right_size();
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(ordered_json::array({u + 1, v}));
    j["edges"] = std::move(edges);
    return j.dump();
}

BipartiteGraph bipartite_graph_from_json(const std::string& text) {
    const ordered_json j = parse(text);
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    BipartiteGraph g(m, n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        const int u = e[0].get<int>();
        const int v = e[1].get<int>();
        if (u < 1 || u > m || v < 0 || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range (left is 1-based, right 0-based)");
        }
        g.add_edge(u - 1, v);
    }
    return g;
}

std::string to_json(const Decomposition& d) { return decomposition_to_json(d).dump(); }

Decomposition decomposition_from_json(const std::string& text) {
    const ordered_json j = parse(text);
    Decomposition d;
    for (const auto& part : j.at("bicliques")) {
        Biclique b;
        for (const auto& u : part.at("left")) b.left.push_back(u.get<int>() - 1);
        for (const auto& v : part.at("right")) b.right.push_back(v.get<int>());
        d.bicliques.push_back(std::move(b));
    }
    d.weight = j.at("weight").get<std::int64_t>();
    if (j.contains("gammas")) d.gammas = j.at("gammas").get<std::vector<std::uint64_t>>();
    return d;
}

std::string to_json(const ExponentReport& r) { return report_to_json(r).dump(2); }

std::string to_csv(const ExponentReport& r) {
    std::ostringstream lambdas;
    for (std::size_t i = 0; i < r.lambdas.size(); ++i) {
        if (i) lambdas << ' ';
        lambdas << r.lambdas[i];
    }
    const auto find_entry = [&](const std::string& label) -> const DecompositionBound* {
        for (const auto& d : r.decompositions) {
            if (d.label == label) return &d;
        }
        return nullptr;
    };

    std::ostringstream out;
    out << "lambdas,r,h,plunnecke,bukh,binbound,star_rows,star_cols,greedy,exact,"
           "main_value,main_applicable,best,best_weight\n";
    out << lambdas.str() << ',' << r.r << ',' << r.h << ',' << r.plunnecke << ','
        << ordered_json(r.bukh).dump() << ',' << r.binbound;
    for (const char* label : {"star-rows", "star-cols", "greedy", "exact"}) {
        out << ',';
        if (const auto* e = find_entry(label)) out << e->exponent;
    }
    out << ',';
    if (r.main_theorem) out << ordered_json(r.main_theorem->value).dump();
    out << ',';
    if (r.main_theorem) out << (r.main_theorem->applicable ? "true" : "false");
    out << ',' << r.best_label << ',' << r.best_decomposition.weight << '\n';
    return out.str();
}

std::string to_json_line(const TrialRecord& r) { return trial_to_json(r).dump(); }

std::string to_json(const SuiteReport& r) {
    ordered_json j;
    j["suite"] = to_string(r.suite);
    j["config"] = config_to_json(r.config);
    j["trials"] = r.trials;
    j["holds"] = r.holds;
    j["violated"] = r.violated;
    j["indeterminate"] = r.indeterminate;
    j["min_slack"] = r.min_slack;
    ordered_json violations = ordered_json::array();
    for (const auto& v : r.violations) violations.push_back(trial_to_json(v));
    j["violations"] = std::move(violations);
    return j.dump(2);
}

} // namespace sumdilates
