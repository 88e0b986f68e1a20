#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "sumdilates/rng.hpp"
#include "sumdilates/serialize.hpp"

using namespace sumdilates;
using ordered_json = nlohmann::ordered_json;

TEST_CASE("int set serialization is a sorted JSON array") {
    CHECK(to_json(IntSet({5, -1, 0})) == "[-1,0,5]");
    CHECK(int_set_from_json("[3,1,2]") == IntSet({1, 2, 3}));
    CHECK_THROWS_AS(int_set_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(int_set_from_json("{\"a\":1}"), std::invalid_argument);
}

TEST_CASE("gap spec round-trips") {
    const GapSpec spec{3, {1, 10}, {3, 4}};
    const GapSpec back = gap_spec_from_json(to_json(spec));
    CHECK(back.base == spec.base);
    CHECK(back.diffs == spec.diffs);
    CHECK(back.lengths == spec.lengths);
}

TEST_CASE("digit graph serialization uses 1-based coefficients, 0-based exponents") {
    const DigitGraph g = build_digit_graph(std::vector<std::int64_t>{3, 5, 6});
    const ordered_json j = ordered_json::parse(to_json(g));
    CHECK(j.at("lambdas") == ordered_json::array({3, 5, 6}));
    CHECK(j.at("r") == 2);
    CHECK(j.at("edges")[0] == ordered_json::array({1, 0}));
    CHECK(j.at("edges").size() == 6);
}

TEST_CASE("bipartite graph files round-trip") {
    Rng rng(3001);
    for (int round = 0; round < 30; ++round) {
        const int m = 1 + static_cast<int>(rng.bounded(6));
        const int n = 1 + static_cast<int>(rng.bounded(6));
        BipartiteGraph g(m, n);
        for (int u = 0; u < m; ++u) {
            for (int v = 0; v < n; ++v) {
                if (rng.bounded(2)) g.add_edge(u, v);
            }
        }
        CHECK(bipartite_graph_from_json(to_json(g)) == g);
    }
    CHECK_THROWS_AS(bipartite_graph_from_json("{\"m\":1,\"n\":1,\"edges\":[[0,0]]}"),
                    std::invalid_argument);  // left side is 1-based
}

TEST_CASE("decomposition serialization round-trips and keeps the schema") {
    const DigitGraph g = build_digit_graph(std::vector<std::int64_t>{3, 5, 6});
    const Decomposition d = decompose(g, DecomposeAlgo::star_cols);
    const ordered_json j = ordered_json::parse(to_json(d));
    CHECK(j.contains("bicliques"));
    CHECK(j.at("weight") == 9);
    CHECK(j.at("gammas") == ordered_json::array({1, 2, 4}));
    CHECK(j.at("bicliques")[0].at("left") == ordered_json::array({1, 2}));
    CHECK(j.at("bicliques")[0].at("right") == ordered_json::array({0}));

    const Decomposition back = decomposition_from_json(to_json(d));
    CHECK(back.weight == d.weight);
    CHECK(back.gammas == d.gammas);
    REQUIRE(back.bicliques.size() == d.bicliques.size());
    for (std::size_t i = 0; i < back.bicliques.size(); ++i) {
        CHECK(back.bicliques[i].left == d.bicliques[i].left);
        CHECK(back.bicliques[i].right == d.bicliques[i].right);
    }
    CHECK(validate_decomposition(g, back).ok());
}

TEST_CASE("exponent report serialization carries every bound") {
    const ExponentReport report = exponent_report(std::vector<std::int64_t>{3, 5, 6});
    const ordered_json j = ordered_json::parse(to_json(report));
    CHECK(j.at("plunnecke") == 14);
    CHECK(j.at("binbound") == 39);
    CHECK(j.at("best") == "plunnecke");
    CHECK(j.at("decompositions").contains("star-rows"));
    CHECK(j.at("decompositions").contains("exact"));
    CHECK(j.at("main_theorem").at("applicable") == false);
    CHECK(j.at("best_decomposition").contains("bicliques"));

    const std::string csv = to_csv(report);
    const auto header_cols = std::count(csv.begin(), csv.begin() + static_cast<std::ptrdiff_t>(csv.find('\n')), ',');
    const auto row_cols = std::count(csv.begin() + static_cast<std::ptrdiff_t>(csv.find('\n')), csv.end(), ',');
    CHECK(header_cols == row_cols);
    CHECK(csv.find("3 5 6") != std::string::npos);
}

TEST_CASE("trial records serialize as single JSONL lines") {
    const TrialRecord rec = check_plunnecke(IntSet({0, 1, 3}), 2, 1);
    const std::string line = to_json_line(rec);
    CHECK(line.find('\n') == std::string::npos);
    const ordered_json j = ordered_json::parse(line);
    CHECK(j.at("suite") == "plunnecke");
    CHECK(j.at("verdict") == "holds");
    CHECK(j.at("instance").at("l") == 2);
}

TEST_CASE("suite report serialization includes config and counts") {
    VerifyConfig config;
    config.universe = 10;
    config.max_set_size = 4;
    config.trials = 25;
    const SuiteReport report = run_suite(Suite::ruzsa, config);
    const ordered_json j = ordered_json::parse(to_json(report));
    CHECK(j.at("suite") == "ruzsa");
    CHECK(j.at("trials") == 25);
    CHECK(j.at("violated") == 0);
    CHECK(j.at("config").at("universe") == 10);
    CHECK(j.at("violations").is_array());
}
