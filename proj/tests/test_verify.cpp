#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdint>
#include <vector>

#include "sumdilates/serialize.hpp"
#include "sumdilates/verify.hpp"

using namespace sumdilates;

TEST_CASE("splitmix64 mixing matches the published constants") {
    // first output of the splitmix64 stream seeded with 0
    CHECK(trial_seed(0, 0) == 0xE220A8397B1DCDAFull);

    // independent inline evaluation of the finalizer
    const auto reference = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    };
    for (std::uint64_t t = 0; t < 50; ++t) {
        CHECK(trial_seed(123456789, t) == reference(123456789 + (t + 1) * 0x9E3779B97F4A7C15ull));
    }

    CHECK(trial_seed(0, 0) == trial_seed(0, 0));
    bool differs = false;
    for (std::uint64_t t = 0; t < 10; ++t) {
        if (trial_seed(0, t) != trial_seed(1, t)) differs = true;
    }
    CHECK(differs);
}

TEST_CASE("samplers are deterministic per trial seed") {
    Rng a(trial_seed(9, 4));
    Rng b(trial_seed(9, 4));
    const IntSet sa = sample_int_set(a, 40, 6);
    const IntSet sb = sample_int_set(b, 40, 6);
    CHECK(sa == sb);
    CHECK(sa.size() >= 2);
    CHECK(sa.size() <= 6);
    CHECK(sa.min() >= 0);
    CHECK(sa.max() <= 40);
    CHECK(sample_lambda(a, 7) == sample_lambda(b, 7));
    for (int i = 0; i < 200; ++i) {
        const std::int64_t lambda = sample_lambda(a, 7);
        CHECK(lambda != 0);
        CHECK(std::abs(lambda) <= 7);
    }
}

TEST_CASE("subset enumeration is lexicographic") {
    SubsetEnumerator sets(2, 2, 2);
    std::vector<std::int64_t> s;
    std::vector<std::vector<std::int64_t>> seen;
    while (sets.next(s)) seen.push_back(s);
    CHECK(seen == std::vector<std::vector<std::int64_t>>{{0, 1}, {0, 2}, {1, 2}});

    SubsetEnumerator mixed(2, 2, 3);
    seen.clear();
    while (mixed.next(s)) seen.push_back(s);
    CHECK(seen == std::vector<std::vector<std::int64_t>>{{0, 1}, {0, 1, 2}, {0, 2}, {1, 2}});
}

TEST_CASE("tuple enumeration covers every nonzero tuple once") {
    TupleEnumerator tuples(2, 2);
    std::vector<std::int64_t> t;
    std::vector<std::vector<std::int64_t>> seen;
    while (tuples.next(t)) seen.push_back(t);
    // 4 singletons + 16 pairs
    CHECK(seen.size() == 20);
    CHECK(seen.front() == std::vector<std::int64_t>{-2});
    CHECK(seen[1] == std::vector<std::int64_t>{-2, -2});
    for (const auto& tuple : seen) {
        for (std::int64_t lambda : tuple) CHECK(lambda != 0);
    }

    TupleEnumerator wide(7, 2);
    std::size_t count = 0;
    while (wide.next(t)) ++count;
    CHECK(count == 14 + 14 * 14);
}

TEST_CASE("check_dilate_bound pinned instances") {
    const IntSet a({0, 1});
    const std::vector<std::int64_t> lambdas{1, 2};
    const double bukh = bukh_exponent(lambdas);
    CHECK(bukh == doctest::Approx(38.02).epsilon(1e-3));
    const TrialRecord rec = check_dilate_bound(a, lambdas, Exponent::from_real(bukh), "bukh");
    CHECK(rec.verdict == Verdict::holds);

    const IntSet wide({0, 1, 2});
    const TrialRecord triv =
        check_dilate_bound(wide, std::vector<std::int64_t>{1}, Exponent::from_int(1), "plunnecke");
    CHECK(triv.verdict == Verdict::holds);
    CHECK(triv.slack == doctest::Approx(std::log(5.0 / 3.0)).epsilon(1e-12));

    CHECK_THROWS_AS(check_dilate_bound(IntSet({0}), lambdas, Exponent::from_int(1)),
                    std::invalid_argument);
}

TEST_CASE("per-inequality checks on pinned instances") {
    const TrialRecord ruzsa = check_ruzsa(IntSet({0, 1}), IntSet({0, 2}), IntSet({0, 1}));
    CHECK(ruzsa.verdict == Verdict::holds);  // 4 * 2 <= 3 * 4

    const TrialRecord plu = check_plunnecke(IntSet({0, 1}), 2, 0);
    CHECK(plu.verdict == Verdict::holds);  // 3 <= (3/2)^2 * 2 = 4.5

    const TrialRecord cor = check_corollary5(IntSet({0, 1}), IntSet({0, 4}), 1, 0);
    CHECK(cor.verdict == Verdict::holds);

    const TrialRecord prop = check_prop6({IntSet({0, 1})}, std::vector<std::int64_t>{1},
                                         std::vector<std::int64_t>{1});
    CHECK(prop.verdict == Verdict::holds);  // 3 <= 2 * (3/2)^3 = 6.75
    CHECK(prop.slack == doctest::Approx(std::log(6.75 / 3.0)).epsilon(1e-9));
}

TEST_CASE("suites hold on random instances") {
    VerifyConfig config;
    config.universe = 30;
    config.max_set_size = 5;
    config.trials = 400;
    config.seed = 17;
    for (Suite suite : {Suite::ruzsa, Suite::plunnecke, Suite::corollary5, Suite::prop6}) {
        const SuiteReport report = run_suite(suite, config);
        CHECK(report.trials == 400);
        CHECK(report.violated == 0);
        CHECK(report.indeterminate == 0);
        CHECK(report.holds == report.trials);
        CHECK(report.min_slack >= 0.0);
    }
}

TEST_CASE("small exhaustive dilates run is violation-free") {
    VerifyConfig config;
    config.universe = 4;
    config.max_set_size = 3;
    config.lambda_max = 3;
    config.max_h = 2;
    config.exhaustive = true;
    const SuiteReport report = run_suite(Suite::dilates, config);
    // subsets: C(5,2) + C(5,3) = 20; tuples: 6 + 36 = 42; six bounds each
    CHECK(report.trials == 20 * 42 * 6);
    CHECK(report.violated == 0);
    CHECK(report.indeterminate == 0);
}

TEST_CASE("exhaustive ruzsa on a tiny universe") {
    VerifyConfig config;
    config.universe = 2;
    config.max_set_size = 2;
    config.exhaustive = true;
    const SuiteReport report = run_suite(Suite::ruzsa, config);
    CHECK(report.trials == 27);
    CHECK(report.violated == 0);
}

TEST_CASE("suite reports reproduce byte-identically per seed") {
    VerifyConfig config;
    config.universe = 25;
    config.max_set_size = 5;
    config.trials = 120;
    config.seed = 99;

    std::vector<std::string> first_lines;
    const SuiteReport first = run_suite(Suite::prop6, config, [&](const TrialRecord& rec) {
        first_lines.push_back(to_json_line(rec));
    });
    std::vector<std::string> second_lines;
    const SuiteReport second = run_suite(Suite::prop6, config, [&](const TrialRecord& rec) {
        second_lines.push_back(to_json_line(rec));
    });
    CHECK(to_json(first) == to_json(second));
    CHECK(first_lines == second_lines);

    config.seed = 100;
    std::vector<std::string> third_lines;
    run_suite(Suite::prop6, config, [&](const TrialRecord& rec) {
        third_lines.push_back(to_json_line(rec));
    });
    CHECK(first_lines != third_lines);
}

TEST_CASE("config validation") {
    VerifyConfig config;
    config.max_set_size = 50;
    config.universe = 10;
    CHECK_THROWS_AS(run_suite(Suite::ruzsa, config), std::invalid_argument);
    VerifyConfig zero;
    zero.trials = 0;
    CHECK_THROWS_AS(run_suite(Suite::ruzsa, zero), std::invalid_argument);
    CHECK_THROWS_AS(parse_suite("nosuch"), std::invalid_argument);
}
