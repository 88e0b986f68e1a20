#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sumdilates/exponents.hpp"
#include "sumdilates/rng.hpp"

using namespace sumdilates;

namespace {

std::vector<std::int64_t> repeated(std::int64_t value, int times) {
    return std::vector<std::int64_t>(static_cast<std::size_t>(times), value);
}

std::vector<std::int64_t> random_tuple(Rng& rng, std::size_t max_h, std::int64_t max_mag) {
    std::vector<std::int64_t> lambdas;
    const std::size_t h = 1 + rng.bounded(max_h);
    for (std::size_t i = 0; i < h; ++i) {
        const std::int64_t mag = 1 + static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(max_mag)));
        lambdas.push_back(rng.bounded(2) ? mag : -mag);
    }
    return lambdas;
}

} // namespace

TEST_CASE("plunnecke exponent is the magnitude sum") {
    CHECK(plunnecke_exponent(std::vector<std::int64_t>{3, 5, 6}) == 14);
    CHECK(plunnecke_exponent(std::vector<std::int64_t>{1, 1}) == 2);
    CHECK(plunnecke_exponent(std::vector<std::int64_t>{-7, 2}) == 9);
    CHECK_THROWS_AS(plunnecke_exponent(std::vector<std::int64_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(plunnecke_exponent(std::vector<std::int64_t>{0}), std::invalid_argument);
}

TEST_CASE("bukh exponent evaluates 7 + 12 sum log2(1+|lambda|)") {
    CHECK(bukh_exponent(std::vector<std::int64_t>{1}) == doctest::Approx(19.0).epsilon(1e-12));
    const double direct = 7.0 + 12.0 * (std::log2(4.0) + std::log2(6.0) + std::log2(7.0));
    CHECK(bukh_exponent(std::vector<std::int64_t>{3, 5, 6}) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(bukh_exponent(std::vector<std::int64_t>{3, 5, 6}) == doctest::Approx(95.71).epsilon(1e-4));
    CHECK(bukh_exponent(repeated(15, 16)) == doctest::Approx(775.0).epsilon(1e-12));
}

TEST_CASE("binbound exponent evaluates 7 + 10r + 2*digit sum") {
    CHECK(binbound_exponent(std::vector<std::int64_t>{3, 5, 6}) == 39);
    CHECK(binbound_exponent(std::vector<std::int64_t>{1}) == 9);
    CHECK(binbound_exponent(std::vector<std::int64_t>{1 << 15}) == 159);
}

TEST_CASE("decomposition exponent adds twice the weight") {
    const std::vector<std::int64_t> lambdas{3, 5, 6};
    const DigitGraph g = build_digit_graph(lambdas);
    const Decomposition rows = decompose(g, DecomposeAlgo::star_rows);
    CHECK(decomposition_exponent(lambdas, rows) == 45);

    const Decomposition ones = decompose(build_digit_graph(std::vector<std::int64_t>{1}),
                                         DecomposeAlgo::star_rows);
    CHECK(decomposition_exponent(std::vector<std::int64_t>{1}, ones) == 11);

    // sixteen copies of 2^16 - 1: K_{16,16}, single biclique of weight 32
    const std::vector<std::int64_t> big = repeated(65535, 16);
    const Decomposition greedy = decompose(build_digit_graph(big), DecomposeAlgo::greedy);
    CHECK(greedy.weight == 32);
    CHECK(decomposition_exponent(big, greedy) == 221);

    // a decomposition of another tuple must be rejected
    CHECK_THROWS_AS(decomposition_exponent(std::vector<std::int64_t>{3, 5}, rows),
                    std::invalid_argument);
}

TEST_CASE("main theorem bound value and applicability") {
    const MainTheoremBound small = main_theorem_exponent(2, 3);
    CHECK(small.value == doctest::Approx(7.0 * 2 * 3 / std::log(5.0)).epsilon(1e-12));
    CHECK(small.value == doctest::Approx(26.10).epsilon(1e-3));
    CHECK(!small.applicable);

    const MainTheoremBound large = main_theorem_exponent(999, 1000);
    CHECK(large.value == doctest::Approx(7.0 * 999.0 * 1000.0 / std::log(1999.0)).epsilon(1e-12));
    CHECK(large.applicable);

    const MainTheoremBound mid = main_theorem_exponent(15, 16);
    CHECK(mid.value == doctest::Approx(489.2).epsilon(1e-3));
    CHECK(!mid.applicable);

    CHECK_THROWS_AS(main_theorem_exponent(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(main_theorem_exponent(0, 5), std::invalid_argument);
}

TEST_CASE("exponent_report picks the smallest applicable bound") {
    const ExponentReport small = exponent_report(std::vector<std::int64_t>{3, 5, 6});
    CHECK(small.plunnecke == 14);
    CHECK(small.binbound == 39);
    CHECK(small.best_label == "plunnecke");
    CHECK(small.best.exact == 14);
    for (const auto& d : small.decompositions) CHECK(d.exponent == 45);
    REQUIRE(small.main_theorem.has_value());
    CHECK(!small.main_theorem->applicable);

    const ExponentReport unit = exponent_report(std::vector<std::int64_t>{1});
    CHECK(unit.best_label == "plunnecke");
    CHECK(unit.best.exact == 1);
    CHECK(unit.binbound == 9);
    CHECK(!unit.main_theorem.has_value());

    const ExponentReport big = exponent_report(repeated(65535, 16));
    CHECK(big.plunnecke == 1048560);
    CHECK(big.bukh == doctest::Approx(3079.0).epsilon(1e-9));
    CHECK(big.binbound == 669);
    CHECK(big.best_label == "decomposition/greedy");
    CHECK(big.best.exact == 221);
    CHECK(big.best_decomposition.weight == 32);
}

TEST_CASE("row-star decomposition exponent equals binbound plus 2h'") {
    Rng rng(808);
    for (int round = 0; round < 40; ++round) {
        const std::vector<std::int64_t> lambdas = random_tuple(rng, 6, 500);
        const DigitGraph g = build_digit_graph(lambdas);
        const Decomposition rows = decompose(g, DecomposeAlgo::star_rows);
        const std::int64_t nonisolated = g.h();  // every coefficient has at least one digit
        CHECK(decomposition_exponent(lambdas, rows) == binbound_exponent(lambdas) + 2 * nonisolated);
    }
}

TEST_CASE("report best is invariant under permutation and sign flips") {
    Rng rng(909);
    for (int round = 0; round < 25; ++round) {
        std::vector<std::int64_t> lambdas = random_tuple(rng, 5, 200);
        const ExponentReport base = exponent_report(lambdas);

        std::vector<std::int64_t> mutated = lambdas;
        for (std::size_t i = mutated.size(); i > 1; --i) {
            std::swap(mutated[i - 1], mutated[rng.bounded(i)]);
        }
        for (auto& lambda : mutated) {
            if (rng.bounded(2)) lambda = -lambda;
        }
        const ExponentReport twisted = exponent_report(mutated);
        CHECK(base.best_label == twisted.best_label);
        CHECK(base.best.value == doctest::Approx(twisted.best.value).epsilon(1e-12));
        CHECK(base.binbound == twisted.binbound);
        CHECK(base.plunnecke == twisted.plunnecke);
    }
}

TEST_CASE("lower-weight decompositions never increase the exponent") {
    Rng rng(311);
    for (int round = 0; round < 25; ++round) {
        const std::vector<std::int64_t> lambdas = random_tuple(rng, 4, 60);
        const ExponentReport report = exponent_report(lambdas);
        // entries are (weight, exponent) pairs from four solvers
        for (const auto& a : report.decompositions) {
            for (const auto& b : report.decompositions) {
                if (a.weight <= b.weight) CHECK(a.exponent <= b.exponent);
                CHECK(a.sharp_exponent <= a.exponent);
            }
        }
        // the exact solver, when present, is never beaten
        for (const auto& entry : report.decompositions) {
            if (entry.label != "exact") continue;
            for (const auto& other : report.decompositions) {
                CHECK(entry.exponent <= other.exponent);
            }
        }
    }
}
