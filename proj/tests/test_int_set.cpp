#include <doctest.h>

#include <stdexcept>

#include <cstdint>
#include <numeric>
#include <vector>

#include "sumdilates/errors.hpp"
#include "sumdilates/int_set.hpp"
#include "sumdilates/rng.hpp"
#include "support/oracles.hpp"

using namespace sumdilates;

namespace {

IntSet random_set(Rng& rng, std::int64_t lo, std::int64_t hi, std::size_t max_size) {
    const std::size_t size = 1 + rng.bounded(max_size);
    std::vector<std::int64_t> v;
    for (std::size_t i = 0; i < size; ++i) {
        v.push_back(lo + static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(hi - lo + 1))));
    }
    return IntSet(std::move(v));
}

} // namespace

TEST_CASE("IntSet normalizes its input") {
    const IntSet s({5, -1, 5, 3, -1});
    CHECK(s.elements() == std::vector<std::int64_t>{-1, 3, 5});
    CHECK(s.contains(3));
    CHECK(!s.contains(4));
}

TEST_CASE("sumset matches direct enumeration") {
    CHECK(sumset(IntSet({0, 1}), IntSet({0, 2})) == IntSet({0, 1, 2, 3}));
    CHECK(sumset(IntSet({5}), IntSet({0})) == IntSet({5}));
    CHECK(sumset(IntSet({0, 1, 2}), IntSet({0, 1, 2})) == IntSet({0, 1, 2, 3, 4}));
}

TEST_CASE("sumset rejects empty input and overflowing sums") {
    CHECK_THROWS_AS(sumset(IntSet(), IntSet({1})), std::invalid_argument);
    CHECK_THROWS_AS(sumset(IntSet({INT64_MAX}), IntSet({1})), arithmetic_overflow);
}

TEST_CASE("sumset obeys the cardinality cap") {
    std::vector<std::int64_t> dense(5000);
    std::iota(dense.begin(), dense.end(), 0);
    const IntSet big(std::move(dense));
    CHECK_THROWS_AS(sumset(big, big, 100), limit_exceeded);
}

TEST_CASE("sumset strategies agree with each other and the oracle") {
    Rng rng(2024);
    for (int round = 0; round < 200; ++round) {
        const IntSet a = random_set(rng, -50, 120, 12);
        const IntSet b = random_set(rng, -80, 60, 12);
        const IntSet expect = oracle::naive_sumset(a, b);
        CHECK(sumset(a, b) == expect);
        CHECK(detail::sumset_by_merge(a, b, kDefaultCardinalityCap) == expect);
        CHECK(detail::sumset_by_sort(a, b, kDefaultCardinalityCap) == expect);
        CHECK(detail::sumset_by_buffer(a, b, kDefaultCardinalityCap) == expect);
        CHECK(sumset(a, b) == sumset(b, a));
        CHECK(sumset(a, b).size() >= std::max(a.size(), b.size()));
    }
}

TEST_CASE("dilate scales and keeps cardinality") {
    CHECK(dilate(2, IntSet({0, 1, 5})) == IntSet({0, 2, 10}));
    CHECK(dilate(1, IntSet({3, 7})) == IntSet({3, 7}));
    CHECK(dilate(-1, IntSet({0, 1, 2})) == IntSet({-2, -1, 0}));
    CHECK_THROWS_AS(dilate(0, IntSet({1})), std::invalid_argument);
    CHECK_THROWS_AS(dilate(2, IntSet({INT64_MAX})), arithmetic_overflow);

    Rng rng(7);
    for (int round = 0; round < 100; ++round) {
        const IntSet a = random_set(rng, -1000, 1000, 20);
        const std::int64_t lambda = sumdilates::Rng(rng.next()).bounded(2) ? 3 : -17;
        CHECK(dilate(lambda, a).size() == a.size());
        CHECK(dilate(lambda, a) == oracle::naive_dilate(lambda, a));
    }
}

TEST_CASE("dilate_sum matches enumeration and ignores coefficient order") {
    CHECK(dilate_sum(std::vector<std::int64_t>{1, 2}, IntSet({0, 1})) == IntSet({0, 1, 2, 3}));
    CHECK(dilate_sum(std::vector<std::int64_t>{1, -1}, IntSet({0, 1})) == IntSet({-1, 0, 1}));
    CHECK(dilate_sum(std::vector<std::int64_t>{3}, IntSet({0, 1})) == IntSet({0, 3}));
    CHECK_THROWS_AS(dilate_sum(std::vector<std::int64_t>{}, IntSet({0, 1})), std::invalid_argument);

    Rng rng(99);
    for (int round = 0; round < 60; ++round) {
        const IntSet a = random_set(rng, -6, 9, 5);
        std::vector<std::int64_t> lambdas;
        const std::size_t h = 1 + rng.bounded(3);
        for (std::size_t i = 0; i < h; ++i) {
            const std::int64_t mag = 1 + static_cast<std::int64_t>(rng.bounded(6));
            lambdas.push_back(rng.bounded(2) ? mag : -mag);
        }
        const IntSet direct = oracle::naive_dilate_sum(lambdas, a);
        CHECK(dilate_sum(lambdas, a) == direct);

        std::vector<std::int64_t> shuffled = lambdas;
        for (std::size_t i = shuffled.size(); i > 1; --i) {
            std::swap(shuffled[i - 1], shuffled[rng.bounded(i)]);
        }
        CHECK(dilate_sum(shuffled, a) == direct);
    }
}

TEST_CASE("signed_fold computes kA - lA") {
    CHECK(signed_fold(2, 0, IntSet({0, 1})) == IntSet({0, 1, 2}));
    CHECK(signed_fold(1, 1, IntSet({0, 1})) == IntSet({-1, 0, 1}));
    CHECK(signed_fold(1, 0, IntSet({4})) == IntSet({4}));
    CHECK(signed_fold(0, 2, IntSet({0, 1})) == IntSet({-2, -1, 0}));
    CHECK_THROWS_AS(signed_fold(0, 0, IntSet({1, 2})), std::invalid_argument);
}

TEST_CASE("doubling constant in lowest terms") {
    CHECK(doubling_constant(IntSet({0, 1, 2})) == Rational{5, 3});
    CHECK(doubling_constant(IntSet({7})) == Rational{1, 1});
    CHECK(doubling_constant(IntSet({0, 1}), DoublingMode::difference) == Rational{3, 2});

    // |A+A| >= 2|A| - 1 for any set of >= 2 integers
    Rng rng(5);
    for (int round = 0; round < 100; ++round) {
        IntSet a = random_set(rng, -40, 40, 10);
        if (a.size() < 2) continue;
        const Rational k = doubling_constant(a);
        const Rational floor = make_rational(2 * a.size() - 1, a.size());
        CHECK(compare(k, floor) >= 0);
    }
}
