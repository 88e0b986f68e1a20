#include <doctest.h>

#include <stdexcept>

#include "sumdilates/big_uint.hpp"
#include "sumdilates/errors.hpp"
#include "sumdilates/gap.hpp"

using namespace sumdilates;

TEST_CASE("gap_generate enumerates progressions and flags properness") {
    const GapResult wide = gap_generate(GapSpec{0, {1, 10}, {3, 3}});
    CHECK(wide.set == IntSet({0, 1, 2, 10, 11, 12, 20, 21, 22}));
    CHECK(wide.proper);

    const GapResult collide = gap_generate(GapSpec{0, {1, 2}, {3, 3}});
    CHECK(collide.set == IntSet({0, 1, 2, 3, 4, 5, 6}));
    CHECK(collide.set.size() == 7);
    CHECK(!collide.proper);

    const GapResult point = gap_generate(GapSpec{5, {1}, {1}});
    CHECK(point.set == IntSet({5}));
    CHECK(point.proper);
}

TEST_CASE("gap_generate validates its spec") {
    CHECK_THROWS_AS(gap_generate(GapSpec{0, {}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(gap_generate(GapSpec{0, {1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(gap_generate(GapSpec{0, {1}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS(gap_generate(GapSpec{0, {1, 1}, {10000, 10000}}), limit_exceeded);
    CHECK_THROWS_AS(gap_generate(GapSpec{INT64_MAX, {1}, {2}}), arithmetic_overflow);
}

TEST_CASE("proper progressions have doubling at most 2^k") {
    // d2 > (L1 - 1) d1 forces properness for k = 2
    for (std::int64_t d1 = 1; d1 <= 3; ++d1) {
        for (std::int64_t l1 = 2; l1 <= 4; ++l1) {
            for (std::int64_t l2 = 2; l2 <= 4; ++l2) {
                for (std::int64_t extra = 1; extra <= 3; ++extra) {
                    const std::int64_t d2 = (l1 - 1) * d1 + extra;
                    const GapResult gap = gap_generate(GapSpec{-7, {d1, d2}, {l1, l2}});
                    REQUIRE(gap.proper);
                    const Rational k = doubling_constant(gap.set);
                    BigUint rhs = BigUint::pow(2, 2);
                    rhs *= k.den;
                    CHECK(BigUint::compare(BigUint::from(k.num), rhs) <= 0);
                }
            }
        }
    }
}

TEST_CASE("proper progressions obey the dilate-sum bound") {
    const GapResult gap = gap_generate(GapSpec{0, {1, 10}, {3, 3}});
    REQUIRE(gap.proper);
    const std::vector<std::int64_t> lambdas{2, 3};
    const IntSet spread = dilate_sum(lambdas, gap.set);
    // |2P + 3P| <= (2+3)^2 |P| = 225
    CHECK(spread.size() <= 25 * gap.set.size());
}
