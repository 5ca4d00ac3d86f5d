// Copyright 2026 the ramatch authors.
// License: Apache License 2.0

#include <catch2/catch_amalgamated.hpp>

#include "ramatch/bounds.hpp"

using namespace ramatch;

TEST_CASE("upper bound coefficients") {
    SECTION("t = 2 gives exactly n") {
        const UpperBound u = theorem1_upper(2, 5);
        REQUIRE(u.exact);
        CHECK(u.value == Rational(5, 1));
    }
    SECTION("t = 3 at n = 6 gives 15/2") {
        const UpperBound u = theorem1_upper(3, 6);
        REQUIRE(u.exact);
        CHECK(u.value == Rational(15, 2));
        CHECK(u.value.ceil_value() == 8);
    }
    SECTION("t = 4 at n = 10 gives 16") {
        const UpperBound u = theorem1_upper(4, 10);
        REQUIRE(u.exact);
        CHECK(u.value == Rational(16, 1));
    }
    SECTION("t = 6 stays exact because the log term is integral") {
        const UpperBound u = theorem1_upper(6, 7);
        REQUIRE(u.exact);
        CHECK(u.value == Rational(17, 1));
    }
    SECTION("t = 5 is irrational and flagged") {
        const UpperBound u = theorem1_upper(5, 6);
        CHECK_FALSE(u.exact);
        CHECK(u.approx == Catch::Approx((9.0 + 2 * std::log2(3.0)) / 6.0 * 6).epsilon(1e-12));
        CHECK_FALSE(u.note.empty());
    }
    CHECK_THROWS_AS(theorem1_upper(1, 5), std::invalid_argument);
}

TEST_CASE("lower bound formula") {
    CHECK(theorem3_lower(2, {2, 2}, 5) == 4);
    for (int r = 1; r <= 100; ++r) {
        CHECK(theorem3_lower(2, {r, r}, 3 * r - 1) == 3 * r - 2);
        CHECK(theorem3_lower(3, {r, r, r}, 4 * r - 2) == 5 * r - 4);
    }
}

TEST_CASE("ramsey numbers of matchings") {
    for (int r = 1; r <= 50; ++r) {
        CHECK(cockayne_lorimer({r, r}) == 3 * r - 1);
        CHECK(cockayne_lorimer({r, r, r}) == 4 * r - 2);
        CHECK(cockayne_lorimer({r, r, r, r}) == 5 * r - 3);
    }
    CHECK(cockayne_lorimer({1}) == 2);
    CHECK(cockayne_lorimer({2, 1}) == 4);
    CHECK_THROWS_AS(cockayne_lorimer({}), std::invalid_argument);
}

TEST_CASE("known value table") {
    CHECK(known_value({2, {2, 2}, 5}) == KnownValue{4, 4});
    CHECK(known_value({3, {2, 2, 2}, 6}) == KnownValue{6, 6});
    CHECK(known_value({4, {2, 2, 2, 2}, 7}) == KnownValue{8, 9});
    CHECK_FALSE(known_value({2, {2, 2}, 6}).has_value());   // off-threshold board
    CHECK_FALSE(known_value({2, {2, 1}, 5}).has_value());   // non-diagonal targets
    CHECK(known_values(3).size() == 9);
}

TEST_CASE("lower bound relates to the survival horizon as T + 1") {
    for (int r = 1; r <= 20; ++r)
        for (int t = 2; t <= 4; ++t)
            for (int n = 2; n <= 12; ++n) {
                const GameConfig config{t, std::vector<int>(static_cast<size_t>(t), r), n};
                CHECK(theorem3_lower(t, config.targets, n) == survival_horizon(config) + 1);
            }
}

TEST_CASE("upper dominates lower at and above the ramsey threshold") {
    for (int t = 2; t <= 4; ++t)
        for (int r = 1; r <= 40; ++r) {
            const std::vector<int> targets(static_cast<size_t>(t), r);
            const int ramsey = cockayne_lorimer(targets);
            for (int n = ramsey; n <= ramsey + 5; ++n) {
                const UpperBound upper = theorem1_upper(t, n);
                REQUIRE(upper.exact);
                CHECK(theorem3_lower(t, targets, n) <= upper.value.ceil_value());
            }
        }
}

TEST_CASE("bound report assembles the pieces") {
    const BoundReport report = bound_report({2, {2, 2}, 5});
    CHECK(report.lower == 4);
    CHECK(report.lower_valid);
    CHECK(report.upper_valid);
    CHECK(report.ramsey_n == 5);
    CHECK(report.survival_t == 3);
    REQUIRE(report.known.has_value());
    CHECK(report.known->lo == 4);

    const BoundReport tight = bound_report({2, {2, 2}, 4});
    CHECK_FALSE(tight.lower_valid);  // below the ramsey threshold
}
