#include "leibniz/strips.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace leibniz;

TEST_CASE("binary plan simulates and matches mu + r - 1") {
    for (unsigned k = 1; k <= 64; ++k) {
        StripPlan plan = strip_plan(k);
        CAPTURE(k);
        CHECK(simulate_strip_plan(plan));
        BinaryStats st = binary_stats(k);
        CHECK(plan.cost() == (k == 1 ? 0 : st.mu + st.r - 1));
    }
    CHECK_THROWS_AS(strip_plan(0), std::invalid_argument);
}

TEST_CASE("plan steps are well formed") {
    StripPlan plan = strip_plan(13); // 8 + 4 + 1
    REQUIRE(plan.cost() == 5);       // mu = 3, r = 3
    CHECK(plan.steps.front().width == 13);
    for (const auto& cut : plan.steps) {
        CHECK(cut.left + cut.right == cut.width);
        CHECK(cut.left >= cut.right);
        CHECK(cut.right >= 1);
    }
}

TEST_CASE("simulation rejects bogus plans") {
    StripPlan missing{5, {{4, 2, 2}}};
    CHECK_THROWS_WITH(simulate_strip_plan(missing),
                      Catch::Matchers::ContainsSubstring("absent width"));

    StripPlan malformed{4, {{4, 1, 3}}};
    CHECK_THROWS_WITH(simulate_strip_plan(malformed),
                      Catch::Matchers::ContainsSubstring("malformed cut"));

    StripPlan unfinished{6, {{6, 4, 2}}};
    CHECK_FALSE(simulate_strip_plan(unfinished));
}

TEST_CASE("optimal costs for frozen instances") {
    CHECK(strip_optimal({1}) == 0);
    CHECK(strip_optimal({2}) == 1);
    CHECK(strip_optimal({3}) == 2);
    CHECK(strip_optimal({5}) == 3);
    CHECK(strip_optimal({2, 2}) == 1);  // one piled cut finishes both
    CHECK(strip_optimal({2, 3}) == 2);
    CHECK(strip_optimal({15}) == 5);    // beats the binary strategy's 6
    CHECK(strip_optimal({31}) == 7);    // beats the binary strategy's 8
}

TEST_CASE("singleton optimum is an addition chain length") {
    // Cutting {k} optimally is dual to building k from 1 by additions.
    // Known shortest-chain lengths for small k:
    const int expect[] = {0, 1, 2, 2, 3, 3, 4, 3, 4, 4, 5, 4, 5, 5, 5, 4,
                          5, 5, 6, 5, 6, 6, 6, 5, 6, 6, 6, 6, 7, 6, 7, 5};
    for (unsigned k = 1; k <= 32; ++k) {
        CAPTURE(k);
        CHECK(strip_optimal({k}) == expect[k - 1]);
    }
}

TEST_CASE("optimum never exceeds the binary plan") {
    for (unsigned k = 2; k <= 40; ++k) {
        CAPTURE(k);
        CHECK(strip_optimal({k}) <= static_cast<int>(strip_plan(k).cost()));
    }
}

TEST_CASE("subset exploration agrees with whole-width piling") {
    StripOptions subsets;
    subsets.explore_subsets = true;
    std::vector<std::vector<unsigned>> instances = {
        {7}, {12}, {5, 5}, {3, 4, 5}, {2, 2, 2, 2}, {9, 6}, {15}};
    for (const auto& widths : instances) {
        CAPTURE(widths);
        CHECK(strip_optimal(widths, subsets) == strip_optimal(widths));
    }
}

TEST_CASE("width limit is enforced") {
    CHECK_THROWS_WITH(strip_optimal({65}), Catch::Matchers::ContainsSubstring("exceeds limit"));
    StripOptions wide;
    wide.limit = 70;
    CHECK(strip_optimal({65}, wide) >= 1);
    CHECK_THROWS_AS(strip_optimal({0}), std::invalid_argument);
}
