#include "leibniz/search.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace leibniz;

namespace {

const Field Q = Field::rational();
const std::vector<std::string> XY{"x1", "x2"};

Polynomial up(const char* src, const Field& field = Q) { return parse_poly(src, {"x"}, field); }
Polynomial bp(const char* src, const Field& field = Q) { return parse_poly(src, XY, field); }

bool pool_has(const std::vector<GeneratorPair>& pool, const Polynomial& p, const Polynomial& q) {
    GeneratorPair want = normalize_pair(p, q);
    return std::any_of(pool.begin(), pool.end(), [&](const GeneratorPair& pr) {
        return pr.p == want.p && pr.q == want.q;
    });
}

} // namespace

TEST_CASE("normalize_pair") {
    GeneratorPair pr = normalize_pair(up("3*x^2"), up("2*x"));
    CHECK(pr.p == up("x"));
    CHECK(pr.q == up("x^2"));
    CHECK_THROWS_AS(normalize_pair(up("5"), up("x")), std::invalid_argument);
    CHECK_THROWS_AS(normalize_pair(up("x"), up("0")), std::invalid_argument);
}

TEST_CASE("generator pool for a univariate quadratic") {
    SearchConfig cfg;
    Polynomial f = up("x^2 + 3*x + 7");
    auto pool = generator_pool(f, cfg);

    CHECK(pool_has(pool, up("x"), up("x")));
    // Completing the square contributes the repeated linear factor.
    CHECK(pool_has(pool, up("x + 3/2"), up("x + 3/2")));
    // Entries are sorted and unique.
    CHECK(std::is_sorted(pool.begin(), pool.end(), detail::PairLess{}));

    CHECK_THROWS_AS(generator_pool(up("x^2", Field::quadratic(5)), cfg), std::invalid_argument);
}

TEST_CASE("generator pool factors binary forms") {
    SearchConfig cfg;

    // Split discriminant: both linear factors appear.
    auto pool = generator_pool(bp("x1^2 + 3*x1*x2 + 2*x2^2"), cfg);
    CHECK(pool_has(pool, bp("x1 + x2"), bp("x1 + 2*x2")));

    // Irrational discriminant over an extension containing it.
    Field q5 = Field::quadratic(5);
    SearchConfig cfg5;
    cfg5.field = q5;
    auto pool5 = generator_pool(bp("x1^2 + 3*x1*x2 + x2^2", q5), cfg5);
    Polynomial r1 = bp("x1", q5) + bp("x2", q5) * ((Scalar(3) + Scalar::sqrt_of(5)) * Scalar(Rat(1, 2)));
    Polynomial r2 = bp("x1", q5) + bp("x2", q5) * ((Scalar(3) - Scalar::sqrt_of(5)) * Scalar(Rat(1, 2)));
    CHECK(pool_has(pool5, r1, r2));

    // Non-square discriminant over the rationals: completed square plus
    // the complementary (x2, x2) pair.
    auto poolq = generator_pool(bp("x1^2 + 3*x1*x2 + x2^2"), cfg);
    CHECK(pool_has(poolq, bp("x1 + 3/2*x2"), bp("x1 + 3/2*x2")));
    CHECK(pool_has(poolq, bp("x2"), bp("x2")));
}

TEST_CASE("feasibility for single pairs") {
    SearchConfig cfg;

    auto got = feasible_with(up("x^2"), {normalize_pair(up("x"), up("x"))}, cfg);
    REQUIRE(got);
    CHECK(got->claimed_count == 1);
    CHECK(verify_certificate(*got).ok);

    // x^3 is not reachable from the square split alone.
    CHECK_FALSE(feasible_with(up("x^3"), {normalize_pair(up("x"), up("x"))}, cfg));

    // Degree <= 1 needs no generators at all.
    auto trivial = feasible_with(up("x"), {}, cfg);
    REQUIRE(trivial);
    CHECK(trivial->claimed_count == 0);
}

TEST_CASE("offered pairs with zero coefficient are dropped") {
    SearchConfig cfg;
    auto got = feasible_with(up("x^2"),
                             {normalize_pair(up("x"), up("x")), normalize_pair(up("x"), up("x^2"))},
                             cfg);
    REQUIRE(got);
    CHECK(got->claimed_count == 1); // the cubic pair cannot participate
    CHECK(verify_certificate(*got).ok);
}

TEST_CASE("exact search on pure powers matches the known values") {
    const std::uint64_t expect[] = {0, 1, 2, 2, 3, 3, 4, 3}; // k = 1..8
    for (unsigned k = 1; k <= 8; ++k) {
        CAPTURE(k);
        SearchConfig cfg;
        cfg.max_count = 4;
        SearchResult res = exact_lc(up(("x^" + std::to_string(k)).c_str()), cfg);
        CHECK(res.status == SearchStatus::exact_within_model);
        REQUIRE(res.lc_value);
        CHECK(*res.lc_value == expect[k - 1]);
        REQUIRE(res.certificate);
        CHECK(verify_certificate(*res.certificate).ok);
        CHECK(res.certificate->claimed_count == expect[k - 1]);

        // The structured strategies agree wherever the search is exact.
        CHECK(*res.lc_value <= monomial_certificate(k).claimed_count);
        CHECK(*res.lc_value <= power_trick_certificate(k).claimed_count);
    }
}

TEST_CASE("exact search resolves the binary quadratic dichotomy") {
    SearchConfig cfg;
    cfg.max_count = 2;

    SearchResult split = exact_lc(bp("x1^2 + 5/2*x1*x2 + x2^2"), cfg);
    CHECK(split.lc_value == 1);

    SearchResult anisotropic = exact_lc(bp("x1^2 + 3*x1*x2 + x2^2"), cfg);
    CHECK(anisotropic.lc_value == 2);
    REQUIRE(anisotropic.certificate);
    CHECK(verify_certificate(*anisotropic.certificate).ok);

    SearchConfig cfg5;
    cfg5.field = Field::quadratic(5);
    cfg5.max_count = 2;
    Field q5 = cfg5.field;
    SearchResult adjoined = exact_lc(bp("x1^2 + 3*x1*x2 + x2^2", q5), cfg5);
    CHECK(adjoined.lc_value == 1);

    // Agreement with the closed-form dichotomy.
    CHECK(*anisotropic.lc_value ==
          static_cast<std::uint64_t>(binary_quadratic_lc(Scalar(1), Scalar(3), Scalar(1), Q).value));
    CHECK(*adjoined.lc_value ==
          static_cast<std::uint64_t>(binary_quadratic_lc(Scalar(1), Scalar(3), Scalar(1), q5).value));
}

TEST_CASE("constant input short-circuits") {
    SearchConfig cfg;
    SearchResult res = exact_lc(up("5"), cfg);
    CHECK(res.status == SearchStatus::exact_within_model);
    CHECK(res.lc_value == 0);
    CHECK(res.exhausted);
    CHECK(res.assumptions.max_generator_degree == 1u);
    CHECK(res.assumptions.max_coefficient_degree == 0u);
}

TEST_CASE("restricted pools echo their assumptions") {
    SearchConfig cfg;
    cfg.monomial_pairs = false;
    cfg.factor_pairs = false;
    cfg.extra_pairs = {normalize_pair(bp("x1*x2"), bp("x1*x2")), normalize_pair(bp("x1"), bp("x2"))};
    cfg.max_count = 2;

    SearchResult res = exact_lc(bp("x1^2*x2^2"), cfg);
    CHECK(res.pool_size == 2);
    CHECK(res.lc_value == 2); // the piled square split needs its chain
    REQUIRE(res.certificate);
    CHECK(verify_certificate(*res.certificate).ok);
    CHECK(res.assumptions.extra_pairs.size() == 2);
    CHECK(res.assumptions.max_generator_degree == 5u); // deg + 1 resolved
    CHECK(res.assumptions.max_coefficient_degree == 4u);
}

TEST_CASE("exhausted search falls back to the strategy bound") {
    SearchConfig cfg;
    cfg.max_count = 1;
    SearchResult res = exact_lc(up("x^5"), cfg); // needs 3 generators
    CHECK(res.status == SearchStatus::upper_bound_only);
    CHECK_FALSE(res.lc_value);
    CHECK(res.upper_bound == 3);
    CHECK(res.exhausted);
    REQUIRE(res.certificate);
    CHECK(verify_certificate(*res.certificate).ok);
    CHECK(res.note == "pool exhausted up to max_count without a certificate");
}

TEST_CASE("time budget cuts off with an honest answer") {
    SearchConfig cfg;
    cfg.time_budget_seconds = 0.0;
    SearchResult res = exact_lc(up("x^3"), cfg);
    CHECK(res.status == SearchStatus::upper_bound_only);
    CHECK(res.upper_bound == 2);
    CHECK_FALSE(res.exhausted);
    CHECK(res.note == "time budget exhausted before the enumeration completed");
}

TEST_CASE("parallel runs match the sequential order exactly") {
    SearchConfig seq;
    seq.max_count = 2;
    SearchConfig par = seq;
    par.jobs = 4;

    for (const char* src : {"x1^2 + 3*x1*x2 + x2^2", "x1^2*x2^2"}) {
        CAPTURE(src);
        SearchResult a = exact_lc(bp(src), seq);
        SearchResult b = exact_lc(bp(src), par);
        CHECK(a.status == b.status);
        CHECK(a.lc_value == b.lc_value);
        CHECK(a.explored == b.explored);
        REQUIRE(a.certificate);
        REQUIRE(b.certificate);
        CHECK(a.certificate->g == b.certificate->g);
        CHECK(a.certificate->generators.size() == b.certificate->generators.size());
        for (std::size_t i = 0; i < a.certificate->generators.size(); ++i)
            CHECK(a.certificate->generators[i] == b.certificate->generators[i]);
    }
}

TEST_CASE("status names") {
    CHECK(std::string(search_status_name(SearchStatus::exact_within_model)) == "ExactWithinModel");
    CHECK(std::string(search_status_name(SearchStatus::upper_bound_only)) == "UpperBoundOnly");
    CHECK(std::string(search_status_name(SearchStatus::infeasible)) == "Infeasible");
}
