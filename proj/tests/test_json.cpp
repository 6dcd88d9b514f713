#include "leibniz/json_io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace leibniz;

namespace {

const Field Q = Field::rational();

Certificate sample_certificate() {
    std::vector<std::string> vars{"x"};
    Polynomial f = parse_poly("x^4", vars, Q);
    Polynomial g = parse_poly("1", vars, Q);
    std::vector<LeibnizGenerator> gens;
    gens.emplace_back(parse_poly("1", vars, Q), parse_poly("x^2", vars, Q), parse_poly("x^2", vars, Q));
    gens.emplace_back(parse_poly("2*x^2", vars, Q), parse_poly("x", vars, Q), parse_poly("x", vars, Q));
    return Certificate(Q, vars, f, g, std::move(gens));
}

} // namespace

TEST_CASE("field json round trip") {
    CHECK(field_from_json(field_to_json(Q)) == Q);
    Field q5 = Field::quadratic(5);
    CHECK(field_from_json(field_to_json(q5)) == q5);
    CHECK(dump_json(field_to_json(Q)) == "{\n  \"kind\": \"rational\"\n}\n");

    CHECK_THROWS_AS(field_from_json(ordered_json{{"kind", "finite"}}), std::invalid_argument);
    CHECK_THROWS_AS(field_from_json(ordered_json{{"kind", "quadratic"}}), std::invalid_argument);
    CHECK_THROWS_AS(field_from_json(ordered_json::array()), std::invalid_argument);
}

TEST_CASE("field flag spellings") {
    CHECK(field_from_flag("rational") == Q);
    CHECK(field_from_flag("quadratic:5") == Field::quadratic(5));
    CHECK_THROWS_AS(field_from_flag("quadratic:"), std::invalid_argument);
    CHECK_THROWS_AS(field_from_flag("quadratic:x"), std::invalid_argument);
    CHECK_THROWS_AS(field_from_flag("real"), std::invalid_argument);
}

TEST_CASE("certificate serialization is byte stable") {
    Certificate c = sample_certificate();
    std::string bytes = write_certificate(c);
    Certificate back = read_certificate(bytes);
    CHECK(write_certificate(back) == bytes);
    CHECK(verify_certificate(back).ok);
    CHECK(back.claimed_count == 2);

    ordered_json j = certificate_to_json(c);
    CHECK(j.at("f") == "x^4");
    CHECK(j.at("claimed_count") == 2);
    CHECK(j.at("generators").size() == 2);
}

TEST_CASE("certificate parsing rejects malformed input") {
    ordered_json j = certificate_to_json(sample_certificate());

    ordered_json missing = j;
    missing.erase("g");
    CHECK_THROWS_WITH(certificate_from_json(missing),
                      Catch::Matchers::ContainsSubstring("missing key \"g\""));

    ordered_json miscounted = j;
    miscounted["claimed_count"] = 3;
    CHECK_THROWS_WITH(certificate_from_json(miscounted),
                      Catch::Matchers::ContainsSubstring("claimed_count does not match"));

    ordered_json zero_g = j;
    zero_g["g"] = "0";
    CHECK_THROWS_WITH(certificate_from_json(zero_g),
                      Catch::Matchers::ContainsSubstring("multiplier must be non-zero"));

    ordered_json constant_factor = j;
    constant_factor["generators"][0]["p"] = "3";
    CHECK_THROWS_WITH(certificate_from_json(constant_factor),
                      Catch::Matchers::ContainsSubstring("zero-cost generator"));

    CHECK_THROWS_AS(read_certificate("{not json"), nlohmann::json::parse_error);
}

TEST_CASE("quadratic field certificates survive the round trip") {
    Field q5 = Field::quadratic(5);
    std::vector<std::string> vars{"x1", "x2"};
    Polynomial f = parse_poly("x1^2 + 3*x1*x2 + x2^2", vars, q5);
    Scalar r1 = (Scalar(3) + Scalar::sqrt_of(5)) * Scalar(Rat(1, 2));
    Scalar r2 = (Scalar(3) - Scalar::sqrt_of(5)) * Scalar(Rat(1, 2));
    Polynomial l1 = parse_poly("x1", vars, q5) + parse_poly("x2", vars, q5) * r1;
    Polynomial l2 = parse_poly("x1", vars, q5) + parse_poly("x2", vars, q5) * r2;
    Certificate c(q5, vars, f, parse_poly("1", vars, q5),
                  {LeibnizGenerator(parse_poly("1", vars, q5), l1, l2)});
    REQUIRE(verify_certificate(c).ok);

    std::string bytes = write_certificate(c);
    Certificate back = read_certificate(bytes);
    CHECK(back.field == q5);
    CHECK(back.f == f);
    CHECK(verify_certificate(back).ok);
    CHECK(write_certificate(back) == bytes);
}

TEST_CASE("value encoding") {
    CHECK(value_to_json(Rat(7), 7.0) == ordered_json(7));
    CHECK(value_to_json(Rat(-3), -3.0) == ordered_json(-3));
    CHECK(value_to_json(Rat(5, 2), 2.5) == ordered_json("5/2"));
    CHECK(value_to_json(std::nullopt, 4.92481).is_number_float());

    Rat huge(Int("123456789012345678901234567890"));
    CHECK(value_to_json(huge, 0.0) == ordered_json("123456789012345678901234567890/1"));
}

TEST_CASE("bound report serialization") {
    BoundReport rep = monomial_report(12);
    ordered_json j = bound_report_to_json(rep);
    CHECK(j.at("kind") == "monomial");
    CHECK(j.at("subject") == "x^12");
    CHECK(j.at("value") == 4);
    CHECK(j.at("inexact") == false);
    CHECK(j.at("inputs").at("mu") == "3");
    CHECK(j.contains("certificate"));

    BoundReport rough = corollary_bound(3, 0, 1);
    ordered_json jr = bound_report_to_json(rough);
    CHECK(jr.at("inexact") == true);
    CHECK(jr.at("value").is_number_float());
    CHECK_FALSE(jr.contains("certificate"));
}

TEST_CASE("verify report serialization") {
    Certificate c = sample_certificate();
    ordered_json ok = verify_report_to_json(verify_certificate(c));
    CHECK(ok.at("ok") == true);
    CHECK(ok.at("count") == 2);
    CHECK(ok.at("residual_symbols") == 0);
    CHECK(ok.at("diagnostics").empty());

    Certificate bad(Q, {"x"}, parse_poly("x^4", {"x"}, Q), parse_poly("1", {"x"}, Q),
                    {LeibnizGenerator(parse_poly("1", {"x"}, Q), parse_poly("x", {"x"}, Q),
                                      parse_poly("x", {"x"}, Q))});
    ordered_json fail = verify_report_to_json(verify_certificate(bad));
    CHECK(fail.at("ok") == false);
    CHECK(fail.at("residual_symbols").get<int>() > 0);
    CHECK_FALSE(fail.at("diagnostics").empty());
}

TEST_CASE("strip plan serialization") {
    ordered_json j = strip_plan_to_json(strip_plan(5));
    CHECK(j.at("k") == 5);
    CHECK(j.at("cost") == 3);
    REQUIRE(j.at("steps").size() == 3);
    CHECK(j.at("steps")[0] == ordered_json{{"width", 5}, {"left", 4}, {"right", 1}});
}

TEST_CASE("search config round trip") {
    SearchConfig cfg;
    cfg.field = Field::quadratic(5);
    cfg.max_generator_degree = 4;
    cfg.max_count = 3;
    cfg.jobs = 2;
    cfg.extra_pairs = {normalize_pair(parse_poly("x", {"x"}, cfg.field),
                                      parse_poly("x + 1", {"x"}, cfg.field))};

    ordered_json j = search_config_to_json(cfg, {"x"});
    SearchConfig back = search_config_from_json(j, std::nullopt, {"x"});
    CHECK(dump_json(search_config_to_json(back, {"x"})) == dump_json(j));
    CHECK(back.field == cfg.field);
    CHECK(back.max_generator_degree == 4u);
    CHECK_FALSE(back.max_coefficient_degree);
    CHECK(back.extra_pairs.size() == 1);
}

TEST_CASE("search config validation") {
    CHECK_THROWS_WITH(search_config_from_json(ordered_json{{"max_cuont", 3}}, std::nullopt, {"x"}),
                      Catch::Matchers::ContainsSubstring("unknown key"));
    CHECK_THROWS_WITH(
        search_config_from_json(ordered_json{{"max_count", -1}}, std::nullopt, {"x"}),
        Catch::Matchers::ContainsSubstring("non-negative integer"));
    CHECK_THROWS_AS(search_config_from_json(ordered_json::array(), std::nullopt, {"x"}),
                    std::invalid_argument);

    // A caller-supplied field beats the one in the file.
    ordered_json j;
    j["field"] = field_to_json(Field::quadratic(7));
    SearchConfig cfg = search_config_from_json(j, Q, {"x"});
    CHECK(cfg.field == Q);
    SearchConfig cfg7 = search_config_from_json(j, std::nullopt, {"x"});
    CHECK(cfg7.field == Field::quadratic(7));
}

TEST_CASE("search result serialization") {
    SearchConfig cfg;
    cfg.max_count = 2;
    SearchResult res = exact_lc(parse_poly("x^2", {"x"}, Q), cfg);
    ordered_json j = search_result_to_json(res, {"x"});
    CHECK(j.at("status") == "ExactWithinModel");
    CHECK(j.at("lc_value") == 1);
    CHECK(j.at("upper_bound").is_null());
    CHECK(j.at("certificate").is_object());
    CHECK(j.at("assumptions").at("max_generator_degree") == 3);
    CHECK(j.at("pool_size").get<std::size_t>() == res.pool_size);
    CHECK(j.at("exhausted") == false);

    // Serialization itself is deterministic.
    CHECK(dump_json(j) == dump_json(search_result_to_json(exact_lc(parse_poly("x^2", {"x"}, Q), cfg), {"x"})));
}
