#pragma once

#include "leibniz/parse.hpp"
#include "leibniz/search.hpp"
#include "leibniz/strategies.hpp"
#include "leibniz/strips.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace leibniz {

using ordered_json = nlohmann::ordered_json;

/** Serialize with the project-wide convention: two-space indent, newline
 *  at the end. Key order is fixed by construction (ordered_json), which
 *  is what makes output byte-stable. */
inline std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

inline ordered_json field_to_json(const Field& f) {
    ordered_json j;
    j["kind"] = f.is_rational() ? "rational" : "quadratic";
    if (!f.is_rational()) j["d"] = f.d();
    return j;
}

inline Field field_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw std::invalid_argument("field: expected {\"kind\": ...}");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Field::rational();
    if (kind == "quadratic") {
        if (!j.contains("d") || !j.at("d").is_number_unsigned())
            throw std::invalid_argument("field: quadratic kind requires a positive integer d");
        return Field::quadratic(j.at("d").get<unsigned>());
    }
    throw std::invalid_argument("field: unknown kind '" + kind + "'");
}

/** "rational" or "quadratic:<d>", the spelling accepted by the CLI flag. */
inline Field field_from_flag(const std::string& text) {
    if (text == "rational") return Field::rational();
    if (text.rfind("quadratic:", 0) == 0) {
        std::string num = text.substr(10);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("field: expected quadratic:<d> with integer d");
        return Field::quadratic(static_cast<unsigned>(std::stoul(num)));
    }
    throw std::invalid_argument("field: expected 'rational' or 'quadratic:<d>'");
}

inline ordered_json certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["field"] = field_to_json(c.field);
    j["variables"] = c.variables;
    j["f"] = format_poly(c.f, c.variables);
    j["g"] = format_poly(c.g, c.variables);
    ordered_json gens = ordered_json::array();
    for (const auto& gen : c.generators) {
        ordered_json g;
        g["coeff"] = format_poly(gen.coeff(), c.variables);
        g["p"] = format_poly(gen.p(), c.variables);
        g["q"] = format_poly(gen.q(), c.variables);
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);
    j["claimed_count"] = c.claimed_count;
    return j;
}

inline std::string write_certificate(const Certificate& c) { return dump_json(certificate_to_json(c)); }

inline Certificate certificate_from_json(const ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("certificate: expected a JSON object");
    for (const char* key : {"field", "variables", "f", "g", "generators", "claimed_count"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("certificate: missing key \"") + key + "\"");
    Field field = field_from_json(j.at("field"));
    std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
    Polynomial f = parse_poly(j.at("f").get<std::string>(), vars, field);
    Polynomial g = parse_poly(j.at("g").get<std::string>(), vars, field);
    std::vector<LeibnizGenerator> gens;
    for (const auto& gj : j.at("generators")) {
        gens.emplace_back(parse_poly(gj.at("coeff").get<std::string>(), vars, field),
                          parse_poly(gj.at("p").get<std::string>(), vars, field),
                          parse_poly(gj.at("q").get<std::string>(), vars, field));
    }
    if (!j.at("claimed_count").is_number_unsigned() ||
        j.at("claimed_count").get<std::size_t>() != gens.size())
        throw std::invalid_argument("certificate: claimed_count does not match the generator list");
    return Certificate(field, vars, f, g, std::move(gens));
}

inline Certificate read_certificate(const std::string& bytes) {
    ordered_json j = ordered_json::parse(bytes); // throws on malformed JSON
    return certificate_from_json(j);
}

/** Exact rationals keep full precision: integers as JSON numbers when
 *  they fit, anything else as a "p/q" string. Inexact values are plain
 *  doubles. */
inline ordered_json value_to_json(const std::optional<Rat>& exact, double approx) {
    if (exact) {
        if (rat_den(*exact) == 1) {
            Int num = rat_num(*exact);
            if (num >= std::numeric_limits<std::int64_t>::min() &&
                num <= std::numeric_limits<std::int64_t>::max())
                return static_cast<std::int64_t>(num);
        }
        return rat_num(*exact).str() + "/" + rat_den(*exact).str();
    }
    return approx;
}

inline ordered_json bound_report_to_json(const BoundReport& rep) {
    ordered_json j;
    j["kind"] = bound_kind_name(rep.kind);
    j["subject"] = rep.subject;
    j["value"] = value_to_json(rep.exact_value, rep.approx_value);
    j["inexact"] = rep.inexact;
    ordered_json inputs = ordered_json::object();
    for (const auto& [k, v] : rep.inputs) inputs[k] = v;
    j["inputs"] = std::move(inputs);
    if (rep.certificate) j["certificate"] = certificate_to_json(*rep.certificate);
    return j;
}

inline ordered_json verify_report_to_json(const VerifyReport& rep) {
    ordered_json j;
    j["ok"] = rep.ok;
    j["count"] = rep.count;
    j["residual_symbols"] = rep.residual.coeffs().size();
    j["diagnostics"] = rep.diagnostics;
    return j;
}

inline ordered_json strip_plan_to_json(const StripPlan& plan) {
    ordered_json j;
    j["k"] = plan.k;
    j["cost"] = plan.cost();
    ordered_json steps = ordered_json::array();
    for (const auto& s : plan.steps) {
        ordered_json step;
        step["width"] = s.width;
        step["left"] = s.left;
        step["right"] = s.right;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j;
}

inline ordered_json search_config_to_json(const SearchConfig& cfg,
                                          const std::vector<std::string>& vars) {
    ordered_json j;
    j["field"] = field_to_json(cfg.field);
    if (cfg.max_generator_degree)
        j["max_generator_degree"] = *cfg.max_generator_degree;
    else
        j["max_generator_degree"] = nullptr;
    j["max_multiplier_degree"] = cfg.max_multiplier_degree;
    if (cfg.max_coefficient_degree)
        j["max_coefficient_degree"] = *cfg.max_coefficient_degree;
    else
        j["max_coefficient_degree"] = nullptr;
    j["monomial_pairs"] = cfg.monomial_pairs;
    j["factor_pairs"] = cfg.factor_pairs;
    ordered_json pairs = ordered_json::array();
    for (const auto& pr : cfg.extra_pairs)
        pairs.push_back(ordered_json::array({format_poly(pr.p, vars), format_poly(pr.q, vars)}));
    j["extra_pairs"] = std::move(pairs);
    j["max_count"] = cfg.max_count;
    j["time_budget_seconds"] = cfg.time_budget_seconds;
    j["jobs"] = cfg.jobs;
    return j;
}

/**
 * Reads a SearchConfig from the same schema the writer emits. The field
 * is fixed by the caller (flag wins over file); a "field" key in the
 * file is honored only when the caller passes none. Extra pairs are
 * parsed against the supplied variable names. Unknown keys are rejected
 * to keep config typos loud.
 */
inline SearchConfig search_config_from_json(const ordered_json& j, std::optional<Field> field,
                                            const std::vector<std::string>& vars) {
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    static const std::vector<std::string> known = {
        "field",          "max_generator_degree", "max_multiplier_degree",
        "max_coefficient_degree", "monomial_pairs",       "factor_pairs",
        "extra_pairs",    "max_count",            "time_budget_seconds",
        "jobs"};
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("config: unknown key \"" + key + "\"");

    SearchConfig cfg;
    if (field)
        cfg.field = *field;
    else if (j.contains("field"))
        cfg.field = field_from_json(j.at("field"));
    auto opt_uint = [&](const char* key) -> std::optional<unsigned> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        if (!j.at(key).is_number_unsigned())
            throw std::invalid_argument(std::string("config: ") + key + " must be a non-negative integer");
        return j.at(key).get<unsigned>();
    };
    cfg.max_generator_degree = opt_uint("max_generator_degree");
    cfg.max_coefficient_degree = opt_uint("max_coefficient_degree");
    if (auto v = opt_uint("max_multiplier_degree")) cfg.max_multiplier_degree = *v;
    if (auto v = opt_uint("max_count")) cfg.max_count = *v;
    if (auto v = opt_uint("jobs")) cfg.jobs = *v;
    if (j.contains("monomial_pairs")) cfg.monomial_pairs = j.at("monomial_pairs").get<bool>();
    if (j.contains("factor_pairs")) cfg.factor_pairs = j.at("factor_pairs").get<bool>();
    if (j.contains("time_budget_seconds")) {
        if (!j.at("time_budget_seconds").is_number())
            throw std::invalid_argument("config: time_budget_seconds must be a number");
        cfg.time_budget_seconds = j.at("time_budget_seconds").get<double>();
    }
    if (j.contains("extra_pairs")) {
        for (const auto& pj : j.at("extra_pairs")) {
            if (!pj.is_array() || pj.size() != 2)
                throw std::invalid_argument("config: extra_pairs entries must be [p, q] string pairs");
            cfg.extra_pairs.push_back(normalize_pair(
                parse_poly(pj.at(0).get<std::string>(), vars, cfg.field),
                parse_poly(pj.at(1).get<std::string>(), vars, cfg.field)));
        }
    }
    return cfg;
}

inline ordered_json search_result_to_json(const SearchResult& res,
                                          const std::vector<std::string>& vars) {
    ordered_json j;
    j["status"] = search_status_name(res.status);
    j["lc_value"] = res.lc_value ? ordered_json(*res.lc_value) : ordered_json(nullptr);
    j["upper_bound"] = res.upper_bound ? ordered_json(*res.upper_bound) : ordered_json(nullptr);
    j["certificate"] = res.certificate ? certificate_to_json(*res.certificate) : ordered_json(nullptr);
    j["assumptions"] = search_config_to_json(res.assumptions, vars);
    j["pool_size"] = res.pool_size;
    j["explored"] = res.explored;
    j["exhausted"] = res.exhausted;
    j["note"] = res.note;
    return j;
}

} // namespace leibniz
