// lc: command-line front end for Leibniz complexity bounds, certificates,
// exact search, strip planning, and certificate verification.

#include "leibniz/json_io.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace leibniz;

namespace {

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    if (out.empty()) throw std::invalid_argument("--vars: expected a comma-separated list of names");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const ordered_json& j, const std::string& text) const {
        const std::string& body = format == "json" ? dump_json(j) : text;
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot open output file: " + path);
            out << body;
        }
    }
};

std::string certificate_text(const Certificate& c) {
    std::ostringstream ss;
    ss << "field: " << c.field.name() << "\n";
    ss << "f: " << format_poly(c.f, c.variables) << "\n";
    ss << "g: " << format_poly(c.g, c.variables) << "\n";
    ss << "count: " << c.claimed_count << "\n";
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
        const auto& gen = c.generators[i];
        ss << "generator " << i + 1 << ": coeff = " << format_poly(gen.coeff(), c.variables)
           << ", p = " << format_poly(gen.p(), c.variables)
           << ", q = " << format_poly(gen.q(), c.variables) << "\n";
    }
    return ss.str();
}

std::string bound_text(const BoundReport& rep) {
    std::ostringstream ss;
    ss << "kind: " << bound_kind_name(rep.kind) << "\n";
    ss << "subject: " << rep.subject << "\n";
    if (rep.exact_value) {
        ss << "value: " << rat_num(*rep.exact_value).str();
        if (rat_den(*rep.exact_value) != 1) ss << "/" << rat_den(*rep.exact_value).str();
        ss << "\n";
    } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", rep.approx_value);
        ss << "value: " << buf << " (inexact)\n";
    }
    for (const auto& [k, v] : rep.inputs) ss << k << ": " << v << "\n";
    if (rep.certificate) ss << "-- certificate --\n" << certificate_text(*rep.certificate);
    return ss.str();
}

Polynomial parse_scalar_arg(const std::string& text, const Field& field, const char* flag) {
    Polynomial p = parse_poly(text, {"t__"}, field);
    if (!p.is_constant())
        throw std::invalid_argument(std::string(flag) + ": expected a field constant");
    return p;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Leibniz complexity workbench"};
    app.require_subcommand(1);

    std::string field_flag = "rational";
    Output out;
    auto* field_opt =
        app.add_option("--field", field_flag, "Coefficient field: rational or quadratic:<d>")
            ->capture_default_str();
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--out", out.path, "Write output to a file instead of stdout");

    int exit_code = 0;

    // ---- bound ----
    auto* bound = app.add_subcommand("bound", "Evaluate an upper-bound formula");
    bound->fallthrough();
    std::string b_kind, b_poly, b_vars = "x", b_label = "f";
    std::uint64_t b_k = 0, b_C = 0, b_S = 0, b_n = 1;
    bound->add_option("--kind", b_kind, "monomial|univariate|multivariate|nash|corollary|naive")
        ->required()
        ->check(CLI::IsMember({"monomial", "univariate", "multivariate", "nash", "corollary", "naive"}));
    bound->add_option("--k", b_k, "Exponent for the monomial kind");
    bound->add_option("--poly", b_poly, "Polynomial in the expression grammar");
    bound->add_option("--vars", b_vars, "Comma-separated variable names")->capture_default_str();
    bound->add_option("--label", b_label, "Name of the implicit function (nash kind)");
    bound->add_option("--degree", b_C, "Degree statistic C (corollary kind)");
    bound->add_option("--separation", b_S, "Separation statistic S (corollary kind)");
    bound->add_option("--n", b_n, "Number of independent variables (corollary kind)");
    bound->callback([&] {
        Field field = field_from_flag(field_flag);
        if (b_kind == "monomial") {
            BoundReport rep = monomial_report(b_k);
            out.emit(bound_report_to_json(rep), bound_text(rep));
            return;
        }
        if (b_kind == "corollary") {
            BoundReport rep = corollary_bound(b_C, b_S, b_n);
            out.emit(bound_report_to_json(rep), bound_text(rep));
            return;
        }
        if (b_poly.empty()) throw std::invalid_argument("bound: --poly is required for this kind");
        std::vector<std::string> vars = split_names(b_vars);
        Polynomial p = parse_poly(b_poly, vars, field);
        if (b_kind == "univariate") {
            BoundReport rep = univariate_certificate(p, vars);
            out.emit(bound_report_to_json(rep), bound_text(rep));
        } else if (b_kind == "multivariate") {
            BoundReport rep = multivariate_certificate(p, vars);
            out.emit(bound_report_to_json(rep), bound_text(rep));
        } else if (b_kind == "naive") {
            BoundReport rep = naive_report(p, vars);
            out.emit(bound_report_to_json(rep), bound_text(rep));
        } else { // nash
            if (vars.size() < 2)
                throw std::invalid_argument("bound: nash kind needs at least two variables");
            NashDescriptor nd(vars.size() - 1, p, b_label);
            NashBound nb = nash_bound(nd, vars);
            ordered_json j;
            j["first"] = bound_report_to_json(nb.first);
            j["closed_form"] =
                nb.closed_form ? bound_report_to_json(*nb.closed_form) : ordered_json(nullptr);
            std::string text = "== first bound ==\n" + bound_text(nb.first);
            text += nb.closed_form ? "== closed form ==\n" + bound_text(*nb.closed_form)
                                   : "closed form: not applicable (a variable degree is below 2)\n";
            out.emit(j, text);
        }
    });

    // ---- derive ----
    auto* derive = app.add_subcommand("derive", "Produce a certificate from a strategy");
    derive->fallthrough();
    std::string d_strategy, d_poly, d_vars = "x", d_label = "f";
    std::uint64_t d_k = 0;
    unsigned d_depth = 3;
    derive->add_option("--strategy", d_strategy, "monomial|power_trick|univariate|multivariate|nash")
        ->required()
        ->check(CLI::IsMember({"monomial", "power_trick", "univariate", "multivariate", "nash"}));
    derive->add_option("--k", d_k, "Exponent for monomial / power_trick");
    derive->add_option("--depth", d_depth, "Recursion depth for power_trick")->capture_default_str();
    derive->add_option("--poly", d_poly, "Polynomial in the expression grammar");
    derive->add_option("--vars", d_vars, "Comma-separated variable names")->capture_default_str();
    derive->add_option("--label", d_label, "Name of the implicit function (nash strategy)");
    derive->callback([&] {
        Field field = field_from_flag(field_flag);
        std::optional<Certificate> cert;
        if (d_strategy == "monomial") {
            cert = monomial_certificate(d_k);
        } else if (d_strategy == "power_trick") {
            cert = power_trick_certificate(d_k, d_depth);
        } else {
            if (d_poly.empty()) throw std::invalid_argument("derive: --poly is required for this strategy");
            std::vector<std::string> vars = split_names(d_vars);
            Polynomial p = parse_poly(d_poly, vars, field);
            if (d_strategy == "univariate")
                cert = std::move(*univariate_certificate(p, vars).certificate);
            else if (d_strategy == "multivariate")
                cert = std::move(*multivariate_certificate(p, vars).certificate);
            else {
                if (vars.size() < 2)
                    throw std::invalid_argument("derive: nash strategy needs at least two variables");
                NashDescriptor nd(vars.size() - 1, p, d_label);
                cert = std::move(*nash_bound(nd, vars).first.certificate);
            }
        }
        out.emit(certificate_to_json(*cert), certificate_text(*cert));
    });

    // ---- exact ----
    auto* exact = app.add_subcommand("exact", "Bounded-exhaustive exact search");
    exact->fallthrough();
    std::string e_poly, e_vars = "x", e_config, e_pairs_file;
    unsigned e_D = 0, e_G = 0, e_A = 0, e_N = 0, e_jobs = 0;
    double e_budget = 0;
    bool e_no_monomial = false, e_no_factor = false;
    exact->add_option("--poly", e_poly, "Polynomial in the expression grammar")->required();
    exact->add_option("--vars", e_vars, "Comma-separated variable names")->capture_default_str();
    auto* oD = exact->add_option("--max-gen-degree", e_D, "Cap on deg(p*q) for pool pairs");
    auto* oG = exact->add_option("--max-mult-degree", e_G, "Cap on deg(g)");
    auto* oA = exact->add_option("--max-coeff-degree", e_A, "Cap on generator coefficient degrees");
    auto* oN = exact->add_option("--max-count", e_N, "Largest generator count to try");
    auto* oB = exact->add_option("--time-budget", e_budget, "Wall-clock budget in seconds");
    auto* oJ = exact->add_option("--jobs", e_jobs, "Worker threads for subset decisions");
    exact->add_flag("--no-monomial-pairs", e_no_monomial, "Drop monomial pairs from the pool");
    exact->add_flag("--no-factor-pairs", e_no_factor, "Drop factor-derived pairs from the pool");
    exact->add_option("--config", e_config, "JSON config file (SearchConfig schema)");
    exact->add_option("--pairs-file", e_pairs_file, "JSON array of extra [p, q] pairs");
    exact->callback([&] {
        std::vector<std::string> vars = split_names(e_vars);
        SearchConfig cfg;
        if (!e_config.empty()) {
            // The flag wins over the file; the file wins over the default.
            std::optional<Field> flag_field;
            if (field_opt->count()) flag_field = field_from_flag(field_flag);
            cfg = search_config_from_json(ordered_json::parse(read_file(e_config)), flag_field, vars);
        } else {
            cfg.field = field_from_flag(field_flag);
        }
        const Field& field = cfg.field;
        if (oD->count()) cfg.max_generator_degree = e_D;
        if (oG->count()) cfg.max_multiplier_degree = e_G;
        if (oA->count()) cfg.max_coefficient_degree = e_A;
        if (oN->count()) cfg.max_count = e_N;
        if (oB->count()) cfg.time_budget_seconds = e_budget;
        if (oJ->count()) cfg.jobs = e_jobs;
        if (e_no_monomial) cfg.monomial_pairs = false;
        if (e_no_factor) cfg.factor_pairs = false;
        if (!e_pairs_file.empty()) {
            ordered_json pj = ordered_json::parse(read_file(e_pairs_file));
            if (!pj.is_array())
                throw std::invalid_argument("--pairs-file: expected a JSON array of [p, q] pairs");
            for (const auto& entry : pj) {
                if (!entry.is_array() || entry.size() != 2)
                    throw std::invalid_argument("--pairs-file: entries must be [p, q] string pairs");
                cfg.extra_pairs.push_back(
                    normalize_pair(parse_poly(entry.at(0).get<std::string>(), vars, field),
                                   parse_poly(entry.at(1).get<std::string>(), vars, field)));
            }
        }
        Polynomial p = parse_poly(e_poly, vars, field);
        SearchResult res = exact_lc(p, cfg, vars);

        std::ostringstream text;
        text << "status: " << search_status_name(res.status) << "\n";
        if (res.lc_value) text << "lc: " << *res.lc_value << "\n";
        if (res.upper_bound) text << "upper bound: " << *res.upper_bound << "\n";
        text << "pool: " << res.pool_size << ", explored: " << res.explored
             << (res.exhausted ? ", exhausted" : "") << "\n";
        if (!res.note.empty()) text << "note: " << res.note << "\n";
        if (res.certificate) text << "-- certificate --\n" << certificate_text(*res.certificate);
        out.emit(search_result_to_json(res, vars), text.str());
    });

    // ---- strips ----
    auto* strips = app.add_subcommand("strips", "Binary strip plans and optimal cut counts");
    strips->fallthrough();
    std::uint64_t s_k = 0;
    std::string s_widths;
    bool s_optimal = false, s_subsets = false;
    unsigned s_limit = 64;
    auto* oK = strips->add_option("--k", s_k, "Single strip width");
    auto* oW = strips->add_option("--widths", s_widths, "Comma-separated multiset of widths");
    strips->add_flag("--optimal", s_optimal, "Also search for the optimal cut count");
    strips->add_flag("--subsets", s_subsets, "Let cuts act on sub-piles during the optimal search");
    strips->add_option("--limit", s_limit, "Total width cap for the optimal search")
        ->capture_default_str();
    strips->callback([&] {
        if (oK->count() == oW->count())
            throw std::invalid_argument("strips: exactly one of --k and --widths is required");
        StripOptions options;
        options.limit = s_limit;
        options.explore_subsets = s_subsets;
        ordered_json j;
        std::ostringstream text;
        if (oK->count()) {
            StripPlan plan = strip_plan(static_cast<unsigned>(s_k));
            j = strip_plan_to_json(plan);
            text << "k: " << plan.k << "\nbinary cost: " << plan.cost() << "\n";
            for (const auto& st : plan.steps)
                text << "cut " << st.width << " -> " << st.left << " + " << st.right << "\n";
            if (s_optimal) {
                int opt = strip_optimal({static_cast<unsigned>(s_k)}, options);
                j["optimal"] = opt;
                text << "optimal: " << opt << "\n";
            } else {
                j["optimal"] = nullptr;
            }
        } else {
            std::vector<unsigned> widths;
            for (const auto& tok : split_names(s_widths))
                widths.push_back(static_cast<unsigned>(std::stoul(tok)));
            int opt = strip_optimal(widths, options);
            j["widths"] = widths;
            j["optimal"] = opt;
            text << "optimal: " << opt << "\n";
        }
        out.emit(j, text.str());
    });

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "Check a certificate file");
    verify->fallthrough();
    std::string v_file;
    verify->add_option("file", v_file, "Certificate JSON file")->required();
    verify->callback([&] {
        Certificate cert = read_certificate(read_file(v_file));
        VerifyReport rep = verify_certificate(cert);
        std::ostringstream text;
        text << (rep.ok ? "ok" : "FAILED") << ", count " << rep.count << "\n";
        for (const auto& d : rep.diagnostics) text << d << "\n";
        out.emit(verify_report_to_json(rep), text.str());
        if (!rep.ok) exit_code = 1;
    });

    // ---- quadratic ----
    auto* quad = app.add_subcommand("quadratic", "Exact complexity of a binary quadratic form");
    quad->fallthrough();
    std::string q_a = "0", q_b = "0", q_c = "0";
    quad->add_option("--a", q_a, "Coefficient of x1^2")->capture_default_str();
    quad->add_option("--b", q_b, "Coefficient of x1*x2")->capture_default_str();
    quad->add_option("--c", q_c, "Coefficient of x2^2")->capture_default_str();
    quad->callback([&] {
        Field field = field_from_flag(field_flag);
        Scalar a = parse_scalar_arg(q_a, field, "--a").constant_value();
        Scalar b = parse_scalar_arg(q_b, field, "--b").constant_value();
        Scalar c = parse_scalar_arg(q_c, field, "--c").constant_value();
        QuadraticDichotomy qd = binary_quadratic_lc(a, b, c, field);
        ordered_json j;
        j["value"] = qd.value;
        j["certificate"] = certificate_to_json(qd.certificate);
        out.emit(j, "lc: " + std::to_string(qd.value) + "\n" + certificate_text(qd.certificate));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
