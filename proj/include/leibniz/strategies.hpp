#pragma once

#include "leibniz/certificate.hpp"
#include "leibniz/strips.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

enum class BoundKind { monomial, univariate, multivariate, nash_first, nash_closed_form, corollary, naive };

inline const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::monomial: return "monomial";
        case BoundKind::univariate: return "univariate";
        case BoundKind::multivariate: return "multivariate";
        case BoundKind::nash_first: return "nash_first";
        case BoundKind::nash_closed_form: return "nash_closed_form";
        case BoundKind::corollary: return "corollary";
        case BoundKind::naive: return "naive";
    }
    return "?";
}

/**
 * Evaluation of one bound formula. exact_value is set whenever the
 * formula evaluates in exact arithmetic (always, except for closed-form
 * log2 on non-powers of two); approx_value is always usable. The inputs
 * echo lists the statistics the formula consumed, in a fixed order.
 */
struct BoundReport {
    BoundKind kind;
    std::string subject;
    std::optional<Rat> exact_value;
    double approx_value = 0.0;
    bool inexact = false;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::optional<Certificate> certificate;
};

/** A function given implicitly by P(x1..xn, y) = 0, solved for the last variable. */
struct NashDescriptor {
    std::size_t n;
    Polynomial defining; // n+1 variables, the dependent one last
    std::string label;

    NashDescriptor(std::size_t n_, Polynomial defining_, std::string label_ = "f")
        : n(n_), defining(std::move(defining_)), label(std::move(label_)) {
        if (defining.nvars() != n + 1)
            throw std::invalid_argument("NashDescriptor: defining polynomial must have n+1 variables");
        if (defining.is_zero())
            throw std::invalid_argument("NashDescriptor: zero defining polynomial");
        if (defining.degree_in(n) == 0)
            throw std::invalid_argument("NashDescriptor: defining polynomial must involve the dependent variable");
    }
};

namespace detail {

inline Monomial axis_power(std::size_t nvars, std::size_t i, std::uint32_t e) {
    Monomial m(nvars);
    m[i] = e;
    return m;
}

/**
 * Subtract the image of the generator (c, x^m1, x^m2) from r and record
 * it. Used by every strategy: r carries "target minus images so far",
 * which vanishes exactly when the certificate is complete.
 */
inline void apply_monomial_split(Differential& r, std::vector<LeibnizGenerator>& gens,
                                 const Monomial& m1, const Monomial& m2, const Polynomial& c) {
    if (c.is_zero()) throw std::logic_error("apply_monomial_split: vanishing coefficient");
    const Field& field = c.field();
    gens.emplace_back(c, Polynomial::monomial(field, m1, Scalar(1)), Polynomial::monomial(field, m2, Scalar(1)));
    r.add_term(m1 * m2, -c);
    r.add_term(m1, c * Polynomial::monomial(field, m2, Scalar(1)));
    r.add_term(m2, c * Polynomial::monomial(field, m1, Scalar(1)));
}

/**
 * Binary peel of one exponent sheet of variable i: cuts k's width down
 * to its lowest power of two, tracking this sheet's own coefficient
 * chain (never the pooled symbol coefficient, which may be shared with
 * other sheets; sharing would silently undercut the advertised count).
 * Emits popcount(k) - 1 generators.
 */
inline void peel_sheet(Differential& r, std::vector<LeibnizGenerator>& gens,
                       std::size_t i, std::uint32_t k, Polynomial coeff) {
    const Field& field = coeff.field();
    std::size_t n = coeff.nvars();
    std::uint32_t cur = k;
    while ((cur & (cur - 1)) != 0) { // not a power of two
        std::uint32_t top = std::uint32_t{1} << (31 - std::countl_zero(cur));
        std::uint32_t rest = cur - top;
        apply_monomial_split(r, gens, axis_power(n, i, top), axis_power(n, i, rest), coeff);
        coeff = coeff * Polynomial::monomial(field, axis_power(n, i, top), Scalar(1));
        cur = rest;
    }
}

/**
 * Halving cascade for variable i from level mu down to 1, splitting each
 * d(x_i^{2^m}) with its full pooled coefficient (piling is the point of
 * the cascade: every sheet's power residue rides the same mu cuts).
 */
inline void cascade_variable(Differential& r, std::vector<LeibnizGenerator>& gens,
                             std::size_t i, unsigned mu) {
    std::size_t n = r.nvars();
    for (unsigned m = mu; m >= 1; --m) {
        Monomial sym = axis_power(n, i, std::uint32_t{1} << m);
        Polynomial c = r.coeff(sym);
        Monomial half = axis_power(n, i, std::uint32_t{1} << (m - 1));
        apply_monomial_split(r, gens, half, half, c);
    }
}

} // namespace detail

/**
 * Certificate for x^k with multiplier 1 and exactly mu + r - 1
 * generators, replaying the binary strip plan on the symbol d(x^k).
 */
inline Certificate monomial_certificate(std::uint64_t k) {
    Field field = Field::rational();
    std::vector<std::string> vars{"x"};
    if (k > 65535) throw std::invalid_argument("monomial_certificate: exponent too large");
    Polynomial f(field, 1);
    f.add_term(detail::axis_power(1, 0, static_cast<std::uint32_t>(k)), Scalar(1));
    Polynomial one = Polynomial::constant(field, 1, Scalar(1));
    if (k <= 1) return Certificate(field, vars, f, one, {});

    Differential r = target_element(f, one);
    std::vector<LeibnizGenerator> gens;
    for (const auto& cut : strip_plan(static_cast<unsigned>(k)).steps) {
        Monomial sym = detail::axis_power(1, 0, cut.width);
        Polynomial c = r.coeff(sym);
        detail::apply_monomial_split(r, gens, detail::axis_power(1, 0, cut.left),
                                     detail::axis_power(1, 0, cut.right), c);
    }
    if (!r.is_zero()) throw std::logic_error("monomial_certificate: non-zero residual");
    return Certificate(field, vars, f, one, std::move(gens));
}

inline BoundReport monomial_report(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("monomial_report: k must be >= 1");
    Certificate cert = monomial_certificate(k);
    BoundReport rep;
    rep.kind = BoundKind::monomial;
    rep.subject = format_poly(cert.f, cert.variables);
    rep.exact_value = Rat(cert.claimed_count);
    rep.approx_value = static_cast<double>(cert.claimed_count);
    BinaryStats st = binary_stats(k);
    rep.inputs = {{"k", std::to_string(k)}, {"mu", std::to_string(st.mu)}, {"r", std::to_string(st.r)}};
    rep.certificate = std::move(cert);
    return rep;
}

namespace detail {

struct TrickChoice {
    int cost;
    unsigned m; // 0: plain binary strategy, else peel to 2^m
};

// cost(k) = min( mu + r - 1, min over 2^m > k of 1 + m + cost(2^m - k) ),
// the second option only within the remaining recursion depth.
inline TrickChoice trick_plan(std::uint64_t k, unsigned depth,
                              std::map<std::pair<std::uint64_t, unsigned>, TrickChoice>& memo) {
    if (k <= 1) return {0, 0};
    auto key = std::make_pair(k, depth);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BinaryStats st = binary_stats(k);
    TrickChoice best{static_cast<int>(st.mu + st.r - 1), 0};
    if (depth > 0) {
        for (unsigned m = st.mu + 1; 1 + static_cast<int>(m) < best.cost; ++m) {
            std::uint64_t e = (std::uint64_t{1} << m) - k;
            TrickChoice sub = trick_plan(e, depth - 1, memo);
            int cost = 1 + static_cast<int>(m) + sub.cost;
            if (cost < best.cost) best = {cost, m};
        }
    }
    memo.emplace(key, best);
    return best;
}

inline Certificate trick_build(std::uint64_t k, unsigned depth,
                               std::map<std::pair<std::uint64_t, unsigned>, TrickChoice>& memo) {
    TrickChoice choice = trick_plan(k, depth, memo);
    if (choice.m == 0) return monomial_certificate(k);

    std::uint64_t e = (std::uint64_t{1} << choice.m) - k;
    Certificate sub = trick_build(e, depth - 1, memo);
    Certificate cascade = monomial_certificate(std::uint64_t{1} << choice.m);

    Field field = Field::rational();
    Polynomial xk = Polynomial::monomial(field, axis_power(1, 0, static_cast<std::uint32_t>(k)), Scalar(1));
    Polynomial xe = Polynomial::monomial(field, axis_power(1, 0, static_cast<std::uint32_t>(e)), Scalar(1));

    // x^e d(x^k) = d(x^{2^m}) - x^k d(x^e): one generator absorbs the peel,
    // the 2^m cascade and the recursive certificate for x^e finish the job.
    std::vector<LeibnizGenerator> gens;
    gens.emplace_back(-sub.g, xe, xk);
    for (const auto& gen : cascade.generators) gens.push_back(gen.scaled(sub.g));
    for (const auto& gen : sub.generators) gens.push_back(gen.scaled(-xk));
    return Certificate(field, {"x"}, xk, xe * sub.g, std::move(gens));
}

} // namespace detail

/**
 * Certificate for x^k minimizing over the binary strategy and the
 * power-of-two completion trick, searched to the given recursion depth.
 * Falls back to the binary strategy when no completion helps.
 */
inline Certificate power_trick_certificate(std::uint64_t k, unsigned depth_budget = 3) {
    if (k > 65535) throw std::invalid_argument("power_trick_certificate: exponent too large");
    std::map<std::pair<std::uint64_t, unsigned>, detail::TrickChoice> memo;
    return detail::trick_build(k, depth_budget, memo);
}

/**
 * Certificate for a univariate polynomial with count mu + sum_j (r_j - 1)
 * over the distinct non-zero exponents: each exponent sheet is peeled to
 * a power of two on its own coefficient chain, then one shared halving
 * cascade finishes all sheets at once. Constant terms are dropped before
 * the statistics (d of a constant costs nothing).
 */
inline BoundReport univariate_certificate(const Polynomial& p, const std::vector<std::string>& vars = {"x"}) {
    if (p.nvars() != 1) throw std::invalid_argument("univariate_certificate: polynomial is not univariate");
    const Field& field = p.field();
    Polynomial one = Polynomial::constant(field, 1, Scalar(1));

    BoundReport rep;
    rep.kind = BoundKind::univariate;
    rep.subject = format_poly(p, vars);
    if (p.is_constant()) {
        rep.exact_value = Rat(0);
        rep.approx_value = 0.0;
        rep.inputs = {{"exponents", "[]"}, {"mu", "0"}, {"r", "[]"}};
        rep.certificate = Certificate(field, vars, p, one, {});
        return rep;
    }

    Differential r = target_element(p, one);
    std::vector<LeibnizGenerator> gens;
    std::vector<std::uint32_t> exponents;
    std::vector<unsigned> rbits;
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t k = m[0];
        if (k == 0) continue;
        exponents.push_back(k);
        rbits.push_back(static_cast<unsigned>(std::popcount(k)));
        detail::peel_sheet(r, gens, 0, k, Polynomial::constant(field, 1, c));
    }
    unsigned mu = binary_stats(exponents.front()).mu;
    detail::cascade_variable(r, gens, 0, mu);
    if (!r.is_zero()) throw std::logic_error("univariate_certificate: non-zero residual");

    std::string exp_s = "[", r_s = "[";
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        exp_s += (j ? ", " : "") + std::to_string(exponents[j]);
        r_s += (j ? ", " : "") + std::to_string(rbits[j]);
    }
    rep.exact_value = Rat(gens.size());
    rep.approx_value = static_cast<double>(gens.size());
    rep.inputs = {{"exponents", exp_s + "]"}, {"mu", std::to_string(mu)}, {"r", r_s + "]"}};
    rep.certificate = Certificate(field, vars, p, one, std::move(gens));
    return rep;
}

/**
 * Certificate for any polynomial: sigma(p) separating splits detach one
 * variable at a time from every mixed term, then each variable runs the
 * univariate peel-and-cascade. Count is exactly
 * sigma(p) + sum_i ( mu_i + sum_j (r_ij - 1) ).
 */
inline BoundReport multivariate_certificate(const Polynomial& p, std::vector<std::string> vars = {}) {
    const Field& field = p.field();
    std::size_t n = p.nvars();
    if (vars.empty()) vars = default_var_names(n);
    if (vars.size() != n) throw std::invalid_argument("multivariate_certificate: variable name count mismatch");
    Polynomial one = Polynomial::constant(field, n, Scalar(1));

    BoundReport rep;
    rep.kind = BoundKind::multivariate;
    rep.subject = format_poly(p, vars);
    if (p.is_constant()) {
        rep.exact_value = Rat(0);
        rep.approx_value = 0.0;
        rep.inputs = {{"sigma", "0"}};
        rep.certificate = Certificate(field, vars, p, one, {});
        return rep;
    }

    Differential r = target_element(p, one);
    std::vector<LeibnizGenerator> gens;

    // Separation phase: per mixed term, peel variables off left to right.
    for (const auto& [m, c] : p.terms()) {
        if (m.support_size() < 2) continue;
        Monomial rest = m;
        Polynomial chain = Polynomial::constant(field, n, c);
        for (std::size_t i = 0; rest.support_size() >= 2; ++i) {
            if (rest[i] == 0) continue;
            Monomial head = detail::axis_power(n, i, rest[i]);
            rest[i] = 0;
            detail::apply_monomial_split(r, gens, head, rest, chain);
            chain = chain * Polynomial::monomial(field, head, Scalar(1));
        }
    }

    // Univariate phase, one variable at a time over its distinct exponents.
    std::string per_var;
    for (std::size_t i = 0; i < n; ++i) {
        std::map<std::uint32_t, Polynomial, std::greater<std::uint32_t>> sheets;
        for (const auto& [m, c] : p.terms()) {
            if (m[i] == 0) continue;
            Monomial rest = m;
            rest[i] = 0;
            auto [it, inserted] = sheets.emplace(m[i], Polynomial::monomial(field, rest, c));
            if (!inserted) it->second += Polynomial::monomial(field, rest, c);
        }
        if (sheets.empty()) continue;
        unsigned mu = binary_stats(sheets.begin()->first).mu;
        std::string exp_s = "[", r_s = "[";
        bool first = true;
        for (const auto& [k, coeff] : sheets) {
            detail::peel_sheet(r, gens, i, k, coeff);
            exp_s += (first ? "" : ", ") + std::to_string(k);
            r_s += (first ? "" : ", ") + std::to_string(std::popcount(k));
            first = false;
        }
        detail::cascade_variable(r, gens, i, mu);
        if (!per_var.empty()) per_var += ", ";
        per_var += "{var: " + vars[i] + ", mu: " + std::to_string(mu) + ", exponents: " + exp_s +
                   "], r: " + r_s + "]}";
    }
    if (!r.is_zero()) throw std::logic_error("multivariate_certificate: non-zero residual");

    rep.exact_value = Rat(gens.size());
    rep.approx_value = static_cast<double>(gens.size());
    rep.inputs = {{"sigma", std::to_string(sigma(p))}, {"per_variable", "[" + per_var + "]"}};
    rep.certificate = Certificate(field, vars, p, one, std::move(gens));
    return rep;
}

/** Term-counting upper bound sum max(|a| - 1, 0); no certificate. */
inline BoundReport naive_report(const Polynomial& p, std::vector<std::string> vars = {}) {
    if (vars.empty()) vars = default_var_names(p.nvars());
    BoundReport rep;
    rep.kind = BoundKind::naive;
    rep.subject = format_poly(p, vars);
    std::uint64_t v = naive_leibniz_bound(p);
    rep.exact_value = Rat(v);
    rep.approx_value = static_cast<double>(v);
    rep.inputs = {{"terms", std::to_string(p.terms().size())}};
    return rep;
}

struct NashBound {
    BoundReport first;
    std::optional<BoundReport> closed_form; // absent when some degree is < 2
};

/**
 * Bounds for the Nash function defined by P(x, y) = 0: the first value
 * runs the multivariate strategy on P itself over all n+1 variables (the
 * certificate stays in those variables; substituting y := f afterwards
 * is what gives the bound for f, recorded here only as metadata). The
 * closed form replaces each per-variable cascade cost with
 * (deg + 2)(log2(deg) - 1) and is exact only on powers of two; it needs
 * every variable degree >= 2.
 */
inline NashBound nash_bound(const NashDescriptor& nd, std::vector<std::string> vars = {}) {
    const Polynomial& P = nd.defining;
    std::size_t n = nd.n;
    if (vars.empty()) {
        vars = default_var_names(n);
        vars.push_back("y");
        if (n == 1) vars[0] = "x";
    }

    NashBound nb{multivariate_certificate(P, vars), std::nullopt};
    nb.first.kind = BoundKind::nash_first;
    nb.first.inputs.emplace_back("n", std::to_string(n));
    nb.first.inputs.emplace_back("substitute", vars.back() + " := " + nd.label);

    bool applicable = true;
    bool exact = true;
    std::uint64_t exact_sum = 0;
    double real_sum = 0.0;
    std::string degs = "[";
    for (std::size_t i = 0; i <= n; ++i) {
        std::uint32_t deg = P.degree_in(i);
        degs += (i ? ", " : "") + std::to_string(deg);
        if (deg < 2) { applicable = false; continue; }
        if (std::has_single_bit(deg)) {
            unsigned log = binary_stats(deg).mu;
            exact_sum += static_cast<std::uint64_t>(deg + 2) * (log - 1);
            real_sum += static_cast<double>(deg + 2) * (log - 1);
        } else {
            exact = false;
            real_sum += static_cast<double>(deg + 2) * (std::log2(static_cast<double>(deg)) - 1);
        }
    }
    degs += "]";
    if (applicable) {
        BoundReport closed;
        closed.kind = BoundKind::nash_closed_form;
        closed.subject = nb.first.subject;
        std::uint64_t base = sigma(P) + n + 1;
        if (exact) {
            closed.exact_value = Rat(base + exact_sum);
            closed.approx_value = static_cast<double>(base + exact_sum);
        } else {
            closed.inexact = true;
            closed.approx_value = static_cast<double>(base) + real_sum;
        }
        closed.inputs = {{"sigma", std::to_string(sigma(P))},
                         {"degrees", degs},
                         {"n", std::to_string(n)}};
        nb.closed_form = std::move(closed);
    }
    return nb;
}

/**
 * S + (n+1)(C+2)(log2(C) - 1) + n + 1 for user-supplied degree and
 * separation statistics; exact when C is a power of two.
 */
inline BoundReport corollary_bound(std::uint64_t C, std::uint64_t S, std::uint64_t n) {
    if (C < 2) throw std::invalid_argument("corollary_bound: corollary inapplicable (C must be >= 2)");
    if (n < 1) throw std::invalid_argument("corollary_bound: n must be >= 1");
    BoundReport rep;
    rep.kind = BoundKind::corollary;
    rep.subject = "C=" + std::to_string(C) + ", S=" + std::to_string(S) + ", n=" + std::to_string(n);
    rep.inputs = {{"C", std::to_string(C)}, {"S", std::to_string(S)}, {"n", std::to_string(n)}};
    if (std::has_single_bit(C)) {
        unsigned log = binary_stats(C).mu;
        Rat v = Rat(S) + Rat((n + 1) * (C + 2)) * Rat(log - 1) + Rat(n + 1);
        rep.exact_value = v;
        rep.approx_value = static_cast<double>(v);
    } else {
        rep.inexact = true;
        rep.approx_value = static_cast<double>(S) +
                           static_cast<double>((n + 1) * (C + 2)) * (std::log2(static_cast<double>(C)) - 1.0) +
                           static_cast<double>(n + 1);
    }
    return rep;
}

/**
 * Minimum of sigma(P composed with each candidate map); returns the value
 * and the index of the first map attaining it. An upper bound for the
 * separation complexity relative to the supplied candidates.
 */
inline std::pair<std::uint64_t, std::size_t> sigma_under_affine(const Polynomial& P,
                                                                const std::vector<AffineMap>& maps) {
    if (maps.empty()) throw std::invalid_argument("sigma_under_affine: no maps supplied");
    std::optional<std::uint64_t> best;
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        std::uint64_t s = sigma(maps[i].apply(P));
        if (!best || s < *best) {
            best = s;
            best_index = i;
        }
    }
    return {*best, best_index};
}

struct QuadraticDichotomy {
    int value; // 1 or 2
    Certificate certificate;
};

/**
 * Exact Leibniz complexity of the binary quadratic form
 * a x1^2 + b x1 x2 + c x2^2 over the given field: 1 when the form splits
 * into linear factors there (square discriminant, including all
 * degenerate cases), else 2 by completing the square.
 */
inline QuadraticDichotomy binary_quadratic_lc(const Scalar& a, const Scalar& b, const Scalar& c,
                                              const Field& field) {
    for (const Scalar* s : {&a, &b, &c})
        if (!field_contains(field, *s))
            throw std::invalid_argument("binary_quadratic_lc: coefficient outside field");
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw std::invalid_argument("binary_quadratic_lc: zero form");

    std::vector<std::string> vars{"x1", "x2"};
    Polynomial x1 = Polynomial::variable(field, 2, 0);
    Polynomial x2 = Polynomial::variable(field, 2, 1);
    Polynomial f = x1 * x1 * a + x1 * x2 * b + x2 * x2 * c;
    Polynomial one = Polynomial::constant(field, 2, Scalar(1));

    auto one_generator = [&](const Polynomial& coeff, const Polynomial& p, const Polynomial& q) {
        std::vector<LeibnizGenerator> gens;
        gens.emplace_back(coeff, p, q);
        return Certificate(field, vars, f, one, std::move(gens));
    };

    if (a.is_zero()) {
        // f = x2 (b x1 + c x2): always a product of linear forms.
        if (b.is_zero()) return {1, one_generator(Polynomial::constant(field, 2, c), x2, x2)};
        return {1, one_generator(one, x2, x1 * b + x2 * c)};
    }

    Scalar disc = b * b - Scalar(4) * a * c;
    Scalar root;
    if (scalar_is_square(field, disc, &root)) {
        Scalar inv2a = (Scalar(2) * a).inverse();
        Scalar r1 = (-b + root) * inv2a;
        Scalar r2 = (-b - root) * inv2a;
        Polynomial l1 = x1 - x2 * r1;
        Polynomial l2 = x1 - x2 * r2;
        return {1, one_generator(Polynomial::constant(field, 2, a), l1, l2)};
    }

    // No factorization: a (x1 + (b/2a) x2)^2 + (c - b^2/4a) x2^2.
    Scalar half_ratio = b / (Scalar(2) * a);
    Scalar rest = c - b * b / (Scalar(4) * a);
    Polynomial l = x1 + x2 * half_ratio;
    std::vector<LeibnizGenerator> gens;
    gens.emplace_back(Polynomial::constant(field, 2, a), l, l);
    gens.emplace_back(Polynomial::constant(field, 2, rest), x2, x2);
    return {2, Certificate(field, vars, f, one, std::move(gens))};
}

} // namespace leibniz
