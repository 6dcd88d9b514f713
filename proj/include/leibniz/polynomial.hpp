#pragma once

#include "leibniz/field.hpp"
#include "leibniz/monomial.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace leibniz {

/**
 * Sparse multivariate polynomial over a fixed coefficient field.
 *
 * Terms map canonical monomials to non-zero scalars; iteration order is
 * descending graded-lex, so begin() is the leading term. The zero polynomial
 * has an empty term map.
 */
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

    Polynomial(const Field& field, std::size_t nvars) : field_(field), nvars_(nvars) {}

    static Polynomial constant(const Field& field, std::size_t nvars, const Scalar& c) {
        Polynomial p(field, nvars);
        p.add_term(Monomial(nvars), c);
        return p;
    }

    static Polynomial variable(const Field& field, std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw std::invalid_argument("Polynomial::variable: index out of range");
        Monomial m(nvars);
        m[i] = 1;
        Polynomial p(field, nvars);
        p.add_term(m, Scalar(1));
        return p;
    }

    static Polynomial monomial(const Field& field, const Monomial& m, const Scalar& c) {
        Polynomial p(field, m.nvars());
        p.add_term(m, c);
        return p;
    }

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    Scalar constant_value() const {
        if (!is_constant()) throw std::domain_error("Polynomial::constant_value: not a constant");
        return terms_.empty() ? Scalar(0) : terms_.begin()->second;
    }

    /** Coefficient of m (zero when absent). */
    Scalar coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    std::uint64_t total_degree() const {
        if (terms_.empty()) throw std::domain_error("Polynomial::total_degree: zero polynomial");
        return terms_.begin()->first.degree();
    }

    /** Total degree with deg 0 = -1 for the zero polynomial. */
    std::int64_t degree_or(std::int64_t zero_value) const {
        return terms_.empty() ? zero_value : static_cast<std::int64_t>(total_degree());
    }

    std::uint32_t degree_in(std::size_t i) const {
        if (i >= nvars_) throw std::invalid_argument("Polynomial::degree_in: index out of range");
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
        return d;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("Polynomial::leading_monomial: zero polynomial");
        return terms_.begin()->first;
    }

    const Scalar& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("Polynomial::leading_coeff: zero polynomial");
        return terms_.begin()->second;
    }

    /** Accumulate c on m, dropping the term when the sum vanishes. */
    void add_term(const Monomial& m, const Scalar& c) {
        if (m.nvars() != nvars_) throw std::invalid_argument("Polynomial::add_term: variable count mismatch");
        if (!field_contains(field_, c)) throw std::invalid_argument("Polynomial::add_term: coefficient outside field");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& x, const Polynomial& y) {
        check_compatible(x, y, "operator+");
        Polynomial r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& x, const Polynomial& y) {
        check_compatible(x, y, "operator-");
        Polynomial r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(field_, nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
        check_compatible(x, y, "operator*");
        Polynomial r(x.field_, x.nvars_);
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_)
                r.add_term(mx * my, cx * cy);
        return r;
    }

    friend Polynomial operator*(const Polynomial& x, const Scalar& c) {
        Polynomial r(x.field_, x.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [m, cx] : x.terms_) r.add_term(m, cx * c);
        return r;
    }
    friend Polynomial operator*(const Scalar& c, const Polynomial& x) { return x * c; }

    Polynomial& operator+=(const Polynomial& y) { return *this = *this + y; }
    Polynomial& operator-=(const Polynomial& y) { return *this = *this - y; }
    Polynomial& operator*=(const Polynomial& y) { return *this = *this * y; }

    Polynomial pow(std::uint32_t k) const {
        Polynomial r = constant(field_, nvars_, Scalar(1));
        for (std::uint32_t i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /** Partial derivative with respect to variable i. */
    Polynomial derivative(std::size_t i) const {
        if (i >= nvars_) throw std::invalid_argument("Polynomial::derivative: index out of range");
        Polynomial r(field_, nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial n = m;
            n[i] -= 1;
            r.add_term(n, c * Scalar(Rat(m[i])));
        }
        return r;
    }

    /**
     * Substitute images[i] for variable i. All images must share one field
     * and variable count; the result lives over that shape.
     */
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != nvars_) throw std::invalid_argument("Polynomial::substitute: image count mismatch");
        Field out_field = images.empty() ? field_ : images[0].field();
        std::size_t out_vars = images.empty() ? nvars_ : images[0].nvars();
        for (const auto& g : images)
            if (g.field() != out_field || g.nvars() != out_vars)
                throw std::invalid_argument("Polynomial::substitute: images have mismatched shapes");

        // Per-variable power cache; powers[i][t] = images[i]^t.
        std::vector<std::vector<Polynomial>> powers(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i)
            powers[i].push_back(Polynomial::constant(out_field, out_vars, Scalar(1)));

        auto power = [&](std::size_t i, std::uint32_t t) -> const Polynomial& {
            while (powers[i].size() <= t) powers[i].push_back(powers[i].back() * images[i]);
            return powers[i][t];
        };

        Polynomial r(out_field, out_vars);
        for (const auto& [m, c] : terms_) {
            Polynomial term = Polynomial::constant(out_field, out_vars, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m[i] != 0) term *= power(i, m[i]);
            r += term;
        }
        return r;
    }

    friend bool operator==(const Polynomial& x, const Polynomial& y) {
        return x.field_ == y.field_ && x.nvars_ == y.nvars_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const Polynomial& x, const Polynomial& y) { return !(x == y); }

private:
    static void check_compatible(const Polynomial& x, const Polynomial& y, const char* op) {
        if (x.field_ != y.field_) throw std::invalid_argument(std::string("Polynomial::") + op + ": field mismatch");
        if (x.nvars_ != y.nvars_) throw std::invalid_argument(std::string("Polynomial::") + op + ": variable count mismatch");
    }

    Field field_;
    std::size_t nvars_;
    TermMap terms_;
};

/** Deterministic total order on polynomials of one shape (leading terms first). */
inline int poly_cmp(const Polynomial& x, const Polynomial& y) {
    auto ix = x.terms().begin(), ex = x.terms().end();
    auto iy = y.terms().begin(), ey = y.terms().end();
    for (; ix != ex && iy != ey; ++ix, ++iy) {
        int mc = grlex_cmp(ix->first, iy->first);
        if (mc != 0) return mc;
        int sc = scalar_cmp(ix->second, iy->second);
        if (sc != 0) return sc;
    }
    if (ix != ex) return 1;
    if (iy != ey) return -1;
    return 0;
}

/**
 * Separation count: each term touching v >= 2 variables costs v - 1
 * splits before single-variable rewriting can start.
 */
inline std::uint64_t sigma(const Polynomial& p) {
    std::uint64_t s = 0;
    for (const auto& [m, c] : p.terms()) {
        std::size_t v = m.support_size();
        if (v >= 2) s += v - 1;
    }
    return s;
}

/**
 * Term-by-term upper bound: a term of degree e >= 1 unfolds into at most
 * e - 1 product splits; degree-0 terms are free.
 */
inline std::uint64_t naive_leibniz_bound(const Polynomial& p) {
    std::uint64_t s = 0;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t e = m.degree();
        if (e >= 1) s += e - 1;
    }
    return s;
}

} // namespace leibniz
