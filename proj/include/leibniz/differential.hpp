#pragma once

#include "leibniz/parse.hpp"
#include "leibniz/polynomial.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace leibniz {

/**
 * Element of the linearized differential module: a finite combination
 * sum_m c_m(x) * d(m) over non-constant monomials m, with polynomial
 * coefficients. Additivity, scalar linearity and d(constant) = 0 are
 * already quotiented out, so equality here is a finite coefficient
 * comparison and no cost-free relation is ever represented explicitly.
 */
class Differential {
public:
    using CoeffMap = std::map<Monomial, Polynomial, GrlexGreater>;

    Differential(const Field& field, std::size_t nvars) : field_(field), nvars_(nvars) {}

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /** Coefficient polynomial of the symbol d(m); zero when absent. */
    Polynomial coeff(const Monomial& m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? Polynomial(field_, nvars_) : it->second;
    }

    /** Accumulate c * d(m); symbols with vanishing coefficients are dropped. */
    void add_term(const Monomial& m, const Polynomial& c) {
        if (m.nvars() != nvars_) throw std::invalid_argument("Differential::add_term: variable count mismatch");
        if (m.is_unit()) throw std::invalid_argument("Differential::add_term: d(1) is not a symbol");
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    friend Differential operator+(const Differential& x, const Differential& y) {
        check_compatible(x, y);
        Differential r = x;
        for (const auto& [m, c] : y.coeffs_) r.add_term(m, c);
        return r;
    }

    friend Differential operator-(const Differential& x, const Differential& y) {
        check_compatible(x, y);
        Differential r = x;
        for (const auto& [m, c] : y.coeffs_) r.add_term(m, -c);
        return r;
    }

    Differential& operator+=(const Differential& y) { return *this = *this + y; }
    Differential& operator-=(const Differential& y) { return *this = *this - y; }

    /** Module action: multiply every coefficient by the polynomial s. */
    friend Differential operator*(const Polynomial& s, const Differential& x) {
        if (s.field() != x.field_ || s.nvars() != x.nvars_)
            throw std::invalid_argument("Differential: scaling polynomial has mismatched shape");
        Differential r(x.field_, x.nvars_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : x.coeffs_) r.add_term(m, c * s);
        return r;
    }

    friend bool operator==(const Differential& x, const Differential& y) {
        return x.field_ == y.field_ && x.nvars_ == y.nvars_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const Differential& x, const Differential& y) { return !(x == y); }

    std::string to_string(const std::vector<std::string>& vars) const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : coeffs_) {
            if (!out.empty()) out += " + ";
            out += "(" + format_poly(c, vars) + ")*d(" + detail::monomial_string(m, vars) + ")";
        }
        return out;
    }

private:
    static void check_compatible(const Differential& x, const Differential& y) {
        if (x.field_ != y.field_ || x.nvars_ != y.nvars_)
            throw std::invalid_argument("Differential: shape mismatch");
    }

    Field field_;
    std::size_t nvars_;
    CoeffMap coeffs_;
};

/**
 * d applied through linearity only: p = sum c_a x^a maps to
 * sum over non-constant monomials of c_a * d(x^a). Constants vanish.
 */
inline Differential linear_diff(const Polynomial& p) {
    Differential r(p.field(), p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.is_unit()) continue;
        r.add_term(m, Polynomial::constant(p.field(), p.nvars(), c));
    }
    return r;
}

/**
 * Image of the relation coeff * (d(pq) - p dq - q dp) in the linearized
 * module. No structural constraints are imposed here; the LeibnizGenerator
 * type layers the non-constant requirement on top.
 */
inline Differential raw_generator_image(const Polynomial& coeff, const Polynomial& p, const Polynomial& q) {
    Differential r = linear_diff(p * q);
    r -= p * linear_diff(q);
    r -= q * linear_diff(p);
    return coeff * r;
}

} // namespace leibniz
