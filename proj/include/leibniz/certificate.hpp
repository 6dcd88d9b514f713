#pragma once

#include "leibniz/affine.hpp"
#include "leibniz/differential.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/**
 * One counted Leibniz relation c * (d(pq) - p dq - q dp).
 *
 * Stored in normal form: p and q monic with the stray scalars absorbed
 * into c, and p ≼ q in the deterministic polynomial order. Constant
 * factors are rejected outright; their image is zero, so admitting them
 * would only inflate counts.
 */
class LeibnizGenerator {
public:
    LeibnizGenerator(Polynomial coeff, Polynomial p, Polynomial q)
        : coeff_(std::move(coeff)), p_(std::move(p)), q_(std::move(q)) {
        if (p_.field() != coeff_.field() || q_.field() != coeff_.field() ||
            p_.nvars() != coeff_.nvars() || q_.nvars() != coeff_.nvars())
            throw std::invalid_argument("LeibnizGenerator: component shape mismatch");
        if (p_.is_constant() || q_.is_constant())
            throw std::invalid_argument("LeibnizGenerator: zero-cost generator (constant factor)");
        if (coeff_.is_zero())
            throw std::invalid_argument("LeibnizGenerator: zero coefficient");
        Scalar lp = p_.leading_coeff(), lq = q_.leading_coeff();
        if (!lp.is_one()) p_ = p_ * lp.inverse();
        if (!lq.is_one()) q_ = q_ * lq.inverse();
        coeff_ = coeff_ * (lp * lq);
        if (poly_cmp(p_, q_) > 0) std::swap(p_, q_);
    }

    const Polynomial& coeff() const { return coeff_; }
    const Polynomial& p() const { return p_; }
    const Polynomial& q() const { return q_; }

    LeibnizGenerator scaled(const Polynomial& s) const {
        return LeibnizGenerator(coeff_ * s, p_, q_);
    }

    friend bool operator==(const LeibnizGenerator& x, const LeibnizGenerator& y) {
        return x.coeff_ == y.coeff_ && x.p_ == y.p_ && x.q_ == y.q_;
    }
    friend bool operator!=(const LeibnizGenerator& x, const LeibnizGenerator& y) { return !(x == y); }

private:
    Polynomial coeff_, p_, q_;
};

inline Differential generator_image(const LeibnizGenerator& gen) {
    return raw_generator_image(gen.coeff(), gen.p(), gen.q());
}

/** g * (df - sum_i df/dx_i dx_i) pushed into the linearized module. */
inline Differential target_element(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("target_element: multiplier must be non-zero");
    Differential t = g * linear_diff(f);
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Polynomial c = g * f.derivative(i);
        if (c.is_zero()) continue;
        Monomial xi(f.nvars());
        xi[i] = 1;
        t.add_term(xi, -c);
    }
    return t;
}

/**
 * Witness of "LC(f) <= claimed_count": a nonzero multiplier g and a list
 * of Leibniz generators whose images sum to target_element(f, g).
 */
struct Certificate {
    Field field;
    std::vector<std::string> variables;
    Polynomial f;
    Polynomial g;
    std::vector<LeibnizGenerator> generators;
    std::size_t claimed_count;

    Certificate(Field field_, std::vector<std::string> variables_, Polynomial f_, Polynomial g_,
                std::vector<LeibnizGenerator> generators_)
        : field(std::move(field_)),
          variables(std::move(variables_)),
          f(std::move(f_)),
          g(std::move(g_)),
          generators(std::move(generators_)),
          claimed_count(generators.size()) {
        if (variables.size() != f.nvars())
            throw std::invalid_argument("Certificate: variable name count mismatch");
        if (f.field() != field || g.field() != field || f.nvars() != g.nvars())
            throw std::invalid_argument("Certificate: field mismatch");
        if (g.is_zero()) throw std::invalid_argument("Certificate: multiplier must be non-zero");
        for (const auto& gen : generators)
            if (gen.coeff().field() != field || gen.coeff().nvars() != f.nvars())
                throw std::invalid_argument("Certificate: field mismatch in generator");
    }
};

struct VerifyReport {
    bool ok;
    std::size_t count;
    Differential residual;
    std::vector<std::string> diagnostics;
};

/**
 * Checks the module identity target_element(f, g) = sum of generator
 * images. The report's residual is the difference, zero exactly when ok.
 */
inline VerifyReport verify_certificate(const Certificate& c) {
    Differential residual = target_element(c.f, c.g);
    for (const auto& gen : c.generators) residual -= generator_image(gen);
    VerifyReport rep{residual.is_zero(), c.generators.size(), residual, {}};
    if (!rep.ok) {
        rep.diagnostics.push_back("residual has " + std::to_string(residual.coeffs().size()) +
                                  " non-zero symbol(s)");
    }
    return rep;
}

namespace detail {
inline void check_same_shape(const Certificate& c1, const Certificate& c2, const char* op) {
    if (c1.field != c2.field || c1.variables != c2.variables)
        throw std::invalid_argument(std::string(op) + ": incompatible certificates");
}
} // namespace detail

/**
 * Certificate for f1 + f2 with count1 + count2 generators: multiply the
 * first identity by g2 and the second by g1, then add.
 */
inline Certificate sum_compose(const Certificate& c1, const Certificate& c2) {
    detail::check_same_shape(c1, c2, "sum_compose");
    std::vector<LeibnizGenerator> gens;
    gens.reserve(c1.generators.size() + c2.generators.size());
    for (const auto& gen : c1.generators) gens.push_back(gen.scaled(c2.g));
    for (const auto& gen : c2.generators) gens.push_back(gen.scaled(c1.g));
    return Certificate(c1.field, c1.variables, c1.f + c2.f, c1.g * c2.g, std::move(gens));
}

/**
 * Certificate for f1 * f2 with count1 + count2 + 1 generators: one new
 * generator splits d(f1 f2), then each input identity is transported.
 * When either factor is constant no Leibniz step is needed and the count
 * degenerates to that of the non-constant factor.
 */
inline Certificate product_compose(const Certificate& c1, const Certificate& c2) {
    detail::check_same_shape(c1, c2, "product_compose");
    if (c1.f.is_constant() || c2.f.is_constant()) {
        const Certificate& live = c1.f.is_constant() ? c2 : c1;
        const Certificate& dead = c1.f.is_constant() ? c1 : c2;
        Scalar s = dead.f.constant_value();
        std::vector<LeibnizGenerator> gens;
        if (!s.is_zero())
            for (const auto& gen : live.generators) gens.push_back(gen.scaled(Polynomial::constant(live.field, live.f.nvars(), s)));
        Polynomial product = c1.f * c2.f;
        return Certificate(c1.field, c1.variables, product, live.g, std::move(gens));
    }
    std::vector<LeibnizGenerator> gens;
    gens.reserve(c1.generators.size() + c2.generators.size() + 1);
    gens.emplace_back(c1.g * c2.g, c1.f, c2.f);
    for (const auto& gen : c1.generators) gens.push_back(gen.scaled(c2.f * c2.g));
    for (const auto& gen : c2.generators) gens.push_back(gen.scaled(c1.f * c1.g));
    return Certificate(c1.field, c1.variables, c1.f * c2.f, c1.g * c2.g, std::move(gens));
}

/**
 * Certificate for f^k from a certificate for f and a univariate one for
 * x^k, with exactly count(c_f) + count(c_k) generators.
 *
 * Substituting x := f maps the univariate identity for x^k onto
 *   g_k(f) * ( d(f^k) - k f^{k-1} d(f) ) = sum of substituted images,
 * where d(u) abbreviates linear_diff(u). Multiplying by g_f and replacing
 * g_f * d(f) through the identity of c_f leaves the target of f^k under
 * the multiplier g_f * g_k(f); the generators of c_f come along scaled by
 * the chain-rule factor k f^{k-1} g_k(f).
 */
inline Certificate power_compose(const Certificate& c_f, const Certificate& c_k) {
    if (c_k.f.nvars() != 1)
        throw std::invalid_argument("power_compose: exponent certificate must be univariate");
    if (c_k.field != c_f.field && !c_k.field.is_rational())
        throw std::invalid_argument("power_compose: incompatible certificates");
    std::uint32_t k = 0;
    if (!c_k.f.is_zero()) {
        if (c_k.f.terms().size() != 1 || !c_k.f.leading_coeff().is_one())
            throw std::invalid_argument("power_compose: exponent certificate must certify x^k");
        k = c_k.f.leading_monomial()[0];
    } else {
        throw std::invalid_argument("power_compose: exponent certificate must certify x^k");
    }
    const Field& field = c_f.field;
    std::size_t n = c_f.f.nvars();
    Polynomial one = Polynomial::constant(field, n, Scalar(1));
    if (c_f.f.is_constant() || k == 0)
        return Certificate(field, c_f.variables, c_f.f.pow(k), one, {});

    auto subst = [&](const Polynomial& u) { return u.substitute({c_f.f}); };
    Polynomial gk_at_f = subst(c_k.g);
    std::vector<LeibnizGenerator> gens;
    gens.reserve(c_f.generators.size() + c_k.generators.size());
    for (const auto& gen : c_k.generators)
        gens.emplace_back(subst(gen.coeff()) * c_f.g, subst(gen.p()), subst(gen.q()));
    Polynomial chain = Polynomial::constant(field, n, Scalar(Rat(k))) * c_f.f.pow(k - 1) * gk_at_f;
    for (const auto& gen : c_f.generators) gens.push_back(gen.scaled(chain));
    return Certificate(field, c_f.variables, c_f.f.pow(k), c_f.g * gk_at_f, std::move(gens));
}

/**
 * Transport along an invertible affine substitution: every polynomial is
 * composed with the map; d(x^a) symbols re-expand through linearity only,
 * so the generator count is unchanged.
 */
inline Certificate affine_transport(const Certificate& c, const AffineMap& m) {
    if (m.nvars() != c.f.nvars() || m.field() != c.field)
        throw std::invalid_argument("affine_transport: dimension mismatch");
    std::vector<LeibnizGenerator> gens;
    gens.reserve(c.generators.size());
    for (const auto& gen : c.generators)
        gens.emplace_back(m.apply(gen.coeff()), m.apply(gen.p()), m.apply(gen.q()));
    return Certificate(c.field, c.variables, m.apply(c.f), m.apply(c.g), std::move(gens));
}

} // namespace leibniz
