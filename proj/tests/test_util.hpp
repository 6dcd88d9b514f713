#pragma once

#include "leibniz/affine.hpp"
#include "leibniz/polynomial.hpp"

#include <random>

namespace testutil {

using namespace leibniz;

// Random sparse polynomial with small integer coefficients. Never zero.
inline Polynomial random_poly(std::mt19937& rng, const Field& field, std::size_t nvars,
                              unsigned max_deg, unsigned max_terms) {
    std::uniform_int_distribution<unsigned> n_terms(1, max_terms);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    Polynomial p(field, nvars);
    unsigned want = n_terms(rng);
    while (p.is_zero() || p.terms().size() < want) {
        Monomial m(nvars);
        unsigned budget = deg(rng);
        for (std::size_t i = 0; i < nvars && budget > 0; ++i) {
            std::uniform_int_distribution<unsigned> part(0, budget);
            unsigned e = part(rng);
            m[i] = e;
            budget -= e;
        }
        int c = coeff(rng);
        if (c == 0) c = 1;
        p.add_term(m, Scalar(c));
        if (p.terms().size() >= want) break;
    }
    return p;
}

inline Polynomial random_nonconstant_poly(std::mt19937& rng, const Field& field, std::size_t nvars,
                                          unsigned max_deg, unsigned max_terms) {
    for (;;) {
        Polynomial p = random_poly(rng, field, nvars, max_deg, max_terms);
        if (!p.is_constant()) return p;
    }
}

// Random invertible affine map with entries in [-2, 2].
inline AffineMap random_affine(std::mt19937& rng, const Field& field, std::size_t n) {
    std::uniform_int_distribution<int> entry(-2, 2);
    for (;;) {
        std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar(0)));
        std::vector<Scalar> b(n, Scalar(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a[i][j] = Scalar(entry(rng));
            b[i] = Scalar(entry(rng));
        }
        try {
            return AffineMap(field, a, b);
        } catch (const std::invalid_argument&) {
            // singular draw, try again
        }
    }
}

} // namespace testutil
