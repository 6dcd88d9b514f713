#pragma once

#include "leibniz/linsolve.hpp"
#include "leibniz/strategies.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace leibniz {

struct GeneratorPair {
    Polynomial p, q;
};

/** Monic entries, p not after q; the scale a pair loses here is recovered
 *  by the unknown coefficient in front of it. */
inline GeneratorPair normalize_pair(Polynomial p, Polynomial q) {
    if (p.is_zero() || q.is_zero() || p.is_constant() || q.is_constant())
        throw std::invalid_argument("normalize_pair: factors must be non-constant");
    p = p * p.leading_coeff().inverse();
    q = q * q.leading_coeff().inverse();
    if (poly_cmp(q, p) < 0) std::swap(p, q);
    return {std::move(p), std::move(q)};
}

struct SearchConfig {
    Field field = Field::rational();
    std::optional<unsigned> max_generator_degree;   // D, default deg f + 1
    unsigned max_multiplier_degree = 2;             // G
    std::optional<unsigned> max_coefficient_degree; // A, default deg f
    bool monomial_pairs = true;
    bool factor_pairs = true;
    std::vector<GeneratorPair> extra_pairs;
    unsigned max_count = 4;
    double time_budget_seconds = 60.0;
    unsigned jobs = 1;
};

enum class SearchStatus { exact_within_model, upper_bound_only, infeasible };

inline const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::exact_within_model: return "ExactWithinModel";
        case SearchStatus::upper_bound_only: return "UpperBoundOnly";
        case SearchStatus::infeasible: return "Infeasible";
    }
    return "?";
}

/**
 * Outcome of the bounded-exhaustive search. Minimality is always
 * relative to the echoed assumptions: exact_within_model means every
 * smaller generator count was exhausted over this pool and these degree
 * bounds, not that no smooth certificate could do better.
 */
struct SearchResult {
    SearchStatus status = SearchStatus::infeasible;
    std::optional<std::uint64_t> lc_value;
    std::optional<std::uint64_t> upper_bound;
    std::optional<Certificate> certificate;
    SearchConfig assumptions; // with degree defaults resolved
    std::size_t pool_size = 0;
    std::uint64_t explored = 0; // subsets decided, in deterministic order
    bool exhausted = false;     // all counts up to max_count fully enumerated
    std::string note;
};

inline Polynomial homogeneous_component(const Polynomial& p, unsigned degree) {
    Polynomial out(p.field(), p.nvars());
    for (const auto& [m, c] : p.terms())
        if (m.degree() == degree) out.add_term(m, c);
    return out;
}

namespace detail {

inline Int scalar_denominator(const Scalar& s) {
    return boost::multiprecision::lcm(rat_den(s.a()), rat_den(s.b()));
}

inline std::vector<Monomial> monomials_up_to(std::size_t n, unsigned maxdeg) {
    std::vector<Monomial> out;
    Monomial cur(n);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            cur[i] = 0;
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    for (unsigned d = 0; d <= maxdeg; ++d) {
        if (n == 0) break;
        rec(rec, 0, d);
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

struct PairLess {
    bool operator()(const GeneratorPair& a, const GeneratorPair& b) const {
        int c = poly_cmp(a.p, b.p);
        if (c != 0) return c < 0;
        return poly_cmp(a.q, b.q) < 0;
    }
};

/** Linear factors of a x^2 + b x + c as polynomials in t; completing the
 *  square yields the single repeated factor when there are no roots. */
struct QuadraticSplit {
    bool factors;
    Polynomial first, second; // roots: (t - r1, t - r2); else (L, L)
};

inline QuadraticSplit split_quadratic(const Field& field, const Polynomial& t,
                                      const Scalar& a, const Scalar& b, const Scalar& c,
                                      const Polynomial& unit_dir) {
    Scalar disc = b * b - Scalar(4) * a * c;
    Scalar root;
    if (scalar_is_square(field, disc, &root)) {
        Scalar inv2a = (Scalar(2) * a).inverse();
        Polynomial l1 = t - unit_dir * ((-b + root) * inv2a);
        Polynomial l2 = t - unit_dir * ((-b - root) * inv2a);
        return {true, l1, l2};
    }
    Polynomial l = t + unit_dir * (b / (Scalar(2) * a));
    return {false, l, l};
}

inline void add_quadratic_factors(std::set<GeneratorPair, PairLess>& pool, const Polynomial& cand) {
    const Field& field = cand.field();
    std::size_t n = cand.nvars();
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < n; ++i)
        if (cand.degree_in(i) > 0) support.push_back(i);

    if (support.size() == 1 && cand.degree_in(support[0]) == 2) {
        std::size_t i = support[0];
        Monomial sq(n), lin(n);
        sq[i] = 2;
        lin[i] = 1;
        Scalar a = cand.coeff(sq), b = cand.coeff(lin);
        Scalar c = cand.coeff(Monomial(n));
        Polynomial t = Polynomial::variable(field, n, i);
        Polynomial one = Polynomial::constant(field, n, Scalar(1));
        QuadraticSplit s = split_quadratic(field, t, a, b, c, one);
        pool.insert(normalize_pair(s.first, s.second));
        return;
    }

    if (support.size() == 2 && cand.total_degree() == 2 && cand == homogeneous_component(cand, 2)) {
        std::size_t i = support[0], j = support[1];
        Monomial mi(n), mj(n), mij(n);
        mi[i] = 2;
        mj[j] = 2;
        mij[i] = mij[j] = 1;
        Scalar a = cand.coeff(mi), b = cand.coeff(mij), c = cand.coeff(mj);
        Polynomial xi = Polynomial::variable(field, n, i);
        Polynomial xj = Polynomial::variable(field, n, j);
        if (a.is_zero()) {
            // x_j divides the form; both halves are linear already.
            pool.insert(normalize_pair(xj, xi * b + xj * c));
            return;
        }
        QuadraticSplit s = split_quadratic(field, xi, a, b, c, xj);
        pool.insert(normalize_pair(s.first, s.second));
        if (!s.factors) pool.insert(normalize_pair(xj, xj));
    }
}

} // namespace detail

/**
 * Candidate (p, q) pairs for the search: every monomial pair with
 * deg(pq) within the bound, every two-way split of each term of f, and
 * linear-factor pairs of the quadratic pieces of f (the polynomial
 * itself, its homogeneous components) obtained from the discriminant;
 * when a quadratic piece has no roots in the field, the
 * completed-square pair comes in instead. Sorted and deduplicated, so
 * subset ranks are stable.
 */
inline std::vector<GeneratorPair> generator_pool(const Polynomial& f, const SearchConfig& cfg) {
    if (f.field() != cfg.field)
        throw std::invalid_argument("generator_pool: polynomial field differs from config field");
    std::vector<GeneratorPair> out;
    if (f.is_constant()) return out;

    const Field& field = f.field();
    std::size_t n = f.nvars();
    unsigned D = cfg.max_generator_degree.value_or(f.total_degree() + 1);
    std::set<GeneratorPair, detail::PairLess> pool;

    if (cfg.monomial_pairs && D >= 2) {
        std::vector<Monomial> monos = detail::monomials_up_to(n, D - 1);
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (monos[i].degree() == 0) continue;
            for (std::size_t j = i; j < monos.size(); ++j) {
                if (monos[j].degree() == 0 || monos[i].degree() + monos[j].degree() > D) continue;
                pool.insert({Polynomial::monomial(field, monos[i], Scalar(1)),
                             Polynomial::monomial(field, monos[j], Scalar(1))});
            }
        }
    }

    if (cfg.factor_pairs) {
        // Two-way splits of each term.
        for (const auto& [m, c] : f.terms()) {
            if (m.degree() < 2) continue;
            std::vector<Monomial> divisors;
            Monomial cur(n);
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (i == n) {
                    divisors.push_back(cur);
                    return;
                }
                for (std::uint32_t e = 0; e <= m[i]; ++e) {
                    cur[i] = e;
                    self(self, i + 1);
                }
                cur[i] = 0;
            };
            rec(rec, 0);
            for (const auto& d1 : divisors) {
                if (d1.degree() == 0 || d1.degree() * 2 > m.degree()) continue;
                Monomial d2(n);
                for (std::size_t i = 0; i < n; ++i) d2[i] = m[i] - d1[i];
                if (d2.degree() == 0) continue;
                pool.insert({Polynomial::monomial(field, d1, Scalar(1)),
                             Polynomial::monomial(field, d2, Scalar(1))});
            }
        }
        // Quadratic pieces: f itself and its homogeneous layers.
        detail::add_quadratic_factors(pool, f);
        std::set<unsigned> degrees;
        for (const auto& [m, c] : f.terms()) degrees.insert(m.degree());
        if (degrees.size() > 1)
            for (unsigned d : degrees) detail::add_quadratic_factors(pool, homogeneous_component(f, d));
    }

    for (const auto& pr : cfg.extra_pairs) {
        if (pr.p.field() != field || pr.p.nvars() != n || pr.q.field() != field || pr.q.nvars() != n)
            throw std::invalid_argument("generator_pool: extra pair shape mismatch");
        pool.insert(normalize_pair(pr.p, pr.q));
    }

    out.assign(pool.begin(), pool.end());
    return out;
}

/**
 * Decides whether some multiplier g (deg <= G, g != 0) and coefficients
 * c_j (deg <= A) satisfy the defining identity using exactly the chosen
 * pairs. The identity is linear and homogeneous in the unknown
 * coefficients, so the question reduces to whether the nullspace of an
 * exact linear system projects non-trivially onto the g coordinates.
 * The returned certificate is canonical: first qualifying basis vector,
 * denominators cleared, leading sign positive. Pairs whose coefficient
 * comes out zero are dropped, so the certificate may use fewer
 * generators than were offered.
 */
inline std::optional<Certificate> feasible_with(const Polynomial& f,
                                                const std::vector<GeneratorPair>& pairs,
                                                const SearchConfig& cfg,
                                                std::vector<std::string> vars = {}) {
    const Field& field = f.field();
    std::size_t n = f.nvars();
    if (vars.empty()) vars = default_var_names(n);
    unsigned G = cfg.max_multiplier_degree;
    unsigned A = cfg.max_coefficient_degree.value_or(f.is_constant() ? 0 : f.total_degree());

    // A monomial of f of degree >= 2 that no pair can reach forces g = 0.
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() < 2) continue;
        bool covered = false;
        for (const auto& pr : pairs) {
            Polynomial prod = pr.p * pr.q;
            if (!prod.coeff(m).is_zero() || !pr.p.coeff(m).is_zero() || !pr.q.coeff(m).is_zero()) {
                covered = true;
                break;
            }
        }
        if (!covered) return std::nullopt;
    }

    std::vector<Monomial> g_monos = detail::monomials_up_to(n, G);
    std::vector<Monomial> c_monos = detail::monomials_up_to(n, A);
    std::size_t ncols = g_monos.size() + pairs.size() * c_monos.size();

    // One structural element per unknown; the system says their weighted
    // sum vanishes identically.
    std::vector<Differential> cols;
    cols.reserve(ncols);
    for (const auto& u : g_monos)
        cols.push_back(target_element(f, Polynomial::monomial(field, u, Scalar(1))));
    for (const auto& pr : pairs) {
        Differential base = raw_generator_image(Polynomial::constant(field, n, Scalar(1)), pr.p, pr.q);
        for (const auto& w : c_monos)
            cols.push_back(Polynomial::monomial(field, w, Scalar(-1)) * base);
    }

    std::map<std::pair<Monomial, Monomial>, std::size_t,
             decltype([](const auto& a, const auto& b) {
                 int c = grlex_cmp(a.first, b.first);
                 if (c != 0) return c > 0;
                 return grlex_cmp(a.second, b.second) < 0;
             })>
        row_of;
    for (const auto& col : cols)
        for (const auto& [sym, poly] : col.coeffs())
            for (const auto& [w, s] : poly.terms()) row_of.try_emplace({sym, w}, 0);
    std::size_t nrows = 0;
    for (auto& [key, idx] : row_of) idx = nrows++;

    std::vector<std::vector<Scalar>> m(nrows, std::vector<Scalar>(ncols, Scalar(0)));
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [sym, poly] : cols[j].coeffs())
            for (const auto& [w, s] : poly.terms()) m[row_of.at({sym, w})][j] = s;

    auto basis = nullspace_basis(std::move(m), ncols);
    for (const auto& v : basis) {
        bool g_nonzero = false;
        for (std::size_t i = 0; i < g_monos.size(); ++i)
            if (!v[i].is_zero()) {
                g_nonzero = true;
                break;
            }
        if (!g_nonzero) continue;

        Int denom = 1;
        for (const auto& s : v) denom = boost::multiprecision::lcm(denom, detail::scalar_denominator(s));
        Scalar scale = Scalar(Rat(denom));
        std::size_t first_nonzero = 0;
        while (v[first_nonzero].is_zero()) ++first_nonzero;
        if (v[first_nonzero].lex_negative()) scale = -scale;

        Polynomial g(field, n);
        for (std::size_t i = 0; i < g_monos.size(); ++i) g.add_term(g_monos[i], v[i] * scale);
        std::vector<LeibnizGenerator> gens;
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            Polynomial coeff(field, n);
            for (std::size_t w = 0; w < c_monos.size(); ++w)
                coeff.add_term(c_monos[w], v[g_monos.size() + j * c_monos.size() + w] * scale);
            if (!coeff.is_zero()) gens.emplace_back(coeff, pairs[j].p, pairs[j].q);
        }
        return Certificate(field, vars, f, g, std::move(gens));
    }
    return std::nullopt;
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t pool_size) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < pool_size) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

/**
 * Smallest generator count admitting a certificate within the pool and
 * degree bounds: counts are tried in increasing order, subsets of each
 * count in lexicographic order, first hit wins. With jobs > 1 subsets
 * are decided in parallel blocks but the chosen subset (and the reported
 * number explored) match the sequential order exactly. When the budget
 * or max_count cuts the search off, the multivariate strategy bound is
 * reported instead of an exactness claim.
 */
inline SearchResult exact_lc(const Polynomial& f, const SearchConfig& cfg,
                             std::vector<std::string> vars = {}) {
    auto start = std::chrono::steady_clock::now();
    if (vars.empty()) vars = default_var_names(f.nvars());

    SearchResult res;
    res.assumptions = cfg;
    res.assumptions.max_generator_degree = cfg.max_generator_degree.value_or(
        f.is_constant() ? 1 : f.total_degree() + 1);
    res.assumptions.max_coefficient_degree = cfg.max_coefficient_degree.value_or(
        f.is_constant() ? 0 : f.total_degree());

    if (f.is_constant()) {
        res.status = SearchStatus::exact_within_model;
        res.lc_value = 0;
        res.certificate = Certificate(f.field(), vars, f,
                                      Polynomial::constant(f.field(), f.nvars(), Scalar(1)), {});
        res.exhausted = true;
        return res;
    }

    std::vector<GeneratorPair> pool = generator_pool(f, cfg);
    res.pool_size = pool.size();
    BoundReport fallback = multivariate_certificate(f, vars);

    auto out_of_time = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() >
               cfg.time_budget_seconds;
    };
    unsigned jobs = std::max(1u, cfg.jobs);

    for (unsigned N = 0; N <= cfg.max_count && N <= pool.size(); ++N) {
        std::vector<std::size_t> idx(N);
        for (std::size_t i = 0; i < N; ++i) idx[i] = i;
        bool more = true;
        while (more) {
            // One block of consecutive subsets, decided together.
            std::vector<std::vector<std::size_t>> block;
            for (std::size_t b = 0; b < jobs && more; ++b) {
                block.push_back(idx);
                more = N > 0 && detail::next_combination(idx, pool.size());
            }

            std::vector<std::optional<Certificate>> found(block.size());
            auto decide = [&](std::size_t slot) {
                std::vector<GeneratorPair> chosen;
                for (std::size_t i : block[slot]) chosen.push_back(pool[i]);
                found[slot] = feasible_with(f, chosen, res.assumptions, vars);
            };
            if (block.size() == 1) {
                decide(0);
            } else {
                std::vector<std::thread> threads;
                std::vector<std::exception_ptr> errors(block.size());
                for (std::size_t slot = 0; slot < block.size(); ++slot)
                    threads.emplace_back([&, slot] {
                        try {
                            decide(slot);
                        } catch (...) {
                            errors[slot] = std::current_exception();
                        }
                    });
                for (auto& t : threads) t.join();
                for (auto& e : errors)
                    if (e) std::rethrow_exception(e);
            }

            for (std::size_t slot = 0; slot < block.size(); ++slot) {
                if (!found[slot]) continue;
                res.explored += slot + 1;
                res.status = SearchStatus::exact_within_model;
                res.lc_value = found[slot]->claimed_count;
                res.certificate = std::move(*found[slot]);
                return res;
            }
            res.explored += block.size();

            if (out_of_time()) {
                res.status = SearchStatus::upper_bound_only;
                res.upper_bound = fallback.certificate->claimed_count;
                res.certificate = fallback.certificate;
                res.note = "time budget exhausted before the enumeration completed";
                return res;
            }
        }
    }

    res.exhausted = true;
    if (fallback.certificate && fallback.certificate->claimed_count <= cfg.max_count) {
        // The strategy bound lies inside the exhausted range yet no subset
        // reproduced it: the strategy pairs must fall outside this pool.
        res.note = "pool exhausted; strategy bound available";
    } else {
        res.note = "pool exhausted up to max_count without a certificate";
    }
    res.status = SearchStatus::upper_bound_only;
    res.upper_bound = fallback.certificate->claimed_count;
    res.certificate = fallback.certificate;
    return res;
}

} // namespace leibniz
