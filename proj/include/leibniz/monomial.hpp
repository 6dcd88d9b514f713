#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace leibniz {

/** Exponent vector of a monomial in a fixed number of variables. */
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_.at(i); }
    std::uint32_t& operator[](std::size_t i) { return e_.at(i); }

    std::uint64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
    }
    bool is_unit() const {
        for (auto x : e_) if (x != 0) return false;
        return true;
    }

    /** Number of variables with positive exponent. */
    std::size_t support_size() const {
        std::size_t k = 0;
        for (auto x : e_) if (x != 0) ++k;
        return k;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        if (x.nvars() != y.nvars()) throw std::invalid_argument("Monomial: variable count mismatch");
        Monomial r(x.nvars());
        for (std::size_t i = 0; i < x.nvars(); ++i) r.e_[i] = x.e_[i] + y.e_[i];
        return r;
    }

    friend bool operator==(const Monomial& x, const Monomial& y) { return x.e_ == y.e_; }
    friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }

private:
    std::vector<std::uint32_t> e_;
};

/** Graded-lexicographic comparison (degree first, then x1 > x2 > ...). */
inline int grlex_cmp(const Monomial& x, const Monomial& y) {
    if (x.nvars() != y.nvars()) throw std::invalid_argument("grlex_cmp: variable count mismatch");
    auto dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy ? -1 : 1;
    for (std::size_t i = 0; i < x.nvars(); ++i)
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    return 0;
}

/** Map comparator putting the grlex-largest monomial first. */
struct GrlexGreater {
    bool operator()(const Monomial& x, const Monomial& y) const { return grlex_cmp(x, y) > 0; }
};

struct GrlexLess {
    bool operator()(const Monomial& x, const Monomial& y) const { return grlex_cmp(x, y) < 0; }
};

} // namespace leibniz
