#pragma once

#include "leibniz/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace leibniz {

/**
 * Invertible affine change of variables x |-> A x + b over a field.
 * Invertibility is established exactly at construction time.
 */
class AffineMap {
public:
    AffineMap(const Field& field, std::vector<std::vector<Scalar>> matrix, std::vector<Scalar> offset)
        : field_(field), a_(std::move(matrix)), b_(std::move(offset)) {
        n_ = b_.size();
        if (n_ == 0) throw std::invalid_argument("AffineMap: empty map");
        if (a_.size() != n_) throw std::invalid_argument("AffineMap: matrix/offset dimension mismatch");
        for (const auto& row : a_) {
            if (row.size() != n_) throw std::invalid_argument("AffineMap: matrix is not square");
            for (const auto& s : row)
                if (!field_contains(field_, s)) throw std::invalid_argument("AffineMap: entry outside field");
        }
        for (const auto& s : b_)
            if (!field_contains(field_, s)) throw std::invalid_argument("AffineMap: entry outside field");
        if (determinant().is_zero()) throw std::invalid_argument("AffineMap: singular matrix");
    }

    static AffineMap identity(const Field& field, std::size_t n) {
        std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n, Scalar(0)));
        for (std::size_t i = 0; i < n; ++i) a[i][i] = Scalar(1);
        return AffineMap(field, std::move(a), std::vector<Scalar>(n, Scalar(0)));
    }

    const Field& field() const { return field_; }
    std::size_t nvars() const { return n_; }
    const std::vector<std::vector<Scalar>>& matrix() const { return a_; }
    const std::vector<Scalar>& offset() const { return b_; }

    /** Image of variable i: the affine polynomial (A x + b)_i. */
    Polynomial image(std::size_t i) const {
        if (i >= n_) throw std::invalid_argument("AffineMap::image: index out of range");
        Polynomial r = Polynomial::constant(field_, n_, b_[i]);
        for (std::size_t j = 0; j < n_; ++j)
            r += Polynomial::variable(field_, n_, j) * a_[i][j];
        return r;
    }

    std::vector<Polynomial> images() const {
        std::vector<Polynomial> v;
        v.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) v.push_back(image(i));
        return v;
    }

    /** p composed with the map, i.e. p(A x + b), expanded to canonical form. */
    Polynomial apply(const Polynomial& p) const {
        if (p.nvars() != n_) throw std::invalid_argument("AffineMap::apply: dimension mismatch");
        if (p.field() != field_) throw std::invalid_argument("AffineMap::apply: field mismatch");
        return p.substitute(images());
    }

    AffineMap inverse() const {
        auto inv = invert_matrix();
        // m^{-1}(x) = A^{-1} x - A^{-1} b
        std::vector<Scalar> off(n_, Scalar(0));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                off[i] -= inv[i][j] * b_[j];
        return AffineMap(field_, std::move(inv), std::move(off));
    }

    Scalar determinant() const {
        auto m = a_;
        Scalar det(1);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t pivot = col;
            while (pivot < n_ && m[pivot][col].is_zero()) ++pivot;
            if (pivot == n_) return Scalar(0);
            if (pivot != col) {
                std::swap(m[pivot], m[col]);
                det = -det;
            }
            det *= m[col][col];
            Scalar inv = m[col][col].inverse();
            for (std::size_t row = col + 1; row < n_; ++row) {
                if (m[row][col].is_zero()) continue;
                Scalar factor = m[row][col] * inv;
                for (std::size_t j = col; j < n_; ++j)
                    m[row][j] -= factor * m[col][j];
            }
        }
        return det;
    }

private:
    std::vector<std::vector<Scalar>> invert_matrix() const {
        auto m = a_;
        std::vector<std::vector<Scalar>> inv(n_, std::vector<Scalar>(n_, Scalar(0)));
        for (std::size_t i = 0; i < n_; ++i) inv[i][i] = Scalar(1);
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t pivot = col;
            while (pivot < n_ && m[pivot][col].is_zero()) ++pivot;
            if (pivot == n_) throw std::logic_error("AffineMap: singular matrix slipped through");
            std::swap(m[pivot], m[col]);
            std::swap(inv[pivot], inv[col]);
            Scalar scale = m[col][col].inverse();
            for (std::size_t j = 0; j < n_; ++j) {
                m[col][j] *= scale;
                inv[col][j] *= scale;
            }
            for (std::size_t row = 0; row < n_; ++row) {
                if (row == col || m[row][col].is_zero()) continue;
                Scalar factor = m[row][col];
                for (std::size_t j = 0; j < n_; ++j) {
                    m[row][j] -= factor * m[col][j];
                    inv[row][j] -= factor * inv[col][j];
                }
            }
        }
        return inv;
    }

    Field field_;
    std::size_t n_ = 0;
    std::vector<std::vector<Scalar>> a_;
    std::vector<Scalar> b_;
};

} // namespace leibniz
