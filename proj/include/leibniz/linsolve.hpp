#pragma once

#include "leibniz/field.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace leibniz {

/**
 * Nullspace basis of the homogeneous system m * x = 0 over the scalar
 * field, via exact reduced row echelon form. One basis vector per free
 * column, emitted in ascending column order with the free coordinate set
 * to 1; everything about the reduction (pivot choice, scaling,
 * elimination) is deterministic, so callers may treat "first basis
 * vector with property X" as a canonical choice.
 */
inline std::vector<std::vector<Scalar>> nullspace_basis(std::vector<std::vector<Scalar>> m,
                                                        std::size_t ncols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        Scalar inv = m[rank][col].inverse();
        for (std::size_t c = col; c < ncols; ++c) m[rank][c] = m[rank][c] * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Scalar factor = m[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                m[r][c] = m[r][c] - factor * m[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(ncols, Scalar(0));
        v[fc] = Scalar(1);
        for (std::size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = -m[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace leibniz
