#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace leibniz {

/**
 * Binary expansion data of k = 2^{e_r} + ... + 2^{e_1}: mu is the top
 * exponent (bit length minus one), r the number of one-bits, exponents
 * the descending list e_r > ... > e_1.
 */
struct BinaryStats {
    std::uint64_t k = 0;
    unsigned mu = 0;
    unsigned r = 0;
    std::vector<unsigned> exponents;
};

inline BinaryStats binary_stats(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("binary_stats: k must be >= 1");
    BinaryStats s;
    s.k = k;
    for (int e = 63; e >= 0; --e) {
        if (k >> e & 1) {
            s.exponents.push_back(static_cast<unsigned>(e));
            ++s.r;
        }
    }
    s.mu = s.exponents.front();
    return s;
}

} // namespace leibniz
