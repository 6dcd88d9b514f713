#pragma once

#include "leibniz/binary_stats.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace leibniz {

/** One piled cut: every sheet of width w is cut into (left, right). */
struct StripCut {
    unsigned width;
    unsigned left;
    unsigned right; // left >= right, left + right == width
};

/**
 * A cutting schedule for a width-k sheet. Simulating the steps from {k}
 * must end with unit strips only; width sum is conserved by every step.
 */
struct StripPlan {
    unsigned k = 0;
    std::vector<StripCut> steps;
    std::size_t cost() const { return steps.size(); }
};

/**
 * Replays a plan from the multiset {k}. Throws when a step names an
 * absent width; returns true when only unit strips remain.
 */
inline bool simulate_strip_plan(const StripPlan& plan) {
    std::map<unsigned, std::uint64_t> sheets; // width -> count
    sheets[plan.k] = 1;
    for (const auto& cut : plan.steps) {
        if (cut.left + cut.right != cut.width || cut.left < cut.right || cut.right < 1)
            throw std::invalid_argument("simulate_strip_plan: malformed cut");
        auto it = sheets.find(cut.width);
        if (it == sheets.end()) throw std::invalid_argument("simulate_strip_plan: cut of absent width");
        std::uint64_t n = it->second;
        sheets.erase(it);
        sheets[cut.left] += n;
        sheets[cut.right] += n;
    }
    for (const auto& [w, n] : sheets)
        if (w != 1 && n > 0) return false;
    return true;
}

/**
 * The binary strategy: peel the top powers of two off k with r - 1 cuts,
 * then halve the power piles down to units with mu more cuts. Total cost
 * mu + r - 1 (and 0 for k = 1).
 */
inline StripPlan strip_plan(unsigned k) {
    if (k == 0) throw std::invalid_argument("strip_plan: k must be >= 1");
    StripPlan plan;
    plan.k = k;
    if (k == 1) return plan;
    BinaryStats st = binary_stats(k);
    unsigned rest = k;
    for (unsigned j = 0; j + 1 < st.r; ++j) {
        unsigned p = 1u << st.exponents[j];
        plan.steps.push_back({rest, std::max(p, rest - p), std::min(p, rest - p)});
        rest -= p;
    }
    for (unsigned m = st.mu; m >= 1; --m)
        plan.steps.push_back({1u << m, 1u << (m - 1), 1u << (m - 1)});
    return plan;
}

struct StripOptions {
    unsigned limit = 64;         // maximum admissible total width
    bool explore_subsets = false; // allow cutting only some sheets of a width
};

namespace detail {

// Default move set: cutting a width always cuts every sheet of it, so
// which widths are present evolves independently of sheet counts and a
// state is just the set of widths >= 2. For any finishing sequence, the
// set U of widths ever cut (plus 1) is "sum-closed": it contains the
// start widths, and each cut width splits into two members of U. The
// cost is at least |U| - 1, and conversely cutting U in decreasing
// order finishes in exactly |U| - 1 cuts, so the optimum is the minimal
// sum-closed superset and it suffices to always cut the current
// maximum. Widths fit in [2, 65], hence a state packs into one 64-bit
// mask with bit w-2 for width w.
class StripSetSearch {
public:
    int solve(std::uint64_t mask) {
        if (mask == 0) return 0;
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        int top = 63;
        while (!(mask >> top & 1)) --top;
        unsigned w = static_cast<unsigned>(top) + 2;
        std::uint64_t rest = mask & ~(std::uint64_t{1} << top);
        int best = INT_MAX;
        for (unsigned right = 1; right <= w / 2; ++right) {
            unsigned left = w - right;
            std::uint64_t next = rest;
            if (left >= 2) next |= std::uint64_t{1} << (left - 2);
            if (right >= 2) next |= std::uint64_t{1} << (right - 2);
            best = std::min(best, 1 + solve(next));
        }
        memo_.emplace(mask, best);
        return best;
    }

private:
    std::unordered_map<std::uint64_t, int> memo_;
};

// Subset-exploring variant: any non-empty group of same-width sheets may
// be piled and cut together, so multiplicities matter and the state is
// the full multiset, encoded as sorted (width, count) pairs.
class StripMultisetSearch {
public:
    int solve(std::map<unsigned, std::uint64_t> state) {
        for (auto it = state.begin(); it != state.end();)
            it = it->first == 1 ? state.erase(it) : std::next(it);
        return search(state);
    }

private:
    using State = std::map<unsigned, std::uint64_t>;

    static std::string key_of(const State& s) {
        std::string k;
        for (const auto& [w, n] : s) {
            k += std::to_string(w);
            k += ':';
            k += std::to_string(n);
            k += ';';
        }
        return k;
    }

    int search(const State& s) {
        if (s.empty()) return 0;
        std::string key = key_of(s);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        int best = INT_MAX;
        for (const auto& [w, n] : s) {
            for (std::uint64_t take = 1; take <= n; ++take) {
                for (unsigned right = 1; right <= w / 2; ++right) {
                    unsigned left = w - right;
                    State next = s;
                    if (next[w] == take) next.erase(w); else next[w] -= take;
                    if (left >= 2) next[left] += take;
                    if (right >= 2) next[right] += take;
                    best = std::min(best, 1 + search(next));
                }
            }
        }
        memo_.emplace(std::move(key), best);
        return best;
    }

    std::unordered_map<std::string, int> memo_;
};

} // namespace detail

/**
 * Exact minimum number of piled cuts reducing the given width multiset to
 * unit strips. The default move cuts all sheets of one width at once; with
 * explore_subsets any sub-pile may be cut, which probes whether partial
 * piling can ever win (it never has on tested ranges).
 */
inline int strip_optimal(const std::vector<unsigned>& widths, const StripOptions& options = {}) {
    std::uint64_t total = 0;
    for (unsigned w : widths) {
        if (w < 1) throw std::invalid_argument("strip_optimal: widths must be >= 1");
        total += w;
    }
    if (total > options.limit)
        throw std::invalid_argument("strip_optimal: total width exceeds limit");
    if (options.explore_subsets) {
        std::map<unsigned, std::uint64_t> state;
        for (unsigned w : widths) ++state[w];
        detail::StripMultisetSearch search;
        return search.solve(std::move(state));
    }
    std::uint64_t mask = 0;
    for (unsigned w : widths)
        if (w >= 2) mask |= std::uint64_t{1} << (w - 2);
    detail::StripSetSearch search;
    return search.solve(mask);
}

} // namespace leibniz
