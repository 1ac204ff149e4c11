// Independent reference implementations used only by tests: naive
// full-range enumerators with no support-restriction shortcuts, plus a
// random-bijection evaluator for the two-weight norm. These deliberately
// share no code with the library paths they cross-check.
#ifndef GREEDYLAB_TESTS_ORACLES_HPP
#define GREEDYLAB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "greedylab/core.hpp"
#include "greedylab/space.hpp"

namespace greedylab::oracles {

// All subsets of [1..cap] of size <= m with A > Lambda, plus the empty set.
inline double naive_sigma_reverse(const Vector& x, const IndexSet& lambda, std::size_t m,
                                  const SpaceSpec& space, Index cap) {
    double best = space.norm(x);
    std::vector<Index> pool;
    for (Index i = 1; i <= cap; ++i)
        if (lambda.empty() || i > lambda.max()) pool.push_back(i);
    std::vector<Index> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            best = std::min(best, space.norm(x.drop(IndexSet(std::vector<Index>(chosen)))));
            if (chosen.size() < m) self(self, i + 1);
            chosen.pop_back();
        }
    };
    if (m > 0) rec(rec, 0);
    return best;
}

// All intervals with start in [1..cap+1] and length <= m, plus the empty set.
inline double naive_sigma_interval(const Vector& x, const IndexSet& lambda, std::size_t m,
                                   const SpaceSpec& space, Index cap, bool anchor_max) {
    double best = space.norm(x);
    for (Index start = 1; start <= cap + 1; ++start) {
        for (std::size_t len = 1; len <= m; ++len) {
            Index end = start + static_cast<Index>(len) - 1;
            if (anchor_max) {
                if (!lambda.empty() && end < lambda.max()) continue;
            } else {
                if (!lambda.empty() && start > lambda.min()) continue;
            }
            best = std::min(best, space.norm(x.drop(IndexSet::interval(start, end))));
        }
    }
    // one far-right representative: admissible under the max-anchor when
    // the window above cannot reach it
    if (anchor_max && !lambda.empty())
        best = std::min(best,
                        space.norm(x.drop(IndexSet::interval(lambda.max(), lambda.max()))));
    return best;
}

inline double naive_pg_tail(const Vector& x, std::size_t m, const SpaceSpec& space) {
    double best = space.norm(x);
    for (std::size_t k = 1; k <= m; ++k)
        best = std::min(best, space.norm(x.drop(IndexSet::interval(1, static_cast<Index>(k)))));
    return best;
}

inline bool is_greedy_set_naive(const Vector& x, const IndexSet& lambda) {
    double lo = std::numeric_limits<double>::infinity();
    for (Index i : lambda) lo = std::min(lo, std::abs(x.coef(i)));
    double hi = 0.0;
    for (const auto& e : x.entries())
        if (!lambda.contains(e.index)) hi = std::max(hi, std::abs(e.coef));
    return lo >= hi;
}

// All size-m subsets of [1..cap] satisfying the greedy inequality.
inline std::vector<IndexSet> naive_greedy_sets(const Vector& x, std::size_t m, Index cap) {
    std::vector<IndexSet> out;
    std::vector<Index> chosen;
    auto rec = [&](auto&& self, Index start) -> void {
        if (chosen.size() == m) {
            IndexSet cand{std::vector<Index>(chosen)};
            if (is_greedy_set_naive(x, cand)) out.push_back(cand);
            return;
        }
        for (Index i = start; i <= cap; ++i) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

// One random bijection assignment of weight ranks to the coefficients;
// never exceeds the sorted pairing.
inline double random_bijection_value(const Vector& x, std::mt19937_64& rng) {
    std::vector<double> heavy, light;
    for (const auto& e : x.entries())
        (on_heavy_set(e.index) ? heavy : light).push_back(std::abs(e.coef));
    // random distinct ranks, biased toward small ones so the draw has a
    // real chance of hitting the optimum
    auto draw_ranks = [&](std::size_t n) {
        std::vector<int> ranks;
        std::uniform_int_distribution<int> pick(1, static_cast<int>(2 * n + 4));
        while (ranks.size() < n) {
            int r = pick(rng);
            if (std::find(ranks.begin(), ranks.end(), r) == ranks.end()) ranks.push_back(r);
        }
        return ranks;
    };
    double total = 0.0;
    auto ranks_h = draw_ranks(heavy.size());
    for (std::size_t i = 0; i < heavy.size(); ++i)
        total += heavy[i] / std::sqrt(static_cast<double>(ranks_h[i]));
    auto ranks_l = draw_ranks(light.size());
    for (std::size_t i = 0; i < light.size(); ++i)
        total += light[i] / static_cast<double>(ranks_l[i]);
    return total;
}

}  // namespace greedylab::oracles

#endif
