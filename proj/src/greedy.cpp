#include "greedylab/greedy.hpp"

#include <algorithm>
#include <cmath>

namespace greedylab {

bool is_greedy_set(const Vector& x, const IndexSet& lambda) {
    double min_inside = std::numeric_limits<double>::infinity();
    for (Index i : lambda) min_inside = std::min(min_inside, std::abs(x.coef(i)));
    double max_outside = 0.0;
    for (const auto& e : x.entries())
        if (!lambda.contains(e.index)) max_outside = std::max(max_outside, std::abs(e.coef));
    return min_inside >= max_outside;
}

namespace {

// Emits every size-k subset of pool, in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<Index>& pool, std::size_t k, Fn&& fn) {
    if (k > pool.size()) return;
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[i] = i;
    while (true) {
        fn(pos);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (pos[i] != i + pool.size() - k) break;
            if (i == 0) return;
        }
        if (pos[i] == i + pool.size() - k) return;
        ++pos[i];
        for (std::size_t j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

GreedySetFamily enumerate_greedy_sets(const Vector& x, std::size_t m, Index ambient_cap,
                                      std::size_t family_cap) {
    if (ambient_cap < 1) throw std::invalid_argument("ambient_cap must be at least 1");
    if (m > static_cast<std::size_t>(ambient_cap))
        throw std::invalid_argument("m cannot exceed ambient_cap");
    if (!x.is_zero() && x.max_support() > ambient_cap)
        throw std::invalid_argument("vector support must lie within ambient_cap");

    GreedySetFamily fam;
    fam.base_vector = x;
    fam.cardinality = m;
    fam.ambient_cap = ambient_cap;

    if (m == 0) {
        fam.sets.push_back(IndexSet{});
        return fam;
    }

    const std::size_t s = x.support_size();
    if (m <= s) {
        // Threshold structure: indices strictly above the m-th largest
        // magnitude are forced, ties at the threshold fill the rest.
        std::vector<Entry> by_mag(x.entries().begin(), x.entries().end());
        std::stable_sort(by_mag.begin(), by_mag.end(), [](const Entry& a, const Entry& b) {
            return std::abs(a.coef) > std::abs(b.coef);
        });
        double threshold = std::abs(by_mag[m - 1].coef);
        std::vector<Index> forced, ties;
        for (const auto& e : by_mag) {
            if (std::abs(e.coef) > threshold) forced.push_back(e.index);
            else if (std::abs(e.coef) == threshold) ties.push_back(e.index);
        }
        std::sort(ties.begin(), ties.end());
        std::size_t need = m - forced.size();
        if (binomial_capped(ties.size(), need, family_cap) > family_cap)
            throw EnumerationOverflow(family_cap);
        for_each_combination(ties, need, [&](const std::vector<std::size_t>& pos) {
            std::vector<Index> elems = forced;
            for (std::size_t p : pos) elems.push_back(ties[p]);
            fam.sets.push_back(IndexSet(std::move(elems)));
        });
        std::sort(fam.sets.begin(), fam.sets.end());
        return fam;
    }

    // m > support size: the set must swallow the whole support and is
    // completed with zero-coefficient indices.
    std::vector<Index> zeros;
    for (Index i = 1; i <= ambient_cap; ++i)
        if (x.coef(i) == 0.0) zeros.push_back(i);
    std::size_t need = m - s;
    if (binomial_capped(zeros.size(), need, family_cap) > family_cap)
        throw EnumerationOverflow(family_cap);
    std::vector<Index> supp;
    for (const auto& e : x.entries()) supp.push_back(e.index);
    for_each_combination(zeros, need, [&](const std::vector<std::size_t>& pos) {
        std::vector<Index> elems = supp;
        for (std::size_t p : pos) elems.push_back(zeros[p]);
        fam.sets.push_back(IndexSet(std::move(elems)));
    });
    std::sort(fam.sets.begin(), fam.sets.end());
    return fam;
}

Vector project(const Vector& x, const IndexSet& a) {
    return x.restrict_to(a);
}

Vector truncate(const Vector& x, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("truncation level must be positive");
    std::vector<Entry> out;
    out.reserve(x.support_size());
    for (const auto& e : x.entries()) {
        double c = e.coef;
        if (std::abs(c) > alpha) c = c > 0 ? alpha : -alpha;
        out.push_back({e.index, c});
    }
    return Vector(std::move(out));
}

}  // namespace greedylab
