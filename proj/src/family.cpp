#include "greedylab/family.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "greedylab/greedy.hpp"

namespace greedylab {

SearchFamily SearchFamily::defaults() { return SearchFamily{}; }

SearchFamily SearchFamily::small(Index cap) {
    SearchFamily f;
    f.ambient_cap = cap;
    f.support_size_max = 3;
    f.coefficient_grid = {0.5, 1.0};
    f.set_size_max = 2;
    f.competitor_size_max = 4;
    return f;
}

SearchFamily SearchFamily::with_coef_cap(double cap) const {
    SearchFamily f = *this;
    std::erase_if(f.coefficient_grid, [cap](double c) { return c > cap; });
    return f;
}

std::string SearchFamily::description() const {
    std::ostringstream out;
    out << "grid family: ambient=[1.." << ambient_cap << "], support<=" << support_size_max
        << ", |coef| in {";
    for (std::size_t i = 0; i < coefficient_grid.size(); ++i) {
        if (i) out << ",";
        out << coefficient_grid[i];
    }
    out << "}, signs " << (signed_patterns ? "+-" : "+") << ", sets<=" << set_size_max
        << ", competitors<=" << competitor_size_max;
    return out.str();
}

std::vector<std::vector<Index>> SearchFamily::support_combos() const {
    std::vector<std::vector<Index>> combos;
    combos.push_back({});
    std::vector<Index> cur;
    auto recurse = [&](auto&& self, Index start) -> void {
        for (Index i = start; i <= ambient_cap; ++i) {
            cur.push_back(i);
            combos.push_back(cur);
            if (cur.size() < support_size_max) self(self, i + 1);
            cur.pop_back();
        }
    };
    if (support_size_max > 0) recurse(recurse, 1);
    // Depth-first emits by prefix; regroup by size, lexicographic inside.
    std::stable_sort(combos.begin(), combos.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return combos;
}

void SearchFamily::for_each_on_support(const std::vector<Index>& support,
                                       const std::function<void(const Vector&)>& fn) const {
    const std::size_t s = support.size();
    if (s == 0) {
        fn(Vector{});
        return;
    }
    if (coefficient_grid.empty()) return;
    const std::size_t choices = coefficient_grid.size() * (signed_patterns ? 2 : 1);
    std::vector<std::size_t> odo(s, 0);
    std::vector<Entry> entries(s);
    while (true) {
        for (std::size_t i = 0; i < s; ++i) {
            double mag = coefficient_grid[odo[i] % coefficient_grid.size()];
            double sign = (signed_patterns && odo[i] >= coefficient_grid.size()) ? -1.0 : 1.0;
            entries[i] = {support[i], sign * mag};
        }
        fn(Vector(std::vector<Entry>(entries)));
        std::size_t pos = 0;
        while (pos < s && ++odo[pos] == choices) {
            odo[pos] = 0;
            ++pos;
        }
        if (pos == s) break;
    }
}

std::size_t SearchFamily::count_vectors() const {
    const std::size_t choices = coefficient_grid.size() * (signed_patterns ? 2 : 1);
    std::size_t total = 1;  // zero vector
    std::size_t per_size = 1;
    for (std::size_t k = 1; k <= support_size_max; ++k) {
        per_size *= choices;
        total += combination_count_capped(static_cast<std::size_t>(ambient_cap), k,
                                          SIZE_MAX / (per_size ? per_size : 1)) *
                 per_size;
    }
    return total;
}

std::vector<Vector> random_vectors(Index ambient_cap, std::size_t count,
                                   std::size_t support_min, std::size_t support_max,
                                   double lo, double hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_size(support_min, support_max);
    std::uniform_real_distribution<double> pick_mag(lo, hi);
    std::vector<Vector> out;
    out.reserve(count);
    std::vector<Index> pool(static_cast<std::size_t>(ambient_cap));
    for (Index i = 1; i <= ambient_cap; ++i) pool[static_cast<std::size_t>(i - 1)] = i;
    while (out.size() < count) {
        std::size_t s = std::min(pick_size(rng), pool.size());
        // Partial Fisher-Yates draw of s distinct indices.
        for (std::size_t i = 0; i < s; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        std::vector<Entry> es;
        for (std::size_t i = 0; i < s; ++i) {
            double mag = pick_mag(rng);
            double sign = (rng() & 1) ? 1.0 : -1.0;
            if (mag != 0.0) es.push_back({pool[i], sign * mag});
        }
        out.push_back(Vector(std::move(es)));
    }
    return out;
}

MaskNormTable::MaskNormTable(const Vector& x, const SpaceSpec& space) : x_(&x) {
    const std::size_t s = x.support_size();
    if (s > kMaxSupport) throw std::invalid_argument("support too large for mask table");
    full_ = s == 32 ? ~0u : (1u << s) - 1u;
    norms_.resize(std::size_t{1} << s);
    std::vector<Entry> scratch;
    scratch.reserve(s);
    for (std::uint32_t mask = 0; mask <= full_; ++mask) {
        scratch.clear();
        for (std::size_t i = 0; i < s; ++i)
            if (mask >> i & 1) scratch.push_back(x.entries()[i]);
        norms_[mask] = space.norm(std::span<const Entry>(scratch));
        if (mask == full_) break;
    }
}

std::uint32_t MaskNormTable::range_mask(Index lo, Index hi) const {
    const auto& es = x_->entries();
    std::size_t first = std::lower_bound(es.begin(), es.end(), lo,
                                         [](const Entry& e, Index v) { return e.index < v; }) -
                        es.begin();
    std::size_t last = std::upper_bound(es.begin(), es.end(), hi,
                                        [](Index v, const Entry& e) { return v < e.index; }) -
                       es.begin();
    std::uint32_t mask = 0;
    for (std::size_t i = first; i < last; ++i) mask |= 1u << i;
    return mask;
}

Vector MaskNormTable::materialize(std::uint32_t mask) const {
    std::vector<Entry> es;
    for (std::size_t i = 0; i < x_->support_size(); ++i)
        if (mask >> i & 1) es.push_back(x_->entries()[i]);
    return Vector(std::move(es));
}

void for_each_greedy_mask(const Vector& x, std::size_t m,
                          const std::function<void(std::uint32_t, Index, Index)>& fn,
                          std::size_t family_cap) {
    const auto& es = x.entries();
    const std::size_t s = es.size();
    if (m == 0 || m > s) {
        if (m == 0) fn(0, 0, 0);
        return;
    }
    std::vector<std::size_t> order(s);
    for (std::size_t i = 0; i < s; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(es[a].coef) > std::abs(es[b].coef);
    });
    double threshold = std::abs(es[order[m - 1]].coef);
    std::uint32_t forced = 0;
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < s; ++i) {
        double mag = std::abs(es[i].coef);
        if (mag > threshold) forced |= 1u << i;
        else if (mag == threshold) ties.push_back(i);
    }
    std::size_t need = m - static_cast<std::size_t>(std::popcount(forced));
    if (combination_count_capped(ties.size(), need, family_cap) > family_cap)
        throw EnumerationOverflow(family_cap);
    std::vector<std::size_t> pos(need);
    for (std::size_t i = 0; i < need; ++i) pos[i] = i;
    auto emit = [&] {
        std::uint32_t mask = forced;
        for (std::size_t p : pos) mask |= 1u << ties[p];
        Index min_idx = 0, max_idx = 0;
        for (std::size_t i = 0; i < s; ++i)
            if (mask >> i & 1) {
                if (min_idx == 0) min_idx = es[i].index;
                max_idx = es[i].index;
            }
        fn(mask, min_idx, max_idx);
    };
    if (need == 0) {
        emit();
        return;
    }
    while (true) {
        emit();
        std::size_t i = need;
        bool done = false;
        while (true) {
            if (i == 0) { done = true; break; }
            --i;
            if (pos[i] != i + ties.size() - need) break;
        }
        if (done) break;
        ++pos[i];
        for (std::size_t j = i + 1; j < need; ++j) pos[j] = pos[j - 1] + 1;
    }
}

void for_each_index_subset(Index cap, std::size_t min_size, std::size_t max_size,
                           const std::function<void(const IndexSet&)>& fn) {
    if (min_size == 0) fn(IndexSet{});
    if (max_size == 0) return;
    std::vector<Index> cur;
    auto recurse = [&](auto&& self, Index start) -> void {
        for (Index i = start; i <= cap; ++i) {
            cur.push_back(i);
            if (cur.size() >= min_size) fn(IndexSet(std::vector<Index>(cur)));
            if (cur.size() < max_size) self(self, i + 1);
            cur.pop_back();
        }
    };
    recurse(recurse, 1);
}

std::size_t combination_count_capped(std::size_t n, std::size_t k, std::size_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace greedylab
