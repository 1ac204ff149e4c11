#include "greedylab/sigma.hpp"

#include <algorithm>
#include <bit>

#include "greedylab/family.hpp"

namespace greedylab {

namespace {

struct Best {
    double value;
    IndexSet minimizer;
    bool seeded = false;

    void offer(double v, IndexSet cand) {
        if (!seeded || v < value || (v == value && cand < minimizer)) {
            value = v;
            minimizer = std::move(cand);
            seeded = true;
        }
    }
};

}  // namespace

SigmaResult sigma_reverse(const Vector& x, const IndexSet& lambda, std::size_t m,
                          const SpaceSpec& space) {
    Best best;
    best.offer(space.norm(x), IndexSet{});

    // Only A's intersection with the support moves the value, so it is
    // enough to range over support indices right of Lambda.
    std::vector<Index> pool;
    for (const auto& e : x.entries())
        if (lambda.empty() || e.index > lambda.max()) pool.push_back(e.index);

    std::size_t limit = std::min(m, pool.size());
    std::vector<std::size_t> chosen;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < pool.size(); ++i) {
            chosen.push_back(i);
            std::vector<Index> elems;
            for (std::size_t c : chosen) elems.push_back(pool[c]);
            IndexSet a(std::move(elems));
            best.offer(space.norm(x.drop(a)), a);
            if (chosen.size() < limit) self(self, i + 1);
            chosen.pop_back();
        }
    };
    if (limit > 0) recurse(recurse, 0);

    return {best.value, best.minimizer, SigmaKind::Reverse};
}

namespace {

SigmaResult interval_infimum(const Vector& x, const IndexSet& lambda, std::size_t m,
                             const SpaceSpec& space, SigmaKind kind) {
    Best best;
    best.offer(space.norm(x), IndexSet{});
    const Index top = x.is_zero() ? 0 : x.max_support();
    const Index max_start = top + 1;
    const bool anchored = !lambda.empty();
    if (m > 0) {
        for (Index start = 1; start <= max_start; ++start) {
            if (kind == SigmaKind::Hat && anchored && start > lambda.min()) break;
            // Lengths past the support horizon repeat the same trace, so
            // the scan stops one step beyond it.
            Index len_cov = top >= start ? top - start + 1 : 1;
            Index len_lo = 1;
            if (kind == SigmaKind::Check && anchored)
                len_lo = std::max<Index>(1, lambda.max() - start + 1);
            if (len_lo > static_cast<Index>(m)) continue;
            Index len_hi = std::min<Index>(static_cast<Index>(m), std::max(len_cov, len_lo));
            for (Index len = len_lo; len <= len_hi; ++len) {
                IndexSet interval = IndexSet::interval(start, start + len - 1);
                best.offer(space.norm(x.drop(interval)), interval);
            }
        }
        // When max Lambda outruns every window interval, the admissible
        // intervals all sit right of the support; one representative
        // witnesses the tie with the empty competitor at ||x||.
        if (kind == SigmaKind::Check && anchored && lambda.max() > top + static_cast<Index>(m)) {
            IndexSet witness = IndexSet::interval(lambda.max(), lambda.max());
            best.offer(space.norm(x.drop(witness)), witness);
        }
    }
    return {best.value, best.minimizer, kind};
}

}  // namespace

SigmaResult sigma_check(const Vector& x, const IndexSet& lambda, std::size_t m,
                        const SpaceSpec& space) {
    return interval_infimum(x, lambda, m, space, SigmaKind::Check);
}

SigmaResult sigma_hat(const Vector& x, const IndexSet& lambda, std::size_t m,
                      const SpaceSpec& space) {
    return interval_infimum(x, lambda, m, space, SigmaKind::Hat);
}

SigmaResult pg_tail(const Vector& x, std::size_t m, const SpaceSpec& space) {
    Best best;
    best.offer(space.norm(x), IndexSet{});
    Index top = x.is_zero() ? 0 : x.max_support();
    for (Index k = 1; k <= std::min<Index>(static_cast<Index>(m), top); ++k) {
        IndexSet head = IndexSet::interval(1, k);
        best.offer(space.norm(x.drop(head)), head);
    }
    return {best.value, best.minimizer, SigmaKind::PgTail};
}

const char* sigma_kind_name(SigmaKind kind) {
    switch (kind) {
        case SigmaKind::Reverse: return "reverse";
        case SigmaKind::Check: return "check";
        case SigmaKind::Hat: return "hat";
        case SigmaKind::PgTail: return "pg-tail";
    }
    return "?";
}

double sigma_reverse_value(const MaskNormTable& table, Index max_lambda, std::size_t m) {
    const Vector& x = table.vector();
    double best = table.full_norm();  // empty competitor
    if (m == 0 || x.is_zero()) return best;
    std::uint32_t pool = table.range_mask(max_lambda + 1, x.max_support());
    // Submask walk over support indices right of Lambda.
    std::uint32_t sub = pool;
    while (sub != 0) {
        if (static_cast<std::size_t>(std::popcount(sub)) <= m)
            best = std::min(best, table.drop_norm(sub));
        sub = (sub - 1) & pool;
    }
    return best;
}

double sigma_check_value(const MaskNormTable& table, Index max_lambda, std::size_t m) {
    const Vector& x = table.vector();
    double best = table.full_norm();
    if (m == 0) return best;
    const Index top = x.is_zero() ? 0 : x.max_support();
    for (Index start = 1; start <= top + 1; ++start) {
        Index len_cov = top >= start ? top - start + 1 : 1;
        Index len_lo = std::max<Index>(1, max_lambda - start + 1);
        if (len_lo > static_cast<Index>(m)) continue;
        Index len_hi = std::min<Index>(static_cast<Index>(m), std::max(len_cov, len_lo));
        for (Index len = len_lo; len <= len_hi; ++len)
            best = std::min(best, table.drop_norm(table.range_mask(start, start + len - 1)));
    }
    return best;
}

double sigma_hat_value(const MaskNormTable& table, Index min_lambda, std::size_t m) {
    const Vector& x = table.vector();
    double best = table.full_norm();
    if (m == 0) return best;
    const Index top = x.is_zero() ? 0 : x.max_support();
    Index start_hi = min_lambda > 0 ? std::min(min_lambda, top + 1) : top + 1;
    for (Index start = 1; start <= start_hi; ++start) {
        Index len_cov = top >= start ? top - start + 1 : 1;
        Index len_hi = std::min<Index>(static_cast<Index>(m), len_cov);
        for (Index len = 1; len <= len_hi; ++len)
            best = std::min(best, table.drop_norm(table.range_mask(start, start + len - 1)));
    }
    return best;
}

double pg_tail_value(const MaskNormTable& table, std::size_t m) {
    const Vector& x = table.vector();
    double best = table.full_norm();
    const auto& es = x.entries();
    for (std::size_t j = 0; j < es.size(); ++j) {
        if (es[j].index > static_cast<Index>(m)) break;
        std::uint32_t head = (j + 1 >= 32) ? ~0u : ((1u << (j + 1)) - 1u);
        best = std::min(best, table.drop_norm(head));
    }
    return best;
}

}  // namespace greedylab
