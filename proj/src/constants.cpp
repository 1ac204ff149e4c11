#include "greedylab/constants.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include "greedylab/greedy.hpp"
#include "greedylab/parallel.hpp"
#include "greedylab/sigma.hpp"

namespace greedylab {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace

std::string vector_literal(const Vector& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& e : x.entries()) {
        if (!out.empty()) out += ",";
        out += std::to_string(e.index) + ":" + fmt_double(e.coef);
    }
    return out;
}

std::string set_literal(const IndexSet& a) {
    std::string out = "{";
    bool first = true;
    for (Index i : a) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + "}";
}

namespace {

// Running maximum of defining ratios with the spec'd conventions:
// 0/0 counts as 1 (vacuous inequality), positive/0 is an unbounded
// witness. Ties keep the first tuple in enumeration order.
struct BestRatio {
    double raw = -1.0;
    Witness witness;
    bool unbounded = false;
    Witness unbounded_witness;

    template <typename MakeWitness>
    void offer(double num, double den, MakeWitness&& make) {
        if (den > 0.0) {
            double r = num / den;
            if (r > raw) {
                raw = r;
                witness = make();
            }
        } else if (num == 0.0) {
            if (1.0 > raw) {
                raw = 1.0;
                witness = make();
            }
        } else if (!unbounded) {
            unbounded = true;
            unbounded_witness = make();
        }
    }

    void merge(const BestRatio& o) {
        if (o.raw > raw) {
            raw = o.raw;
            witness = o.witness;
        }
        if (!unbounded && o.unbounded) {
            unbounded = true;
            unbounded_witness = o.unbounded_witness;
        }
    }
};

ConstantEstimate finish(std::string name, const BestRatio& best, bool clamp_at_one, bool exact,
                        std::string family, std::string lambda) {
    ConstantEstimate est;
    est.name = std::move(name);
    est.raw_max = std::max(best.raw, 0.0);
    double floor = clamp_at_one ? 1.0 : 0.0;
    est.value = std::max(est.raw_max, floor);
    est.clamped = est.value > est.raw_max || best.raw < 0.0;
    est.exact = exact;
    est.unbounded = best.unbounded;
    est.witness = best.witness;
    est.unbounded_witness = best.unbounded_witness;
    est.family = std::move(family);
    est.lambda = std::move(lambda);
    return est;
}

IndexSet mask_to_set(const Vector& x, std::uint32_t mask) {
    std::vector<Index> elems;
    for (std::size_t i = 0; i < x.support_size(); ++i)
        if (mask >> i & 1) elems.push_back(x.entries()[i].index);
    return IndexSet(std::move(elems));
}

// Parallel walk over the whole grid family; per_vec accumulates into the
// block-local best, partials merge in block order.
template <typename PerVector>
BestRatio search_grid_family(const SearchFamily& fam, PerVector per_vec) {
    auto combos = fam.support_combos();
    auto partials = run_blocks<BestRatio>(combos.size(), [&](std::size_t b) {
        BestRatio best;
        fam.for_each_on_support(combos[b], [&](const Vector& x) { per_vec(x, best); });
        return best;
    });
    BestRatio best;
    for (auto& p : partials) best.merge(p);
    return best;
}

// Subsets of a fixed pool with sizes in [lo, hi], lexicographic.
void for_each_pool_subset(const std::vector<Index>& pool, std::size_t lo, std::size_t hi,
                          const std::function<void(const std::vector<Index>&)>& fn) {
    if (lo == 0) {
        static const std::vector<Index> empty;
        fn(empty);
    }
    if (hi == 0) return;
    std::vector<Index> cur;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            if (cur.size() >= std::max<std::size_t>(lo, 1)) fn(cur);
            if (cur.size() < hi) self(self, i + 1);
            cur.pop_back();
        }
    };
    recurse(recurse, 0);
}

Vector add_signed_indicator(const Vector& x, const std::vector<Index>& set, std::uint64_t sign_mask) {
    std::vector<Entry> extra;
    extra.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i)
        extra.push_back({set[i], (sign_mask >> i & 1) ? -1.0 : 1.0});
    return x.plus(Vector(std::move(extra)));
}

}  // namespace

// ---------------------------------------------------------------------------
// Quasi-greedy and suppression constants.

namespace {

ConstantEstimate greedy_projection_estimate(const SpaceSpec& space, const SearchFamily& fam,
                                            bool suppression) {
    BestRatio best = search_grid_family(fam, [&](const Vector& x, BestRatio& b) {
        if (x.is_zero()) return;
        MaskNormTable table(x, space);
        double nx = table.full_norm();
        // Sets larger than the support swallow it entirely: the projection
        // ratio is exactly 1 and the remainder ratio 0, neither of which can
        // move the clamped maximum, so m stops at the support size.
        for (std::size_t m = 1; m <= x.support_size(); ++m) {
            for_each_greedy_mask(x, m, [&](std::uint32_t mask, Index, Index) {
                double num = suppression ? table.drop_norm(mask) : table.mask_norm(mask);
                b.offer(num, nx, [&] {
                    Witness w;
                    w.lhs = table.materialize(suppression ? (table.full_mask() & ~mask) : mask);
                    w.rhs = x;
                    w.base = x;
                    w.set_a = mask_to_set(x, mask);
                    w.detail = "x=" + vector_literal(x) + "; m=" + std::to_string(m) +
                               "; Lambda=" + set_literal(w.set_a);
                    w.valid = true;
                    return w;
                });
            });
        }
    });
    return finish(suppression ? "suppression" : "quasi-greedy", best, true, false,
                  fam.description(), "");
}

}  // namespace

ConstantEstimate estimate_quasi_greedy(const SpaceSpec& space, const SearchFamily& family) {
    return greedy_projection_estimate(space, family, false);
}

ConstantEstimate estimate_suppression(const SpaceSpec& space, const SearchFamily& family) {
    return greedy_projection_estimate(space, family, true);
}

// ---------------------------------------------------------------------------
// Indicator-pair constants (exact within [1..N]).

namespace {

constexpr Index kGenericPairLimit = 20;

struct PairBest {
    double raw = -1.0;
    IndexSet a, b;

    void offer(double ratio, const IndexSet& A, const IndexSet& B) {
        if (ratio > raw) {
            raw = ratio;
            a = A;
            b = B;
        }
    }
};

// Exact enumeration of all admissible pairs via bitmasks; bit i is index
// i+1. `reverse_order` places B left of A; otherwise A left of B.
PairBest pair_search_generic(const SpaceSpec& space, Index n, const Rational& lambda,
                             bool reverse_order) {
    if (n > kGenericPairLimit)
        throw std::invalid_argument(
            "exact indicator-pair search by mask enumeration is limited to N <= 20; "
            "the counterexample space has a count-based path for larger N");
    const std::size_t bits = static_cast<std::size_t>(n);
    std::vector<double> norm1(std::size_t{1} << bits);
    std::vector<Entry> scratch;
    for (std::uint32_t mask = 1; mask < norm1.size(); ++mask) {
        scratch.clear();
        for (std::size_t i = 0; i < bits; ++i)
            if (mask >> i & 1) scratch.push_back({static_cast<Index>(i + 1), 1.0});
        norm1[mask] = space.norm(std::span<const Entry>(scratch));
    }

    PairBest best;
    // boundary: the right set's minimum element is `pivot` (1-based).
    for (Index pivot = 2; pivot <= n; ++pivot) {
        const std::size_t right_bits = static_cast<std::size_t>(n - pivot);
        const std::uint32_t pivot_bit = 1u << (pivot - 1);
        const std::uint32_t left_full = pivot_bit - 1u;
        for (std::uint32_t rest = 0; rest < (1u << right_bits); ++rest) {
            std::uint32_t right = (rest << pivot) | pivot_bit;
            int right_count = std::popcount(right);
            Index right_span = rest == 0
                                   ? 1
                                   : (static_cast<Index>(std::bit_width(rest)) + pivot) - pivot + 1;
            for (std::uint32_t left = 1; left <= left_full; ++left) {
                int left_count = std::popcount(left);
                std::uint32_t a_mask, b_mask;
                std::int64_t need;
                if (reverse_order) {  // B = left, A = right
                    a_mask = right;
                    b_mask = left;
                    need = lambda.min_competitor_size(right_span, right_count);
                    if (left_count < need) continue;
                } else {  // A = left, B = right
                    a_mask = left;
                    b_mask = right;
                    Index left_span = static_cast<Index>(std::bit_width(left)) -
                                      static_cast<Index>(std::countr_zero(left));
                    need = lambda.min_competitor_size(left_span, left_count);
                    if (right_count < need) continue;
                }
                double ratio = norm1[a_mask] / norm1[b_mask];
                if (ratio > best.raw) {
                    std::vector<Index> ae, be;
                    for (Index i = 1; i <= n; ++i) {
                        if (a_mask >> (i - 1) & 1) ae.push_back(i);
                        if (b_mask >> (i - 1) & 1) be.push_back(i);
                    }
                    best.offer(ratio, IndexSet(std::move(ae)), IndexSet(std::move(be)));
                }
            }
        }
    }
    return best;
}

std::vector<Index> powers_of_two_upto(Index n) {
    std::vector<Index> p;
    for (Index v = 1; v <= n; v *= 2) {
        p.push_back(v);
        if (v > n / 2) break;
    }
    return p;
}

Index count_powers_in(Index lo, Index hi) {
    Index c = 0;
    for (Index v = 1; v <= hi; v *= 2) {
        if (v >= lo) ++c;
        if (v > hi / 2) break;
    }
    return c;
}

// Exact count-structured search for the counterexample space: the norm of
// an indicator depends only on its membership counts, so pairs collapse to
// (min A, max A, counts) classes with the competitor minimized over its
// own split.
PairBest pair_search_counterexample(Index n, const Rational& lambda,
                                    const IndicatorNormTable& table) {
    PairBest best;
    for (Index alpha = 2; alpha <= n; ++alpha) {
        const Index d_left = count_powers_in(1, alpha - 1);
        const Index o_left = (alpha - 1) - d_left;
        for (Index omega = alpha; omega <= n; ++omega) {
            const Index span = omega - alpha + 1;
            const Index d_win = count_powers_in(alpha, omega);
            const Index o_win = span - d_win;
            // Endpoints are members of A by definition of the window.
            Index need_d = 0, need_o = 0;
            if (span == 1) {
                (on_heavy_set(alpha) ? need_d : need_o) = 1;
            } else {
                need_d = (on_heavy_set(alpha) ? 1 : 0) + (on_heavy_set(omega) ? 1 : 0);
                need_o = 2 - need_d;
            }
            if (need_d > d_win || need_o > o_win) continue;
            for (Index a = need_d; a <= d_win; ++a) {
                for (Index b = need_o; b <= o_win; ++b) {
                    if (a + b == 0) continue;
                    std::int64_t k = lambda.min_competitor_size(span, a + b);
                    if (k < 1) k = 1;
                    if (k > alpha - 1) continue;  // no room left of A
                    // cheapest competitor of size k left of alpha
                    double den = std::numeric_limits<double>::infinity();
                    Index best_split = -1;
                    Index split_lo = std::max<Index>(0, k - o_left);
                    Index split_hi = std::min<Index>(k, d_left);
                    for (Index ab = split_lo; ab <= split_hi; ++ab) {
                        double v = table.indicator_norm(ab, k - ab);
                        if (v < den) {
                            den = v;
                            best_split = ab;
                        }
                    }
                    if (best_split < 0) continue;
                    double num = table.indicator_norm(a, b);
                    double ratio = num / den;
                    if (ratio > best.raw) {
                        // materialize a representative pair
                        std::vector<Index> ae, be;
                        ae.push_back(alpha);
                        if (span > 1) ae.push_back(omega);
                        Index got_d = need_d, got_o = need_o;
                        for (Index v = alpha; v <= omega && (got_d < a || got_o < b); ++v) {
                            if (v == alpha || v == omega) continue;
                            if (on_heavy_set(v) && got_d < a) {
                                ae.push_back(v);
                                ++got_d;
                            } else if (!on_heavy_set(v) && got_o < b) {
                                ae.push_back(v);
                                ++got_o;
                            }
                        }
                        Index picked_d = 0, picked_o = 0;
                        for (Index v = 1; v < alpha && (picked_d < best_split ||
                                                        picked_o < k - best_split); ++v) {
                            if (on_heavy_set(v) && picked_d < best_split) {
                                be.push_back(v);
                                ++picked_d;
                            } else if (!on_heavy_set(v) && picked_o < k - best_split) {
                                be.push_back(v);
                                ++picked_o;
                            }
                        }
                        best.offer(ratio, IndexSet(std::move(ae)), IndexSet(std::move(be)));
                    }
                }
            }
        }
    }
    return best;
}

ConstantEstimate indicator_pair_estimate(const SpaceSpec& space, Index n, const Rational& lambda,
                                         bool reverse_order, std::string name) {
    if (n < 1) throw std::invalid_argument("N must be at least 1");
    if (!lambda.at_least_one()) throw std::invalid_argument("lambda must be at least 1");
    PairBest best;
    if (reverse_order && space.kind == SpaceKind::Counterexample) {
        IndicatorNormTable table(n + 1);
        best = pair_search_counterexample(n, lambda, table);
    } else {
        best = pair_search_generic(space, n, lambda, reverse_order);
    }
    BestRatio ratio_best;
    if (best.raw >= 0.0) {
        Witness w;
        w.lhs = indicator(best.a);
        w.rhs = indicator(best.b);
        w.set_a = best.a;
        w.set_b = best.b;
        w.detail = "A=" + set_literal(best.a) + "; B=" + set_literal(best.b);
        w.valid = true;
        // the count-path table may differ from the canonical norm in the
        // last bit; the reported value is the witness's own ratio
        ratio_best.raw = space.norm(w.lhs) / space.norm(w.rhs);
        ratio_best.witness = w;
    }
    std::ostringstream family;
    family << "all admissible indicator pairs in [1.." << n << "]";
    ConstantEstimate est = finish(std::move(name), ratio_best, false, true, family.str(),
                                  lambda == Rational(1, 1) ? "" : lambda.str());
    return est;
}

}  // namespace

ConstantEstimate estimate_reverse_conservative(const SpaceSpec& space, Index n) {
    return indicator_pair_estimate(space, n, Rational(1, 1), true, "reverse-conservative");
}

ConstantEstimate estimate_conservative(const SpaceSpec& space, Index n) {
    return indicator_pair_estimate(space, n, Rational(1, 1), false, "conservative");
}

ConstantEstimate estimate_lambda_reverse_conservative(const SpaceSpec& space, Rational lambda,
                                                      Index n) {
    return indicator_pair_estimate(space, n, lambda, true, "lambda-reverse-conservative");
}

// ---------------------------------------------------------------------------
// Reverse partial symmetry for largest coefficients.

namespace {

std::vector<Index> complement_pool(Index lo, Index hi, const IndexSet& excluded) {
    std::vector<Index> pool;
    for (Index i = lo; i <= hi; ++i)
        if (!excluded.contains(i)) pool.push_back(i);
    return pool;
}

}  // namespace

ConstantEstimate estimate_rpslc(const SpaceSpec& space, Rational lambda,
                                const SearchFamily& family) {
    if (!lambda.at_least_one()) throw std::invalid_argument("lambda must be at least 1");
    SearchFamily fam = family.with_coef_cap(1.0);
    const Index cap = fam.ambient_cap;

    BestRatio best = search_grid_family(fam, [&](const Vector& x, BestRatio& b) {
        IndexSet supp = x.support();
        double nx = space.norm(x);

        // A empty: B may sit anywhere disjoint from the support. Small
        // competitor blocks carry the phenomenon; the family bounds them.
        {
            std::vector<Index> pool = complement_pool(1, cap, supp);
            std::size_t b_hi = std::min<std::size_t>(2, fam.competitor_size_max);
            for_each_pool_subset(pool, 0, b_hi, [&](const std::vector<Index>& bset) {
                std::uint64_t sign_count = std::uint64_t{1} << bset.size();
                for (std::uint64_t delta = 0; delta < sign_count; ++delta) {
                    Vector rhs = add_signed_indicator(x, bset, delta);
                    b.offer(nx, space.norm(rhs), [&] {
                        Witness w;
                        w.lhs = x;
                        w.rhs = rhs;
                        w.base = x;
                        w.set_b = IndexSet(std::vector<Index>(bset));
                        w.detail = "x=" + vector_literal(x) + "; A={}; B=" + set_literal(w.set_b);
                        w.valid = true;
                        return w;
                    });
                }
            });
        }

        for_each_index_subset(cap, 1, fam.set_size_max, [&](const IndexSet& aset) {
            if (!surrounds(x, aset)) return;
            std::int64_t min_b = lambda.min_competitor_size(aset.span_length(),
                                                            static_cast<std::int64_t>(aset.size()));
            if (min_b > static_cast<std::int64_t>(fam.competitor_size_max)) return;
            std::vector<Index> pool = complement_pool(1, aset.min() - 1, supp);
            if (static_cast<std::int64_t>(pool.size()) < min_b) return;

            // Competitors run at the minimal admissible size: enlarging B
            // past it never raises the ratio in a 1-unconditional norm.
            // numerator maximized over the signs on A
            std::vector<Index> a_elems(aset.begin(), aset.end());
            double num = -1.0;
            Vector num_vec;
            std::uint64_t eps_count = std::uint64_t{1} << a_elems.size();
            for (std::uint64_t eps = 0; eps < eps_count; ++eps) {
                Vector cand = add_signed_indicator(x, a_elems, eps);
                double v = space.norm(cand);
                if (v > num) {
                    num = v;
                    num_vec = cand;
                }
            }

            for_each_pool_subset(pool, static_cast<std::size_t>(min_b),
                                 static_cast<std::size_t>(min_b),
                                 [&](const std::vector<Index>& bset) {
                std::uint64_t sign_count = std::uint64_t{1} << bset.size();
                for (std::uint64_t delta = 0; delta < sign_count; ++delta) {
                    Vector rhs = add_signed_indicator(x, bset, delta);
                    b.offer(num, space.norm(rhs), [&] {
                        Witness w;
                        w.lhs = num_vec;
                        w.rhs = rhs;
                        w.base = x;
                        w.set_a = aset;
                        w.set_b = IndexSet(std::vector<Index>(bset));
                        w.detail = "x=" + vector_literal(x) + "; A=" + set_literal(aset) +
                                   "; B=" + set_literal(w.set_b);
                        w.valid = true;
                        return w;
                    });
                }
            });
        });
    });

    ConstantEstimate est = finish("rpslc", best, true, false,
                                  fam.description() + "; competitors at minimal admissible size",
                                  lambda.str());
    return est;
}

ConstantEstimate estimate_rpslc_remainder(const SpaceSpec& space, Rational lambda,
                                          const SearchFamily& family) {
    if (!lambda.at_least_one()) throw std::invalid_argument("lambda must be at least 1");
    SearchFamily fam = family.with_coef_cap(1.0);
    const Index cap = fam.ambient_cap;

    BestRatio best = search_grid_family(fam, [&](const Vector& x, BestRatio& b) {
        double nx = space.norm(x);
        for_each_index_subset(cap, 0, fam.set_size_max, [&](const IndexSet& aset) {
            Vector remainder = x.drop(aset);
            if (!surrounds(remainder, aset)) return;
            std::int64_t min_b = lambda.min_competitor_size(aset.span_length(),
                                                            static_cast<std::int64_t>(aset.size()));
            if (min_b > static_cast<std::int64_t>(fam.competitor_size_max)) return;
            IndexSet rem_supp = remainder.support();
            std::vector<Index> pool = aset.empty()
                                          ? complement_pool(1, cap, rem_supp)
                                          : complement_pool(1, aset.min() - 1, rem_supp);
            if (static_cast<std::int64_t>(pool.size()) < min_b) return;
            std::size_t b_lo = static_cast<std::size_t>(std::max<std::int64_t>(min_b, 0));
            std::size_t b_hi = aset.empty() ? std::min<std::size_t>(2, fam.competitor_size_max)
                                            : b_lo;
            for_each_pool_subset(pool, b_lo, b_hi, [&](const std::vector<Index>& bset) {
                std::uint64_t sign_count = std::uint64_t{1} << bset.size();
                for (std::uint64_t eps = 0; eps < sign_count; ++eps) {
                    Vector rhs = add_signed_indicator(remainder, bset, eps);
                    b.offer(nx, space.norm(rhs), [&] {
                        Witness w;
                        w.lhs = x;
                        w.rhs = rhs;
                        w.base = x;
                        w.set_a = aset;
                        w.set_b = IndexSet(std::vector<Index>(bset));
                        w.detail = "x=" + vector_literal(x) + "; A=" + set_literal(aset) +
                                   "; B=" + set_literal(w.set_b);
                        w.valid = true;
                        return w;
                    });
                }
            });
        });
    });

    return finish("rpslc-remainder", best, true, false,
                  fam.description() + "; competitors at minimal admissible size", lambda.str());
}

// ---------------------------------------------------------------------------
// Greedy-remainder vs competitor functionals.

namespace {

enum class CompetitorKind { ReverseSets, CheckIntervals, HatIntervals, InitialSegments };

ConstantEstimate remainder_vs_competitor(const SpaceSpec& space, const Rational& lambda,
                                         const SearchFamily& fam, CompetitorKind kind,
                                         std::string name) {
    BestRatio best = search_grid_family(fam, [&](const Vector& x, BestRatio& b) {
        if (x.is_zero()) return;
        MaskNormTable table(x, space);
        const std::size_t s = x.support_size();
        for (std::size_t m = 1;; ++m) {
            std::size_t greedy_size = static_cast<std::size_t>(
                lambda.ceil_mul(static_cast<std::int64_t>(m)));
            // Greedy sets larger than the support have zero remainder;
            // those tuples cannot move a maximum clamped at 1.
            if (greedy_size > s) break;
            for_each_greedy_mask(x, greedy_size, [&](std::uint32_t mask, Index lo, Index hi) {
                double num = table.drop_norm(mask);
                double den = 0.0;
                switch (kind) {
                    case CompetitorKind::ReverseSets:
                        den = sigma_reverse_value(table, hi, m);
                        break;
                    case CompetitorKind::CheckIntervals:
                        den = sigma_check_value(table, hi, m);
                        break;
                    case CompetitorKind::HatIntervals:
                        den = sigma_hat_value(table, lo, m);
                        break;
                    case CompetitorKind::InitialSegments:
                        den = pg_tail_value(table, m);
                        break;
                }
                b.offer(num, den, [&] {
                    IndexSet lam = mask_to_set(x, mask);
                    SigmaResult sr;
                    switch (kind) {
                        case CompetitorKind::ReverseSets: sr = sigma_reverse(x, lam, m, space); break;
                        case CompetitorKind::CheckIntervals: sr = sigma_check(x, lam, m, space); break;
                        case CompetitorKind::HatIntervals: sr = sigma_hat(x, lam, m, space); break;
                        case CompetitorKind::InitialSegments: sr = pg_tail(x, m, space); break;
                    }
                    Witness w;
                    w.lhs = x.drop(lam);
                    w.rhs = x.drop(sr.minimizer);
                    w.base = x;
                    w.set_a = lam;
                    w.set_b = sr.minimizer;
                    w.detail = "x=" + vector_literal(x) + "; m=" + std::to_string(m) +
                               "; Lambda=" + set_literal(lam) +
                               "; competitor=" + set_literal(sr.minimizer);
                    w.valid = true;
                    return w;
                });
            });
        }
    });
    return finish(std::move(name), best, true, false, fam.description(),
                  lambda == Rational(1, 1) ? "" : lambda.str());
}

}  // namespace

ConstantEstimate estimate_rpgii(const SpaceSpec& space, Rational lambda,
                                const SearchFamily& family) {
    if (!lambda.at_least_one()) throw std::invalid_argument("lambda must be at least 1");
    ConstantEstimate est = remainder_vs_competitor(space, lambda, family,
                                                   CompetitorKind::CheckIntervals, "rpgii");
    est.lambda = lambda.str();
    return est;
}

ConstantEstimate estimate_rpg(const SpaceSpec& space, const SearchFamily& family) {
    return remainder_vs_competitor(space, Rational(1, 1), family, CompetitorKind::ReverseSets,
                                   "rpg");
}

ConstantEstimate estimate_pg(const SpaceSpec& space, const SearchFamily& family) {
    return remainder_vs_competitor(space, Rational(1, 1), family,
                                   CompetitorKind::InitialSegments, "pg");
}

ConstantEstimate estimate_pg_interval(const SpaceSpec& space, const SearchFamily& family) {
    return remainder_vs_competitor(space, Rational(1, 1), family, CompetitorKind::HatIntervals,
                                   "pg-interval");
}

ConstantEstimate estimate_rpg_interval(const SpaceSpec& space, const SearchFamily& family) {
    return remainder_vs_competitor(space, Rational(1, 1), family, CompetitorKind::CheckIntervals,
                                   "rpg-interval");
}

}  // namespace greedylab
