// The four competitor functionals: best projection error against sets
// strictly right of Lambda, against intervals anchored by max/min of
// Lambda, and against initial segments. All are exact infima computed by
// enumeration; the empty competitor is always admissible, so every value
// is at most ||x||.
#ifndef GREEDYLAB_SIGMA_HPP
#define GREEDYLAB_SIGMA_HPP

#include <cstddef>

#include "greedylab/core.hpp"
#include "greedylab/space.hpp"

namespace greedylab {

enum class SigmaKind { Reverse, Check, Hat, PgTail };

struct SigmaResult {
    double value = 0.0;
    IndexSet minimizer;  // lexicographically smallest among the ties
    SigmaKind kind = SigmaKind::Reverse;
};

// inf ||x - P_A(x)|| over |A| <= m with A entirely right of Lambda.
SigmaResult sigma_reverse(const Vector& x, const IndexSet& lambda, std::size_t m,
                          const SpaceSpec& space);

// inf ||x - P_I(x)|| over the empty set and intervals I with |I| <= m and
// max I >= max Lambda (no constraint when Lambda is empty).
SigmaResult sigma_check(const Vector& x, const IndexSet& lambda, std::size_t m,
                        const SpaceSpec& space);

// Mirror image: min I <= min Lambda instead.
SigmaResult sigma_hat(const Vector& x, const IndexSet& lambda, std::size_t m,
                      const SpaceSpec& space);

// min over k <= m of ||x - P_{[1..k]}(x)||.
SigmaResult pg_tail(const Vector& x, std::size_t m, const SpaceSpec& space);

const char* sigma_kind_name(SigmaKind kind);

class MaskNormTable;

// Value-only fast paths over cached submask norms, used inside search
// loops; each agrees exactly with its set-returning counterpart.
// max_lambda/min_lambda of 0 encode an empty Lambda (vacuous constraint).
double sigma_reverse_value(const MaskNormTable& table, Index max_lambda, std::size_t m);
double sigma_check_value(const MaskNormTable& table, Index max_lambda, std::size_t m);
double sigma_hat_value(const MaskNormTable& table, Index min_lambda, std::size_t m);
double pg_tail_value(const MaskNormTable& table, std::size_t m);

}  // namespace greedylab

#endif
