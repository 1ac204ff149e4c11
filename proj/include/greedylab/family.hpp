// Finite search families. Suprema in the underlying theory range over the
// whole space; searches here certify lower bounds over an exhaustive grid
// family (all supports up to a size cap, all grid magnitudes, all signs)
// and the indicator-set families the constants need.
#ifndef GREEDYLAB_FAMILY_HPP
#define GREEDYLAB_FAMILY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "greedylab/core.hpp"
#include "greedylab/space.hpp"

namespace greedylab {

struct SearchFamily {
    Index ambient_cap = 12;
    std::size_t support_size_max = 4;
    std::vector<double> coefficient_grid = {0.25, 0.5, 1.0, 2.0};
    bool signed_patterns = true;
    std::size_t set_size_max = 4;        // enumerated index sets A
    std::size_t competitor_size_max = 8; // enumerated competitor sets B

    static SearchFamily defaults();
    // Reduced family for tuple-heavy searches. The grid {1/2, 1} is closed
    // under the quotients that greedy-threshold rescaling produces, which
    // keeps the cross-estimate consistency checks aligned.
    static SearchFamily small(Index cap = 8);

    // Same family with the coefficient grid filtered to |c| <= cap.
    SearchFamily with_coef_cap(double cap) const;

    std::string description() const;

    // Support sets in deterministic order: sizes 0..support_size_max,
    // each size lexicographic. The empty support yields the zero vector.
    std::vector<std::vector<Index>> support_combos() const;

    // All coefficient assignments on one support, odometer order.
    void for_each_on_support(const std::vector<Index>& support,
                             const std::function<void(const Vector&)>& fn) const;

    std::size_t count_vectors() const;
};

// Random sparse vectors for sampled properties; coefficients are uniform
// in [-hi, -lo] u [lo, hi].
std::vector<Vector> random_vectors(Index ambient_cap, std::size_t count,
                                   std::size_t support_min, std::size_t support_max,
                                   double lo, double hi, std::uint64_t seed);

// Cached norms of every support-submask restriction of one vector; bit i
// addresses entries()[i]. Used by the search loops so each distinct
// projection is evaluated once.
class MaskNormTable {
public:
    MaskNormTable(const Vector& x, const SpaceSpec& space);

    std::uint32_t full_mask() const { return full_; }
    double full_norm() const { return norms_[full_]; }
    double mask_norm(std::uint32_t mask) const { return norms_[mask]; }
    // ||x - P_M(x)|| where M is the submask.
    double drop_norm(std::uint32_t mask) const { return norms_[full_ & ~mask]; }
    // Bits of the entries with index in [lo, hi].
    std::uint32_t range_mask(Index lo, Index hi) const;
    const Vector& vector() const { return *x_; }
    Vector materialize(std::uint32_t mask) const;

    static constexpr std::size_t kMaxSupport = 20;

private:
    const Vector* x_;
    std::uint32_t full_;
    std::vector<double> norms_;
};

// Greedy sets of size m as submasks of the support, m <= support size.
// Emits (mask, min index, max index). Throws EnumerationOverflow when the
// tie combinations would exceed family_cap.
void for_each_greedy_mask(const Vector& x, std::size_t m,
                          const std::function<void(std::uint32_t, Index, Index)>& fn,
                          std::size_t family_cap = 10000);

// Subsets of [1..cap] with size in [min_size, max_size], lexicographic.
void for_each_index_subset(Index cap, std::size_t min_size, std::size_t max_size,
                           const std::function<void(const IndexSet&)>& fn);

std::size_t combination_count_capped(std::size_t n, std::size_t k, std::size_t cap);

}  // namespace greedylab

#endif
