// Greedy-set recognition and enumeration, coordinate projections, and the
// coefficient truncation operator.
#ifndef GREEDYLAB_GREEDY_HPP
#define GREEDYLAB_GREEDY_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "greedylab/core.hpp"

namespace greedylab {

// Raised when a greedy-set enumeration would exceed its family cap.
// Carries how many sets were counted before giving up.
class EnumerationOverflow : public std::runtime_error {
public:
    explicit EnumerationOverflow(std::size_t partial)
        : std::runtime_error("greedy-set enumeration exceeded the family cap (partial count " +
                             std::to_string(partial) + ")"),
          partial_count(partial) {}

    std::size_t partial_count;
};

// All greedy sets of one cardinality for a fixed vector, exhaustive
// within [1..ambient_cap].
struct GreedySetFamily {
    Vector base_vector;
    std::size_t cardinality = 0;
    Index ambient_cap = 0;
    std::vector<IndexSet> sets;
};

inline constexpr std::size_t kDefaultGreedyFamilyCap = 10000;

// min over Lambda of |coef| >= max outside Lambda. Comparisons are exact
// on the stored doubles; ties are honest ties.
bool is_greedy_set(const Vector& x, const IndexSet& lambda);

// Every Lambda in [1..ambient_cap] of size m that is greedy for x. When m
// exceeds the support size the remaining slots range over all
// zero-coefficient indices up to the cap.
GreedySetFamily enumerate_greedy_sets(const Vector& x, std::size_t m, Index ambient_cap,
                                      std::size_t family_cap = kDefaultGreedyFamilyCap);

// P_A(x).
Vector project(const Vector& x, const IndexSet& a);

// Clamp every coefficient to magnitude at most alpha, keeping its sign.
Vector truncate(const Vector& x, double alpha);

}  // namespace greedylab

#endif
