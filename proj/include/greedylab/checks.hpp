// Executable verification of the proved inequalities and separations on
// finite families. A passing report can falsify an implementation but
// never proves a theorem; reports say so in their scope note.
#ifndef GREEDYLAB_CHECKS_HPP
#define GREEDYLAB_CHECKS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "greedylab/constants.hpp"
#include "greedylab/family.hpp"
#include "greedylab/rational.hpp"
#include "greedylab/space.hpp"

namespace greedylab {

inline constexpr double kCheckTolerance = 1e-9;

struct CheckReport {
    std::string theorem_id;
    bool pass = false;
    double worst_ratio = 0.0;
    double bound_used = 0.0;
    std::string bound_formula;
    Witness witness;  // tuple attaining worst_ratio, when one exists
    std::string family;
    std::string scope;
    // Ordered key/value pairs carried into the JSON report.
    std::vector<std::pair<std::string, std::string>> details;
};

// Two-sided comparison of ||sum a_n e_n|| against min/max |a_n| ||1_A||;
// worst_ratio is the larger normalized side, bound 2*C_q.
CheckReport check_ul_property(const SpaceSpec& space, double c_q, const SearchFamily& family);

// ||T_alpha x|| <= C_l ||x|| with alpha running over a grid containing
// every distinct coefficient magnitude of each sample vector.
CheckReport check_truncation_bound(const SpaceSpec& space, double c_l,
                                   const std::vector<Vector>& samples,
                                   const std::string& family_desc);

// Greedy remainder against anchored-interval projections with the bound
// 1 + C_q + 4 C_q^3 Delta_rc.
CheckReport check_rpg_interval_bound(const SpaceSpec& space, double c_q, double delta_rc,
                                     const SearchFamily& family);

// Mutual boundedness of the initial-segment constant and the anchored
// sigma-hat constant via the conservative analog.
CheckReport check_pg_interval_bound(const SpaceSpec& space, const SearchFamily& family);

// Both directions of the symmetry reformulation: remainder-form tuples
// against the direct constant, and direct tuples against the
// remainder-form constant extended with their proof images.
CheckReport check_rpslc_reformulation(const SpaceSpec& space, Rational lambda,
                                      const SearchFamily& family);

// The three numeric implications between the enlarged-greedy-set constant
// and the symmetry constant, with suppression factors.
CheckReport check_rpgii_relations(const SpaceSpec& space, Rational lambda,
                                  const SearchFamily& family);

// Every symmetry tuple obeys ||x + 1_{eps A}|| <= (4 C_q^3 Delta_{lambda,rc}
// + C_l) ||x + 1_{delta B}||.
CheckReport check_rpslc_conservative_bound(const SpaceSpec& space, Rational lambda,
                                           const SearchFamily& family);

// Finiteness statuses of the three equivalent characterizations agree.
CheckReport check_rpgii_equivalences(const SpaceSpec& space, Rational lambda,
                                     const SearchFamily& family);

// The two signed-unit-vector inequalities: ||x|| <= ||x + e_k|| and
// ||x + t e_k|| <= ||x + s e_j|| for j < k outside the support.
CheckReport check_signed_unit_inequalities(const SpaceSpec& space, const SearchFamily& family);

// The three one-constant characterizations hold or fail together.
CheckReport check_one_constant_equivalence(const SpaceSpec& space, const SearchFamily& family);

// Count-based growth of the separation ratio between heavy-set and
// off-set indicator blocks, with symbolic placement facts.
CheckReport check_counterexample_growth(
    const std::vector<std::int64_t>& ns,
    const std::vector<std::pair<std::int64_t, double>>& thresholds = {{100, 3.5}, {10000, 20.0}});

// The lambda-constrained indicator comparison stays under the
// case-analysis constant C(lambda) = max(2, sqrt(1 - 2 ln(lambda-1))),
// exhaustively in [1..n] plus count-parameterized spans up to span_max.
CheckReport check_counterexample_lambda_bound(Rational lambda, Index n,
                                              Index span_max = Index{1} << 16);

double lambda_bound_constant(const Rational& lambda);

}  // namespace greedylab

#endif
