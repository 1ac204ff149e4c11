// Lower-bound certification of the named constants by structured search.
// Vector-based constants are searched over a finite grid family; the
// indicator-pair constants are computed exactly within [1..N], with a
// count-based fast path for the two-weight counterexample space.
#ifndef GREEDYLAB_CONSTANTS_HPP
#define GREEDYLAB_CONSTANTS_HPP

#include <string>

#include "greedylab/core.hpp"
#include "greedylab/family.hpp"
#include "greedylab/rational.hpp"
#include "greedylab/space.hpp"

namespace greedylab {

// Argument tuple achieving a ratio; the ratio re-evaluates exactly as
// norm(lhs) / norm(rhs). base/set_a/set_b carry the structured parts of
// the tuple when the estimator has them.
struct Witness {
    Vector lhs;
    Vector rhs;
    Vector base;
    IndexSet set_a;
    IndexSet set_b;
    std::string detail;
    bool valid = false;
};

struct ConstantEstimate {
    std::string name;
    double value = 1.0;   // clamped at 1 for C-type constants
    double raw_max = 0.0; // largest ratio actually observed
    bool clamped = false; // value > raw_max because of the clamp
    bool exact = false;   // full enumeration within the stated range
    bool unbounded = false;
    Witness witness;
    Witness unbounded_witness;
    std::string family;
    std::string lambda;  // "p/q" for the lambda-parameterized constants
};

// ||P_Lambda x|| <= C ||x|| over greedy sets; clamped below at 1.
ConstantEstimate estimate_quasi_greedy(const SpaceSpec& space, const SearchFamily& family);
// ||x - P_Lambda x|| <= C ||x|| over greedy sets; clamped below at 1.
ConstantEstimate estimate_suppression(const SpaceSpec& space, const SearchFamily& family);

// ||1_A|| <= C ||1_B|| for |A| <= |B|, B < A; exact max within [1..N].
ConstantEstimate estimate_reverse_conservative(const SpaceSpec& space, Index n);
// Same with the order swapped (A < B), the mirror-image constant.
ConstantEstimate estimate_conservative(const SpaceSpec& space, Index n);
// ||1_A|| <= C ||1_B|| for (lambda-1)s(A) + |A| <= |B|, B < A.
ConstantEstimate estimate_lambda_reverse_conservative(const SpaceSpec& space, Rational lambda,
                                                      Index n);

// ||x + 1_{eps A}|| <= C ||x + 1_{delta B}|| over sup-norm-1 x that
// surround A, with B disjoint from supp(x), B < A and the size constraint
// (lambda-1)s(A) + |A| <= |B|.
ConstantEstimate estimate_rpslc(const SpaceSpec& space, Rational lambda,
                                const SearchFamily& family);
// Equivalent remainder form: ||x|| <= C ||x - P_A(x) + 1_{eps B}||.
ConstantEstimate estimate_rpslc_remainder(const SpaceSpec& space, Rational lambda,
                                          const SearchFamily& family);

// ||x - P_Lambda x|| <= C sigma_check over Lambda in G(x, ceil(lambda m)).
ConstantEstimate estimate_rpgii(const SpaceSpec& space, Rational lambda,
                                const SearchFamily& family);
// ||x - P_Lambda x|| <= C sigma_reverse over Lambda in G(x, m).
ConstantEstimate estimate_rpg(const SpaceSpec& space, const SearchFamily& family);
// ||x - P_Lambda x|| <= C min over initial segments, Lambda in G(x, m).
ConstantEstimate estimate_pg(const SpaceSpec& space, const SearchFamily& family);
// ||x - P_Lambda x|| <= C inf over anchored intervals sigma_hat,
// Lambda in G(x, m) -- the mirror of estimate_rpgii at lambda = 1.
ConstantEstimate estimate_pg_interval(const SpaceSpec& space, const SearchFamily& family);
// Lambda = 1 case of estimate_rpgii under its own name.
ConstantEstimate estimate_rpg_interval(const SpaceSpec& space, const SearchFamily& family);

std::string vector_literal(const Vector& x);
std::string set_literal(const IndexSet& a);

}  // namespace greedylab

#endif
