// Norm oracles. A SpaceSpec names a deterministic norm on finitely
// supported vectors plus the ambient index cap used by searches.
//
// Built-in kinds:
//   lp             p in {1, 2, inf}
//   weighted       weighted l1 with an explicit positive weight list
//   counterexample sup over bijections of weights 1/sqrt(k) on the
//                  powers of two and 1/k elsewhere, paired with the
//                  decreasing rearrangement of |coefficients|; the
//                  "mirrored" variant reflects indices inside the cap.
#ifndef GREEDYLAB_SPACE_HPP
#define GREEDYLAB_SPACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "greedylab/core.hpp"

namespace greedylab {

enum class SpaceKind { L1, L2, LInf, Weighted, Counterexample, CounterexampleMirrored };

struct SpaceSpec {
    std::string name;
    SpaceKind kind = SpaceKind::L1;
    std::vector<double> weights;  // Weighted only; index n uses weights[n-1], clamped to the last entry
    Index ambient_cap = 64;

    double norm(std::span<const Entry> entries) const;
    double norm(const Vector& x) const { return norm(x.span()); }

    bool is_counterexample() const {
        return kind == SpaceKind::Counterexample || kind == SpaceKind::CounterexampleMirrored;
    }

    static SpaceSpec lp(int p, Index cap = 64);
    static SpaceSpec lp_inf(Index cap = 64);
    static SpaceSpec weighted(std::string name, std::vector<double> w, Index cap = 12);
    static SpaceSpec counterexample(Index cap = 64, bool mirrored = false);

    static SpaceSpec from_json_text(const std::string& text);
    static SpaceSpec from_json_file(const std::string& path);
    std::string to_json() const;
};

// Standard lp norm of the coefficient sequence; p is 1, 2 or INFINITY.
double lp_norm(const Vector& x, double p);

// True iff n is a power of two (the weight-favoured index set D).
inline bool on_heavy_set(Index n) { return n >= 1 && (n & (n - 1)) == 0; }

// Sum of 1/sqrt(k), k = 1..a, accumulated from the smallest term up.
double sqrt_weight_sum(std::int64_t a);
// Harmonic sum 1/k, k = 1..b, accumulated from the smallest term up.
double harmonic_sum(std::int64_t b);

// ||1_A|| in the counterexample space from the two membership counts,
// usable at index scales where A cannot be materialized.
double counterexample_indicator_norm(std::int64_t in_heavy, std::int64_t off_heavy);

double counterexample_norm(const Vector& x);

// Cached prefix sums of the two weight sequences, for search loops that
// evaluate many indicator norms.
class IndicatorNormTable {
public:
    explicit IndicatorNormTable(std::int64_t max_count);
    double sqrt_prefix(std::int64_t a) const { return sqrt_prefix_[static_cast<std::size_t>(a)]; }
    double harmonic_prefix(std::int64_t b) const { return harmonic_prefix_[static_cast<std::size_t>(b)]; }
    double indicator_norm(std::int64_t in_heavy, std::int64_t off_heavy) const {
        return sqrt_prefix(in_heavy) + harmonic_prefix(off_heavy);
    }
    std::int64_t max_count() const { return static_cast<std::int64_t>(sqrt_prefix_.size()) - 1; }

private:
    std::vector<double> sqrt_prefix_;
    std::vector<double> harmonic_prefix_;
};

// Spot-checks the norm axioms on seeded samples: homogeneity and the
// triangle inequality on random pairs, plus two-sided bounds on ||e_n||
// for n up to the cap. Throws std::invalid_argument on violation.
void validate_space(const SpaceSpec& space, std::uint64_t seed = 1);

// The spaces exercised by the verification suite and tests.
std::vector<SpaceSpec> builtin_spaces();

}  // namespace greedylab

#endif
