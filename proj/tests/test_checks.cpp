#include "doctest.h"

#include <cstdlib>

#include "greedylab/checks.hpp"
#include "greedylab/family.hpp"
#include "greedylab/report.hpp"

using namespace greedylab;

namespace {

SearchFamily heavy8() {
    SearchFamily fam = SearchFamily::defaults();
    fam.ambient_cap = 8;
    return fam;
}

}  // namespace

TEST_SUITE_BEGIN("checks");

TEST_CASE("two-sided coefficient comparison holds with constant 1") {
    for (const SpaceSpec& space :
         {SpaceSpec::lp(1, 8), SpaceSpec::lp(2, 8), SpaceSpec::counterexample(8)}) {
        CAPTURE(space.name);
        CheckReport r = check_ul_property(space, 1.0, heavy8());
        CHECK(r.pass);
        CHECK(r.bound_used == 2.0);
        CHECK(r.worst_ratio <= 2.0 + 1e-9);
        CHECK(r.witness.valid);
    }
}

TEST_CASE("truncation never expands on the unconditional corpus") {
    auto samples = random_vectors(16, 500, 1, 6, 0.05, 2.0, 4242);
    for (const SpaceSpec& space : builtin_spaces()) {
        CAPTURE(space.name);
        CheckReport r = check_truncation_bound(space, 1.0, samples, "500 random vectors");
        CHECK(r.pass);
        CHECK(r.worst_ratio <= 1.0);
    }
}

TEST_CASE("interval bound with the searched constants") {
    SpaceSpec l1 = SpaceSpec::lp(1, 8);
    CheckReport r = check_rpg_interval_bound(l1, 1.0, 1.0, heavy8());
    CHECK(r.pass);
    CHECK(r.bound_used == 6.0);  // 1 + 1 + 4
    CHECK(r.worst_ratio <= 1.0 + 1e-9);

    SpaceSpec cx = SpaceSpec::counterexample(8);
    ConstantEstimate drc = estimate_reverse_conservative(cx, 8);
    CheckReport rc = check_rpg_interval_bound(cx, 1.0, drc.value, heavy8());
    CHECK(rc.pass);
    CHECK(rc.worst_ratio > 1.0);  // the space is genuinely not 1-RPG-like
}

TEST_CASE("initial-segment and anchored-interval constants bound each other") {
    for (const SpaceSpec& space :
         {SpaceSpec::lp(1, 8), SpaceSpec::lp(2, 8), SpaceSpec::counterexample(8, true)}) {
        CAPTURE(space.name);
        CheckReport r = check_pg_interval_bound(space, heavy8());
        CHECK(r.pass);
    }
}

TEST_CASE("symmetry reformulation holds in both directions") {
    for (const SpaceSpec& space :
         {SpaceSpec::lp(1, 8), SpaceSpec::counterexample(8)}) {
        CAPTURE(space.name);
        for (auto lam : {Rational(1, 1), Rational(2, 1)}) {
            CheckReport r = check_rpslc_reformulation(space, lam, SearchFamily::small(8));
            CAPTURE(lam.str());
            CHECK(r.pass);
        }
    }
}

TEST_CASE("constant relations between the symmetry and interval forms") {
    for (const SpaceSpec& space :
         {SpaceSpec::lp(1, 8), SpaceSpec::lp(2, 8), SpaceSpec::counterexample(8)}) {
        CAPTURE(space.name);
        for (auto lam : {Rational(3, 2), Rational(2, 1)}) {
            CheckReport r = check_rpgii_relations(space, lam, SearchFamily::small(8));
            CAPTURE(lam.str());
            CHECK(r.pass);
        }
    }
}

TEST_CASE("symmetry tuples obey the conservative-constant bound") {
    for (const SpaceSpec& space :
         {SpaceSpec::lp(1, 8), SpaceSpec::counterexample(8)}) {
        CAPTURE(space.name);
        CheckReport r = check_rpslc_conservative_bound(space, Rational(2, 1), SearchFamily::small(8));
        CHECK(r.pass);
        // x = 0 with plain signs reduces to the indicator constraint, which
        // is below the bound by construction
        CHECK(r.bound_used >= 1.0);
    }
}

TEST_CASE("finiteness statuses agree across the three characterizations") {
    for (const SpaceSpec& space :
         {SpaceSpec::lp(1, 8), SpaceSpec::lp(2, 8), SpaceSpec::counterexample(8)}) {
        CAPTURE(space.name);
        CheckReport r = check_rpgii_equivalences(space, Rational(2, 1), SearchFamily::small(8));
        CHECK(r.pass);
    }
}

TEST_CASE("signed unit inequalities separate the weight profiles") {
    CHECK(check_signed_unit_inequalities(SpaceSpec::lp(1, 6), heavy8()).pass);
    CHECK(check_signed_unit_inequalities(SpaceSpec::lp(2, 6), heavy8()).pass);
    CHECK(check_signed_unit_inequalities(
              SpaceSpec::weighted("dec", {1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125}, 6), heavy8())
              .pass);
    CheckReport inc = check_signed_unit_inequalities(
        SpaceSpec::weighted("inc", {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}, 6), heavy8());
    CHECK_FALSE(inc.pass);
    CHECK(inc.witness.valid);
    CHECK(inc.worst_ratio > 1.0 + 1e-9);
}

TEST_CASE("one-constant legs stand or fall together") {
    SearchFamily fam = heavy8();
    fam.ambient_cap = 6;
    CheckReport l1 = check_one_constant_equivalence(SpaceSpec::lp(1, 6), fam);
    CHECK(l1.pass);
    CheckReport l2 = check_one_constant_equivalence(SpaceSpec::lp(2, 6), fam);
    CHECK(l2.pass);
    CheckReport inc = check_one_constant_equivalence(
        SpaceSpec::weighted("inc", {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}, 6), fam);
    CHECK(inc.pass);  // all three legs fail together
    bool saw_fail_detail = false;
    for (const auto& [k, v] : inc.details)
        if (k == "unit-inequalities") saw_fail_detail = v == "fail";
    CHECK(saw_fail_detail);
    CheckReport cx = check_one_constant_equivalence(SpaceSpec::counterexample(6), fam);
    CHECK(cx.pass);
}

TEST_CASE("separation ratio grows within the block family") {
    CheckReport r = check_counterexample_growth({1, 10, 100});
    CHECK(r.pass);
    bool saw_unit = false;
    for (const auto& [k, v] : r.details)
        if (k == "ratio-N=1") saw_unit = v == "1";
    CHECK(saw_unit);
}

TEST_CASE("case-analysis constant") {
    CHECK(lambda_bound_constant(Rational(2, 1)) == 2.0);
    CHECK(lambda_bound_constant(Rational(3, 2)) == 2.0);
    CHECK(lambda_bound_constant(Rational(101, 100)) ==
          doctest::Approx(std::sqrt(1.0 - 2.0 * std::log(0.01))).epsilon(1e-12));
    CHECK_THROWS_AS(lambda_bound_constant(Rational(1, 1)), std::invalid_argument);
}

TEST_CASE("constrained comparisons stay under the case-analysis constant") {
    for (auto lam : {Rational(3, 2), Rational(2, 1), Rational(3, 1)}) {
        CAPTURE(lam.str());
        CheckReport r = check_counterexample_lambda_bound(lam, 32, 1 << 12);
        CHECK(r.pass);
        CHECK(r.worst_ratio <= r.bound_used);
    }
}

TEST_CASE("reports are identical across worker counts") {
    SpaceSpec cx = SpaceSpec::counterexample(8);
    setenv("GREEDYLAB_WORKERS", "1", 1);
    CheckReport one = check_rpg_interval_bound(cx, 1.0, 1.5, heavy8());
    setenv("GREEDYLAB_WORKERS", "3", 1);
    CheckReport three = check_rpg_interval_bound(cx, 1.0, 1.5, heavy8());
    unsetenv("GREEDYLAB_WORKERS");
    CHECK(check_report_json(one) == check_report_json(three));
}

TEST_SUITE_END();
