#include "doctest.h"

#include <cmath>
#include <random>

#include "greedylab/family.hpp"
#include "greedylab/space.hpp"
#include "oracles.hpp"

using namespace greedylab;

TEST_SUITE_BEGIN("space");

TEST_CASE("two-weight norm on small vectors") {
    // 1 = 2^0 sits on the heavy set
    CHECK(counterexample_norm(Vector::unit(1)) == 1.0);
    CHECK(counterexample_norm(indicator(IndexSet{2, 4})) == doctest::Approx(1.0 + 1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(counterexample_norm(indicator(IndexSet{3, 5})) == 1.5);
}

TEST_CASE("count-based indicator norm matches direct summation") {
    CHECK(counterexample_indicator_norm(0, 0) == 0.0);
    // oracle: plain forward accumulation, written independently
    double su = 0.0, sv = 0.0;
    for (int n = 1; n <= 100; ++n) {
        su += 1.0 / std::sqrt(double(n));
        sv += 1.0 / double(n);
    }
    CHECK(counterexample_indicator_norm(100, 0) == doctest::Approx(su).epsilon(1e-12));
    CHECK(counterexample_indicator_norm(0, 100) == doctest::Approx(sv).epsilon(1e-12));
    CHECK(counterexample_indicator_norm(100, 0) == doctest::Approx(18.5896).epsilon(1e-4));
    CHECK(counterexample_indicator_norm(0, 100) == doctest::Approx(5.18738).epsilon(1e-4));
}

TEST_CASE("indicator norm table agrees with the count formula") {
    IndicatorNormTable table(5000);
    for (std::int64_t k : {1, 2, 17, 100, 999, 5000}) {
        CHECK(table.sqrt_prefix(k) == doctest::Approx(sqrt_weight_sum(k)).epsilon(1e-13));
        CHECK(table.harmonic_prefix(k) == doctest::Approx(harmonic_sum(k)).epsilon(1e-13));
    }
}

TEST_CASE("sup over bijections is attained at the sorted pairing") {
    std::mt19937_64 rng(20240811);
    auto vecs = random_vectors(64, 1000, 1, 6, 0.05, 3.0, 99);
    for (const auto& x : vecs) {
        double norm = counterexample_norm(x);
        for (int trial = 0; trial < 100; ++trial) {
            double sampled = oracles::random_bijection_value(x, rng);
            CHECK(norm >= sampled - 1e-12);
        }
    }
}

TEST_CASE("two-weight norm is 1-unconditional") {
    auto vecs = random_vectors(64, 300, 1, 6, 0.05, 3.0, 7);
    std::mt19937_64 rng(11);
    for (const auto& x : vecs) {
        double base = counterexample_norm(x);
        std::vector<Entry> flipped = x.entries();
        std::vector<Entry> shrunk = x.entries();
        for (auto& e : flipped)
            if (rng() & 1) e.coef = -e.coef;
        std::uniform_real_distribution<double> shrink(0.0, 1.0);
        for (auto& e : shrunk) e.coef *= shrink(rng);
        CHECK(counterexample_norm(Vector(std::move(flipped))) == base);
        CHECK(counterexample_norm(Vector(std::move(shrunk))) <= base + 1e-12);
    }
}

TEST_CASE("two-weight norm only sees the heavy/light split") {
    // permuting coefficients inside the heavy set / inside its complement
    // leaves the norm unchanged
    Vector x{{1, 0.5}, {4, 2.0}, {3, 1.0}, {6, 0.25}};
    Vector swapped_heavy{{1, 2.0}, {4, 0.5}, {3, 1.0}, {6, 0.25}};
    Vector swapped_light{{1, 0.5}, {4, 2.0}, {3, 0.25}, {6, 1.0}};
    Vector moved_heavy{{2, 0.5}, {16, 2.0}, {3, 1.0}, {6, 0.25}};
    double base = counterexample_norm(x);
    CHECK(counterexample_norm(swapped_heavy) == base);
    CHECK(counterexample_norm(swapped_light) == base);
    CHECK(counterexample_norm(moved_heavy) == base);
}

TEST_CASE("indicator norms through sets and through counts coincide") {
    SpaceSpec cx = SpaceSpec::counterexample();
    // exhaustive to cap 16, sampled within [1..64]
    for (std::uint32_t mask = 0; mask < (1u << 16); ++mask) {
        std::int64_t heavy = 0, light = 0;
        std::vector<Index> elems;
        for (Index i = 1; i <= 16; ++i)
            if (mask >> (i - 1) & 1) {
                elems.push_back(i);
                (on_heavy_set(i) ? heavy : light) += 1;
            }
        CHECK(cx.norm(indicator(IndexSet(std::move(elems)))) ==
              counterexample_indicator_norm(heavy, light));
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Index> elems;
        std::int64_t heavy = 0, light = 0;
        for (Index i = 1; i <= 64; ++i)
            if (rng() & 1) {
                elems.push_back(i);
                (on_heavy_set(i) ? heavy : light) += 1;
            }
        CHECK(cx.norm(indicator(IndexSet(std::move(elems)))) ==
              counterexample_indicator_norm(heavy, light));
    }
}

TEST_CASE("norm axioms hold on sampled vectors for every built-in space") {
    for (const SpaceSpec& space : builtin_spaces()) {
        CAPTURE(space.name);
        CHECK_NOTHROW(validate_space(space, 2024));
        auto vecs = random_vectors(space.ambient_cap, 200, 0, 5, 0.05, 2.0, 31);
        for (std::size_t i = 0; i + 1 < vecs.size(); i += 2) {
            const Vector& x = vecs[i];
            const Vector& y = vecs[i + 1];
            double nx = space.norm(x);
            double ny = space.norm(y);
            CHECK(space.norm(x.plus(y)) <= nx + ny + 1e-12);
            double t = -1.75;
            CHECK(space.norm(x.scaled(t)) ==
                  doctest::Approx(std::abs(t) * nx).epsilon(1e-12));
        }
    }
}

TEST_CASE("basis vectors stay uniformly normalized below the cap") {
    for (const SpaceSpec& space : builtin_spaces()) {
        CAPTURE(space.name);
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (Index n = 1; n <= space.ambient_cap; ++n) {
            double v = space.norm(Vector::unit(n));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(lo > 0.0);
        CHECK(std::isfinite(hi));
    }
}

TEST_CASE("space json round trip and errors") {
    SpaceSpec l2 = SpaceSpec::from_json_text(
        R"({"name":"l2","kind":"lp","params":{"p":2},"ambient_cap":64})");
    CHECK(l2.kind == SpaceKind::L2);
    CHECK(l2.norm(Vector{{1, 3.0}, {2, 4.0}}) == 5.0);

    SpaceSpec w = SpaceSpec::from_json_text(
        R"({"name":"w","kind":"weighted","params":{"weights":[1.0,0.5]},"ambient_cap":8})");
    CHECK(w.norm(Vector::unit(2)) == 0.5);
    // indices past the list reuse the final weight
    CHECK(w.norm(Vector::unit(7)) == 0.5);

    SpaceSpec cx = SpaceSpec::from_json_text(
        R"({"name":"cx","kind":"counterexample","params":{},"ambient_cap":64})");
    CHECK(cx.norm(Vector::unit(4)) == 1.0);

    for (const SpaceSpec& space : builtin_spaces()) {
        SpaceSpec reloaded = SpaceSpec::from_json_text(space.to_json());
        CHECK(reloaded.kind == space.kind);
        CHECK(reloaded.ambient_cap == space.ambient_cap);
        CHECK(reloaded.norm(Vector{{2, 1.5}, {5, -0.5}}) ==
              space.norm(Vector{{2, 1.5}, {5, -0.5}}));
    }
}

TEST_CASE("space json parse errors carry line and column") {
    try {
        SpaceSpec::from_json_text("{\n  \"name\": \"x\",\n  oops\n}");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(SpaceSpec::from_json_text(R"({"name":"x","kind":"nope","ambient_cap":4})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::from_json_text(
                        R"({"name":"x","kind":"weighted","params":{"weights":[0]},"ambient_cap":4})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::from_json_text(R"({"name":"x","kind":"lp","ambient_cap":4})"),
                    std::invalid_argument);
}

TEST_CASE("mirrored variant reflects indices inside the cap") {
    SpaceSpec mir = SpaceSpec::counterexample(16, true);
    SpaceSpec cx = SpaceSpec::counterexample(16);
    Vector x{{3, 1.0}, {9, -0.5}};
    Vector reflected{{16 + 1 - 3, 1.0}, {16 + 1 - 9, -0.5}};
    CHECK(mir.norm(x) == cx.norm(reflected));
    CHECK_THROWS_AS(mir.norm(Vector::unit(17)), std::invalid_argument);
}

TEST_SUITE_END();
