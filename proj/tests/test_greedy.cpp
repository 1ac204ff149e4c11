#include "doctest.h"

#include <cmath>

#include "greedylab/family.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/space.hpp"
#include "oracles.hpp"

using namespace greedylab;

TEST_SUITE_BEGIN("greedy");

TEST_CASE("greedy set recognition") {
    Vector x{{1, 3.0}, {2, 1.0}, {3, 2.0}};
    CHECK(is_greedy_set(x, IndexSet{1}));
    CHECK_FALSE(is_greedy_set(x, IndexSet{3}));
    CHECK(is_greedy_set(Vector{{1, 1.0}, {2, 1.0}}, IndexSet{2}));  // honest tie
    CHECK(is_greedy_set(x, IndexSet{}));
    // a zero-coefficient member forces the whole support inside
    CHECK_FALSE(is_greedy_set(x, IndexSet{1, 5}));
    CHECK(is_greedy_set(x, IndexSet{1, 2, 3, 5}));
}

TEST_CASE("greedy set enumeration") {
    Vector x{{1, 3.0}, {2, 1.0}, {3, 2.0}};
    auto fam = enumerate_greedy_sets(x, 2, 8);
    REQUIRE(fam.sets.size() == 1);
    CHECK(fam.sets[0] == IndexSet{1, 3});

    auto ties = enumerate_greedy_sets(Vector{{1, 1.0}, {2, 1.0}}, 1, 8);
    REQUIRE(ties.sets.size() == 2);
    CHECK(ties.sets[0] == IndexSet{1});
    CHECK(ties.sets[1] == IndexSet{2});

    auto completed = enumerate_greedy_sets(Vector{{1, 2.0}}, 2, 3);
    REQUIRE(completed.sets.size() == 2);
    CHECK(completed.sets[0] == IndexSet{1, 2});
    CHECK(completed.sets[1] == IndexSet{1, 3});

    auto empty = enumerate_greedy_sets(x, 0, 8);
    REQUIRE(empty.sets.size() == 1);
    CHECK(empty.sets[0].empty());
}

TEST_CASE("enumeration agrees with the all-subsets oracle") {
    auto vecs = random_vectors(6, 40, 0, 4, 0.25, 2.0, 17);
    // dyadic grid keeps ties honest
    for (Vector x : vecs) {
        std::vector<Entry> rounded;
        for (auto e : x.entries()) {
            e.coef = std::round(e.coef * 4.0) / 4.0;
            rounded.push_back(e);
        }
        x = Vector(std::move(rounded));
        for (std::size_t m = 0; m <= 6; ++m) {
            auto fast = enumerate_greedy_sets(x, m, 6).sets;
            auto slow = oracles::naive_greedy_sets(x, m, 6);
            CAPTURE(m);
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("strictly ordered coefficients nest their greedy sets") {
    Vector x{{2, 4.0}, {5, 3.0}, {7, 2.0}, {9, 1.0}};
    IndexSet prev;
    for (std::size_t m = 1; m <= 4; ++m) {
        auto fam = enumerate_greedy_sets(x, m, 12);
        REQUIRE(fam.sets.size() == 1);
        const IndexSet& cur = fam.sets[0];
        CHECK(prev.minus(cur).empty());
        prev = cur;
    }
}

TEST_CASE("enumeration overflow carries a partial count") {
    try {
        enumerate_greedy_sets(Vector{}, 15, 30, 1000);
        FAIL("expected overflow");
    } catch (const EnumerationOverflow& e) {
        CHECK(e.partial_count == 1000);
    }
}

TEST_CASE("projection basics") {
    Vector x{{1, 3.0}, {2, 1.0}};
    CHECK(project(x, IndexSet{}).is_zero());
    CHECK(project(x, IndexSet{1}) == Vector{{1, 3.0}});
    CHECK(project(x, IndexSet{5}).is_zero());
}

TEST_CASE("projection plus complement reassembles the vector") {
    auto vecs = random_vectors(10, 50, 0, 5, 0.1, 2.0, 23);
    std::mt19937_64 rng(3);
    for (const auto& x : vecs) {
        std::vector<Index> elems;
        for (Index i = 1; i <= 10; ++i)
            if (rng() & 1) elems.push_back(i);
        IndexSet a(std::move(elems));
        CHECK(project(x, a).plus(x.drop(a)) == x);
    }
}

TEST_CASE("truncation clamps coefficients") {
    Vector x{{1, 2.0}, {2, -3.0}, {3, 0.5}};
    CHECK(truncate(x, 5.0) == x);
    CHECK(truncate(x, 1.0) == Vector{{1, 1.0}, {2, -1.0}, {3, 0.5}});
    CHECK(truncate(Vector{{1, -0.2}}, 0.1) == Vector{{1, -0.1}});
    CHECK_THROWS_AS(truncate(x, 0.0), std::invalid_argument);
}

TEST_CASE("truncation is idempotent and contractive on the built-ins") {
    auto vecs = random_vectors(32, 100, 1, 6, 0.05, 2.5, 41);
    for (const auto& x : vecs) {
        double alpha = 0.8;
        Vector once = truncate(x, alpha);
        CHECK(truncate(once, alpha) == once);
        for (const SpaceSpec& space : builtin_spaces()) {
            CAPTURE(space.name);
            CHECK(space.norm(once) <= space.norm(x));  // exact, no tolerance
        }
    }
}

TEST_CASE("greedy masks match the set enumeration") {
    auto vecs = random_vectors(8, 30, 1, 4, 0.25, 2.0, 51);
    for (Vector x : vecs) {
        std::vector<Entry> rounded;
        for (auto e : x.entries()) {
            e.coef = std::round(e.coef * 4.0) / 4.0;
            if (e.coef != 0.0) rounded.push_back(e);
        }
        x = Vector(std::move(rounded));
        for (std::size_t m = 1; m <= x.support_size(); ++m) {
            std::vector<IndexSet> via_masks;
            for_each_greedy_mask(x, m, [&](std::uint32_t mask, Index lo, Index hi) {
                std::vector<Index> elems;
                for (std::size_t i = 0; i < x.support_size(); ++i)
                    if (mask >> i & 1) elems.push_back(x.entries()[i].index);
                IndexSet s(std::move(elems));
                CHECK(s.min() == lo);
                CHECK(s.max() == hi);
                via_masks.push_back(s);
            });
            std::sort(via_masks.begin(), via_masks.end());
            CHECK(via_masks == enumerate_greedy_sets(x, m, 8).sets);
        }
    }
}

TEST_SUITE_END();
