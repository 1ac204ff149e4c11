#include "doctest.h"

#include <cmath>

#include "greedylab/core.hpp"
#include "greedylab/space.hpp"

using namespace greedylab;

TEST_SUITE_BEGIN("core");

TEST_CASE("indicator builds signed coordinate sums") {
    CHECK(indicator(IndexSet{}).is_zero());
    Vector plain = indicator(IndexSet{1, 3});
    CHECK(plain == Vector{{1, 1.0}, {3, 1.0}});
    IndexSet a{2, 5};
    Vector mixed = indicator(a, SignPattern(a, {1, -1}));
    CHECK(mixed == Vector{{2, 1.0}, {5, -1.0}});
}

TEST_CASE("indicator rejects mismatched sign domains") {
    IndexSet a{1, 2};
    IndexSet b{1, 3};
    CHECK_THROWS_AS(indicator(a, SignPattern::all_plus(b)), std::invalid_argument);
}

TEST_CASE("sup norm") {
    CHECK(sup_norm(Vector{}) == 0.0);
    CHECK(sup_norm(Vector{{1, 3.0}, {2, -5.0}}) == 5.0);
    CHECK(sup_norm(Vector{{4, 0.25}}) == 0.25);
}

TEST_CASE("span length") {
    CHECK(span_length(IndexSet{}) == 0);
    CHECK(span_length(IndexSet{5}) == 1);
    CHECK(span_length(IndexSet{3, 9}) == 7);
}

TEST_CASE("surrounds") {
    CHECK(surrounds(Vector{{1, 1.0}, {7, 2.0}}, IndexSet{}));
    CHECK(surrounds(Vector{{1, 1.0}, {9, 1.0}}, IndexSet{4, 6}));
    CHECK_FALSE(surrounds(Vector{{5, 1.0}}, IndexSet{4, 6}));
}

TEST_CASE("lp norms") {
    Vector x{{1, 3.0}, {2, 4.0}};
    CHECK(lp_norm(x, 2) == 5.0);
    CHECK(lp_norm(x, 1) == 7.0);
    CHECK(lp_norm(x, std::numeric_limits<double>::infinity()) == 4.0);
    CHECK_THROWS_AS(lp_norm(x, 3), std::invalid_argument);
}

TEST_CASE("vectors drop zero coefficients and stay sorted") {
    Vector x{{4, 0.0}, {2, 1.0}, {7, -0.5}};
    CHECK(x.support_size() == 2);
    CHECK(x.entries().front().index == 2);
    CHECK(x.coef(4) == 0.0);
    CHECK_THROWS_AS(Vector({{1, 1.0}, {1, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(Vector({{0, 1.0}}), std::invalid_argument);
}

TEST_CASE("vector arithmetic") {
    Vector x{{1, 1.0}, {2, 2.0}};
    Vector y{{2, -2.0}, {3, 1.0}};
    CHECK(x.plus(y) == Vector{{1, 1.0}, {3, 1.0}});
    CHECK(x.minus(x).is_zero());
    CHECK(x.scaled(0.0).is_zero());
    CHECK(x.restrict_to(IndexSet{2}) == Vector{{2, 2.0}});
    CHECK(x.drop(IndexSet{2}) == Vector{{1, 1.0}});
}

TEST_CASE("index set order relation") {
    CHECK(strictly_right_of(IndexSet{}, IndexSet{1, 2}));
    CHECK(strictly_right_of(IndexSet{5}, IndexSet{}));
    CHECK(strictly_right_of(IndexSet{4, 6}, IndexSet{1, 3}));
    CHECK_FALSE(strictly_right_of(IndexSet{3, 6}, IndexSet{1, 3}));
    CHECK(IndexSet{} < IndexSet{1});
    CHECK(IndexSet{1, 2} < IndexSet{2});
}

TEST_CASE("index set algebra") {
    IndexSet a{1, 3, 5};
    IndexSet b{3, 4};
    CHECK(a.unite(b) == IndexSet{1, 3, 4, 5});
    CHECK(a.minus(b) == IndexSet{1, 5});
    CHECK(a.intersect(b) == IndexSet{3});
    CHECK_FALSE(a.disjoint_from(b));
    CHECK(a.disjoint_from(IndexSet{2, 6}));
    CHECK(IndexSet::interval(2, 5).is_interval());
    CHECK_FALSE(IndexSet({2, 4}).is_interval());
}

TEST_SUITE_END();
