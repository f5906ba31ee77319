#include "cycles/overlap.hpp"

#include <algorithm>

#include "cycles/base.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cycles;

TEST_CASE("overlap of a multicurve with itself") {
  PolygonSurface S(2);
  OverlapFunction f = overlap_function(S, fx::mc(fx::u1()), fx::mc(fx::u1()));
  CHECK(f.max == 0);
  CHECK(homological_distance(S, fx::mc(fx::u1()), fx::mc(fx::u1())) == 0);
}

TEST_CASE("isotopic representatives cancel to distance zero") {
  PolygonSurface S(2);
  // u2_pushed is a differently drawn representative of u2's class.
  CHECK(freely_homotopic(S, fx::u2(), fx::u2_pushed()));
  CHECK(distance(S, fx::mc(fx::u2()), fx::mc(fx::u2_pushed())) == 0);
  CHECK_FALSE(is_edge(S, fx::mc(fx::u2()), fx::mc(fx::u2_pushed())));
}

TEST_CASE("bounding pair is an edge: indicator overlap") {
  PolygonSurface S(3);
  Multicurve m1 = fx::mc(fx::g3_t1());
  Multicurve m2 = fx::mc(fx::g3_t2());
  OverlapFunction f = overlap_function(S, m1, m2);
  CHECK(f.max == 1);
  Subsurface smax = extremal_subsurface(f, Extremal::kMax);
  Subsurface smin = extremal_subsurface(f, Extremal::kMin);
  CHECK(smax.comps.size() + smin.comps.size() == f.arr->components().size());
  for (auto ba : smax.boundary) CHECK(f.arr->arcs()[ba.arc].circle);
  // Side conditions: S_max left of m2 arcs, right of m1 arcs.
  for (auto ba : smax.boundary) {
    if (f.arr->arcs()[ba.arc].owner == 1) CHECK(ba.surface_on_left);
    if (f.arr->arcs()[ba.arc].owner == 0) CHECK_FALSE(ba.surface_on_left);
  }
  for (auto ba : smin.boundary) {
    if (f.arr->arcs()[ba.arc].owner == 1) CHECK_FALSE(ba.surface_on_left);
    if (f.arr->arcs()[ba.arc].owner == 0) CHECK(ba.surface_on_left);
  }
  CHECK(distance(S, m1, m2) == 1);
  CHECK(is_edge(S, m1, m2));
}

TEST_CASE("a genus-2 edge needs a multicomponent side") {
  PolygonSurface S(2);
  // c1 crosses a1 and a2; c2 is a reversed parallel of u1; together they
  // are homologous to u2 and disjoint from it.
  Curve c1 = fx::curve({{0, rat(3, 10)}, {4, rat(2, 5)}});
  Curve c2 = fx::curve({{2, rat(2, 5)}});
  Multicurve v2;
  v2.components = {c1, c2};
  check_embedded(S, v2);
  Multicurve v1 = fx::mc(fx::u2());
  CHECK(homology_class(S, v2) == homology_class(S, v1));
  CHECK(raw_crossings(S, v1, v2) == 0);
  auto alpha = homology_class(S, v1);
  CHECK(validate_vertex(S, v2, alpha));
  CHECK(distance(S, v1, v2) == 1);
  CHECK(is_edge(S, v1, v2));
}

TEST_CASE("different classes are rejected") {
  PolygonSurface S(2);
  CHECK_THROWS_AS(overlap_function(S, fx::mc(fx::u1()), fx::mc(fx::v1())), error);
  CHECK_THROWS_AS(distance(S, fx::mc(fx::u1()), fx::mc(fx::v1())), error);
}

TEST_CASE("sublevel subsurfaces nest") {
  PolygonSurface S(3);
  OverlapFunction f = overlap_function(S, fx::mc(fx::g3_t1()), fx::mc(fx::g3_t2()));
  REQUIRE(f.max == 1);
  Subsurface l0 = sublevel_subsurface(f, 0);
  Subsurface l1 = sublevel_subsurface(f, 1);
  CHECK(l0.comps.size() == f.arr->components().size());
  for (int c : l1.comps) CHECK(l0.contains(c));
  CHECK_THROWS_AS(sublevel_subsurface(f, 2), error);
}

TEST_CASE("bounds_embedded_subsurface") {
  PolygonSurface S(2);
  SUBCASE("separating curve bounds a one-holed torus") {
    auto sub = bounds_embedded_subsurface(S, fx::mc(fx::s1()), Multicurve{});
    REQUIRE(sub.has_value());
    CHECK(!sub->comps.empty());
    CHECK(sub->chi == -1);
  }
  SUBCASE("difference of a bounding pair bounds") {
    PolygonSurface S3(3);
    auto sub = bounds_embedded_subsurface(S3, fx::mc(fx::g3_t2()), fx::mc(fx::g3_t1()));
    REQUIRE(sub.has_value());
    CHECK(!sub->comps.empty());
    CHECK(sub->chi == -2);  // genus-one piece with two boundary circles
  }
  SUBCASE("doubled region does not bound") {
    Multicurve two = fx::mc(fx::s1());
    auto copies = parallel_copies(S, fx::s1(), true, 1, {});
    two.components.push_back(copies[0]);
    auto sub = bounds_embedded_subsurface(S, two, Multicurve{});
    CHECK_FALSE(sub.has_value());
  }
  SUBCASE("empty cycle bounds the empty set") {
    auto sub = bounds_embedded_subsurface(S, Multicurve{}, Multicurve{});
    REQUIRE(sub.has_value());
    CHECK(sub->comps.empty());
  }
  SUBCASE("non-null-homologous input is an error") {
    CHECK_THROWS_AS(bounds_embedded_subsurface(S, fx::mc(fx::u1()), Multicurve{}), error);
  }
}

TEST_CASE("overlap symmetry") {
  PolygonSurface S(3);
  int d12 = homological_distance(S, fx::mc(fx::g3_t1()), fx::mc(fx::g3_t2()));
  int d21 = homological_distance(S, fx::mc(fx::g3_t2()), fx::mc(fx::g3_t1()));
  CHECK(d12 == d21);
}

TEST_CASE("base face independence") {
  PolygonSurface S(3);
  OverlapFunction f1 = overlap_function(S, fx::mc(fx::g3_t1()), fx::mc(fx::g3_t2()));
  OverlapFunction f2 = overlap_function(S, fx::mc(fx::g3_t2()), fx::mc(fx::g3_t1()));
  CHECK(f1.max == f2.max);
  CHECK(*std::min_element(f1.value.begin(), f1.value.end()) == 0);
  CHECK(*std::min_element(f2.value.begin(), f2.value.end()) == 0);
}
