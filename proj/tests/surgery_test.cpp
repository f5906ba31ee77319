#include "cycles/surgery.hpp"

#include "cycles/base.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cycles;

namespace {

// The Example 1 instance: gamma twisted k times by the bounding pair move.
Multicurve ex1_end(const PolygonSurface& S, int k) {
  Multicurve g = fx::mc(fx::g3_gamma());
  for (int i = 0; i < k; ++i) {
    g = dehn_twist(S, g, fx::g3_t1(), 1);
    g = dehn_twist(S, g, fx::g3_t2(), -1);
  }
  return g;
}

}  // namespace

TEST_CASE("smax surgery on a distance-one pair lands on the target") {
  PolygonSurface S(3);
  SurgeryCertificate cert = smax_surgery(S, fx::mc(fx::g3_t1()), fx::mc(fx::g3_t2()));
  CHECK(multicurve_key(S, cert.output) == multicurve_key(S, fx::mc(fx::g3_t2())));
  CHECK(homology_class(S, cert.output) == homology_class(S, cert.input));
  SurgeryCertificate cert2 = smin_surgery(S, fx::mc(fx::g3_t1()), fx::mc(fx::g3_t2()));
  CHECK(multicurve_key(S, cert2.output) == multicurve_key(S, fx::mc(fx::g3_t2())));
}

TEST_CASE("smax surgery drops the distance by exactly one") {
  PolygonSurface S(3);
  Multicurve gn = ex1_end(S, 3);
  Multicurve gi = fx::mc(fx::g3_gamma());
  int d = homological_distance(S, gi, gn);
  REQUIRE(d == 3);
  for (int step = 0; step < d; ++step) {
    SurgeryCertificate cert = smax_surgery(S, gi, gn);
    // Homology is preserved, the output is disjoint from the input, and the
    // difference bounds an embedded subsurface.
    CHECK(homology_class(S, cert.output) == homology_class(S, cert.input));
    CHECK(raw_crossings(S, cert.output, cert.input) == 0);
    auto sub = bounds_embedded_subsurface(S, cert.output, cert.input);
    CHECK(sub.has_value());
    int nd = homological_distance(S, cert.output, gn);
    CHECK(nd == d - step - 1);
    gi = cert.output;
  }
  CHECK(multicurve_key(S, gi) == multicurve_key(S, gn));
}

TEST_CASE("smin surgery also walks to the target") {
  PolygonSurface S(3);
  Multicurve gn = ex1_end(S, 2);
  Multicurve gi = fx::mc(fx::g3_gamma());
  int d = homological_distance(S, gi, gn);
  REQUIRE(d == 2);
  SurgeryCertificate cert = smin_surgery(S, gi, gn);
  CHECK(homological_distance(S, cert.output, gn) == d - 1);
  CHECK(homology_class(S, cert.output) == homology_class(S, gi));
}

TEST_CASE("surgery at distance zero reports nothing to do") {
  PolygonSurface S(3);
  CHECK_THROWS_AS(smax_surgery(S, fx::mc(fx::g3_t1()), fx::mc(fx::g3_t1())), error);
}

TEST_CASE("discard_trivial") {
  PolygonSurface S(2);
  SUBCASE("contractible wiggle component is removed") {
    Multicurve m;
    m.components.push_back(fx::u1());
    m.components.push_back(fx::curve({{1, rat(1, 4)}, {3, rat(19, 25)}}));  // wiggle loop
    auto res = discard_trivial(S, m);
    CHECK(res.kept.components.size() == 1);
    CHECK(res.discarded.size() == 1);
    REQUIRE(res.discs.size() == 1);
    CHECK(res.discs[0].chi == 1);
  }
  SUBCASE("no contractible components") {
    auto res = discard_trivial(S, fx::mc(fx::s1()));
    CHECK(res.kept.components.size() == 1);
    CHECK(res.discarded.empty());
  }
  SUBCASE("interior loop is removed") {
    Multicurve m = fx::mc(fx::u1());
    m.components.push_back(Curve{});  // chordless loop
    auto res = discard_trivial(S, m);
    CHECK(res.kept.components.size() == 1);
    CHECK(res.discarded.size() == 1);
  }
}

TEST_CASE("surger_along_arc: single-member class reroutes the host") {
  PolygonSurface S(3);
  // gamma crosses t2 once... use the EX1 pair at distance 2 so horizontal
  // arcs exist.
  Multicurve gn = ex1_end(S, 2);
  ReducedPair rp = reduce_pair(S, fx::mc(fx::g3_gamma()), gn);
  const Arrangement& A = *rp.arr;
  // Find a horizontal arc of the target (owner 1).
  int harc = -1;
  for (size_t i = 0; i < A.arcs().size(); ++i)
    if (A.arcs()[i].owner == 1 && !A.arcs()[i].circle && A.arcs()[i].horizontal()) {
      harc = static_cast<int>(i);
      break;
    }
  REQUIRE(harc >= 0);
  Multicurve out = surger_along_arc(A, harc, harc);
  CHECK(homology_class(S, out) == homology_class(S, rp.m1));

  SUBCASE("vertical arcs are rejected") {
    int varc = -1;
    for (size_t i = 0; i < A.arcs().size(); ++i)
      if (A.arcs()[i].owner == 1 && !A.arcs()[i].circle && !A.arcs()[i].horizontal()) {
        varc = static_cast<int>(i);
        break;
      }
    if (varc >= 0) CHECK_THROWS_AS(surger_along_arc(A, varc, varc), error);
  }
}

TEST_CASE("every surgery output keeps the homology class") {
  PolygonSurface S(3);
  for (int k : {1, 2, 3}) {
    Multicurve gn = ex1_end(S, k);
    SurgeryCertificate cert = smax_surgery(S, fx::mc(fx::g3_gamma()), gn);
    CHECK(homology_class(S, cert.output) == homology_class(S, fx::mc(fx::g3_gamma())));
    SurgeryCertificate cert2 = smin_surgery(S, fx::mc(fx::g3_gamma()), gn);
    CHECK(homology_class(S, cert2.output) == homology_class(S, fx::mc(fx::g3_gamma())));
  }
}
