#include "cycles/surface.hpp"

#include "cycles/base.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cycles;

TEST_CASE("make_surface") {
  PolygonSurface s2 = make_surface(2);
  CHECK(s2.num_sides() == 8);
  CHECK(s2.euler() == -2);
  PolygonSurface s3 = make_surface(3);
  CHECK(s3.num_sides() == 12);
  CHECK(s3.euler() == -4);
  CHECK_THROWS_AS(make_surface(1), error);
}

TEST_CASE("partner involution and surface keys") {
  PolygonSurface S(2);
  for (int s = 0; s < 8; ++s) {
    CHECK(S.partner(S.partner(s)) == s);
    CHECK(S.pair_of(s) == S.pair_of(S.partner(s)));
    CHECK(S.sign_of(s) == -S.sign_of(S.partner(s)));
  }
  SidePoint p{3, rat(1, 4)};
  SidePoint q = entry_point(S, p);
  CHECK(q.side == 1);
  CHECK(q.pos == rat(3, 4));
  CHECK(surface_key(S, p) == surface_key(S, q));
}

TEST_CASE("homology classes of fixtures") {
  PolygonSurface S(2);
  auto h = homology_class(S, fx::mc(fx::u1()));
  CHECK(h.coords == std::vector<long long>{1, 0, 0, 0});
  CHECK(homology_class(S, fx::mc(fx::v1())).coords == std::vector<long long>{0, 1, 0, 0});
  // Boundary of the one-holed torus is null homologous.
  CHECK(homology_class(S, fx::mc(fx::s1())).is_zero());
  // Additivity over disjoint parallel copies.
  Multicurve two;
  two.components.push_back(fx::u1());
  auto copies = parallel_copies(S, fx::u1(), true, 1, {});
  two.components.push_back(copies[0]);
  check_embedded(S, two);
  CHECK(homology_class(S, two).coords == std::vector<long long>{2, 0, 0, 0});
}

TEST_CASE("pairing") {
  PolygonSurface S(2);
  auto ea1 = homology_class(S, fx::mc(fx::u1()));
  auto eb1 = homology_class(S, fx::mc(fx::v1()));
  auto ea2 = homology_class(S, fx::mc(fx::u2()));
  CHECK(pairing(ea1, eb1) == 1);
  CHECK(pairing(eb1, ea1) == -1);
  CHECK(pairing(ea1, ea1) == 0);
  CHECK(pairing(ea1, ea2) == 0);
  HomologyClass bad{std::vector<long long>(6, 0)};
  CHECK_THROWS_AS(pairing(ea1, bad), error);
}

TEST_CASE("geometric crossing sign matches the pairing") {
  // u1 and v1 cross exactly once and pair to +1; raw crossing count agrees.
  PolygonSurface S(2);
  CHECK(raw_crossings(S, fx::mc(fx::u1()), fx::mc(fx::v1())) == 1);
}

TEST_CASE("curve words") {
  PolygonSurface S(2);
  CHECK(curve_word(S, fx::u1()) == Word{1});
  // A loop crossing a side pair and coming straight back reduces away.
  Curve wiggle = fx::curve({{0, rat(1, 3)}, {2, rat(1, 3)}});
  CHECK(curve_word(S, wiggle).empty());
  // The separating curve reads the commutator of the handle-one generators.
  Word w = curve_word(S, fx::s1());
  CHECK(w.size() == 4);
  CHECK(S.solver().conjugate(w, Word{1, -2, -1, 2}));
}

TEST_CASE("is_contractible") {
  PolygonSurface S(2);
  CHECK_FALSE(is_contractible(S, fx::u1()));
  CHECK_FALSE(is_contractible(S, fx::s1()));
  Curve wiggle = fx::curve({{0, rat(1, 3)}, {2, rat(1, 3)}});
  CHECK(is_contractible(S, wiggle));
  Curve interior;  // chordless loop inside the polygon
  CHECK(is_contractible(S, interior));
}

TEST_CASE("freely_homotopic") {
  PolygonSurface S(2);
  CHECK(freely_homotopic(S, fx::u1(), fx::u1()));
  auto copies = parallel_copies(S, fx::u1(), false, 1, {});
  CHECK(freely_homotopic(S, fx::u1(), copies[0]));
  Curve rev = reverse_curve(S, fx::u1());
  CHECK_FALSE(freely_homotopic(S, fx::u1(), rev));
  CHECK_FALSE(freely_homotopic(S, fx::u1(), fx::v1()));
}

TEST_CASE("fixture sanity: genus-3 bounding pair") {
  PolygonSurface S(3);
  check_multicurve(S, fx::mc(fx::g3_t1()));
  check_multicurve(S, fx::mc(fx::g3_t2()));
  Multicurve both;
  both.components.push_back(fx::g3_t1());
  both.components.push_back(fx::g3_t2());
  check_embedded(S, both);  // disjoint
  // Homologous but not homotopic: a genuine bounding pair.
  CHECK(homology_class(S, fx::mc(fx::g3_t1())) == homology_class(S, fx::mc(fx::g3_t2())));
  CHECK_FALSE(freely_homotopic(S, fx::g3_t1(), fx::g3_t2()));
  // The path curve crosses each of the bounding pair curves once.
  CHECK(raw_crossings(S, fx::mc(fx::g3_gamma()), fx::mc(fx::g3_t1())) == 1);
  CHECK(raw_crossings(S, fx::mc(fx::g3_gamma()), fx::mc(fx::g3_t2())) == 1);
}

TEST_CASE("fixture sanity: pushed curve cobounds with u2") {
  PolygonSurface S(2);
  check_multicurve(S, fx::mc(fx::u2_pushed()));
  CHECK(homology_class(S, fx::mc(fx::u2_pushed())) == homology_class(S, fx::mc(fx::u2())));
}

TEST_CASE("embeddedness rejects crossings and repeats") {
  PolygonSurface S(2);
  Multicurve crossing;
  crossing.components.push_back(fx::u1());
  crossing.components.push_back(fx::v1());
  CHECK_FALSE(is_embedded(S, crossing));
  Multicurve repeated;
  repeated.components.push_back(fx::u1());
  repeated.components.push_back(fx::u1());
  CHECK_FALSE(is_embedded(S, repeated));
}

TEST_CASE("normalize_joint keeps order and separates ties") {
  PolygonSurface S(2);
  Multicurve a = fx::mc(fx::u1());
  Multicurve b = fx::mc(fx::u1());  // identical copy
  normalize_joint(S, {&a, &b});
  CHECK(a.components[0].points[0].pos != b.components[0].points[0].pos);
  Multicurve both;
  both.components = {a.components[0], b.components[0]};
  check_embedded(S, both);
  // Normalization is idempotent on canonical input.
  Multicurve a2 = a;
  normalize_joint(S, {&a2, &b});
  CHECK(a2.components[0].points[0].pos == a.components[0].points[0].pos);
}

TEST_CASE("dehn twist basics") {
  PolygonSurface S(2);
  Multicurve m = fx::mc(fx::v1());

  SUBCASE("k = 0 is the identity") {
    Multicurve r = dehn_twist(S, m, fx::u1(), 0);
    CHECK(multicurve_key(S, r) == multicurve_key(S, m));
  }
  SUBCASE("twisting about a disjoint curve does nothing") {
    Multicurve r = dehn_twist(S, m, fx::u2(), 3);
    CHECK(multicurve_key(S, r) == multicurve_key(S, m));
  }
  SUBCASE("homology transform") {
    // [T_t^k m] = [m] + k * pairing([t],[m]) * [t]
    for (int k : {1, -1, 2}) {
      Multicurve r = dehn_twist(S, m, fx::u1(), k);
      auto hm = homology_class(S, m);
      auto ht = homology_class(S, fx::mc(fx::u1()));
      auto expect = hm + ht * (k * pairing(ht, hm));
      CHECK(homology_class(S, r) == expect);
    }
  }
  SUBCASE("inverse twist undoes the twist") {
    Multicurve r = dehn_twist(S, m, fx::u1(), 2);
    Multicurve back = dehn_twist(S, r, fx::u1(), -2);
    CHECK(multicurve_key(S, back) == multicurve_key(S, m));
  }
  SUBCASE("bounding pair move preserves homology") {
    PolygonSurface S3(3);
    Multicurve g = fx::mc(fx::g3_gamma());
    Multicurve r = dehn_twist(S3, g, fx::g3_t1(), 1);
    r = dehn_twist(S3, r, fx::g3_t2(), -1);
    CHECK(homology_class(S3, r) == homology_class(S3, g));
    check_embedded(S3, r);
    CHECK_FALSE(multicurve_key(S3, r) == multicurve_key(S3, g));
  }
}

TEST_CASE("homology is isotopy invariant under reroutings") {
  PolygonSurface S(2);
  // A wiggled representative of u1: crosses b1 and immediately returns.
  Curve wiggled = fx::curve({{0, rat(1, 2)}, {1, rat(1, 4)}, {3, rat(19, 25)}});
  check_embedded(S, fx::mc(wiggled));
  CHECK(homology_class(S, wiggled) == homology_class(S, fx::u1()));
  CHECK(freely_homotopic(S, wiggled, fx::u1()));
}

TEST_CASE("validate_vertex") {
  PolygonSurface S(2);
  auto alpha = homology_class(S, fx::mc(fx::u1()));
  CHECK(validate_vertex(S, fx::mc(fx::u1()), alpha));

  // Null homologous submulticurve: u1 plus the separating curve.
  Multicurve bad;
  bad.components.push_back(fx::u1());
  bad.components.push_back(fx::s1());
  CHECK_FALSE(validate_vertex(S, bad, alpha));

  // Two opposite parallels plus a third copy sum to alpha but contain a
  // null homologous pair.
  auto copies = parallel_copies(S, fx::u1(), true, 2, {});
  Multicurve trip;
  trip.components.push_back(fx::u1());
  trip.components.push_back(reverse_curve(S, copies[0]));
  trip.components.push_back(copies[1]);
  check_embedded(S, trip);
  CHECK(homology_class(S, trip) == alpha);
  CHECK_FALSE(validate_vertex(S, trip, alpha));

  CHECK_THROWS_AS(validate_vertex(S, fx::mc(fx::u1()), zero_class(S)), error);
  auto imprimitive = alpha * 2;
  CHECK_THROWS_AS(validate_vertex(S, fx::mc(fx::u1()), imprimitive), error);
}

TEST_CASE("reverse curve reverses the class") {
  PolygonSurface S(2);
  Curve r = reverse_curve(S, fx::s1());
  check_embedded(S, fx::mc(r));
  CHECK(homology_class(S, r).is_zero());
  Curve ru = reverse_curve(S, fx::u1());
  CHECK(homology_class(S, ru).coords == std::vector<long long>{-1, 0, 0, 0});
}
