#pragma once

// Shared hand-checked fixtures on the genus-2 octagon.  Sides are labeled
// 0..7 = a1 b1 a1' b1' a2 b2 a2' b2'; all coordinates were verified by hand
// against the chord-interleaving rules.

#include "cycles/surface.hpp"

namespace fx {

using cycles::Curve;
using cycles::Multicurve;
using cycles::Rat;
using cycles::SidePoint;
using cycles::rat;

inline Curve curve(std::initializer_list<std::pair<int, Rat>> pts) {
  Curve c;
  for (auto& [s, q] : pts) c.points.push_back(SidePoint{s, q});
  return c;
}

inline Multicurve mc(const Curve& c, std::string label = "") {
  Multicurve m;
  m.components.push_back(c);
  m.label = std::move(label);
  return m;
}

// Crosses the a1 side pair once, positively.
inline Curve u1() { return curve({{0, rat(1, 2)}}); }
// Crosses the b1 side pair once.
inline Curve v1() { return curve({{1, rat(1, 2)}}); }
// Crosses the a2 side pair once.
inline Curve u2() { return curve({{4, rat(1, 2)}}); }
// Crosses the b2 side pair once.
inline Curve v2() { return curve({{5, rat(1, 2)}}); }

// Separating curve between the two handles; word is the commutator of the
// handle-one generators, class is zero.
inline Curve s1() {
  return curve({{0, rat(2, 5)}, {3, rat(2, 5)}, {2, rat(2, 5)}, {1, rat(2, 5)}});
}

// --- Genus 3 fixtures (12-gon, sides 0..11 = a1 b1 a1' b1' a2 b2 a2' b2'
// a3 b3 a3' b3').  Bounding pairs need genus >= 3: two disjoint homologous
// curves on genus 2 always cobound an annulus.

// Crosses the a1 pair once.
inline Curve g3_t1() { return curve({{0, rat(1, 2)}}); }

// Homologous to g3_t1 but routed around the second handle; together they
// bound a one-holed torus.  Word is a*[c,d'].
inline Curve g3_t2() {
  return curve(
      {{0, rat(1, 4)}, {4, rat(1, 4)}, {7, rat(1, 4)}, {6, rat(1, 4)}, {5, rat(1, 4)}});
}

// Crosses the b1 pair once; meets each of g3_t1, g3_t2 exactly once.
inline Curve g3_gamma() { return curve({{1, rat(1, 2)}}); }

// Homologous to u2; band sum of a parallel of u2 with the separating curve.
// Together with u2 it cobounds a region: the basic edge fixture.
inline Curve u2_pushed() {
  return curve(
      {{4, rat(27, 50)}, {0, rat(2, 5)}, {3, rat(2, 5)}, {2, rat(2, 5)}, {1, rat(2, 5)}});
}

}  // namespace fx
