#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycles/base.hpp"
#include "cycles/words.hpp"

namespace cycles {

// Closed oriented genus-g surface presented as a 4g-gon with the standard
// identification word a1 b1 a1' b1' ... ag bg ag' bg'.  Side i runs from
// polygon vertex i to vertex i+1, counterclockwise.  A boundary point at
// parameter q in (0,1) along side s is glued to parameter 1-q along
// partner(s).
class PolygonSurface {
 public:
  explicit PolygonSurface(int genus);

  int genus() const { return genus_; }
  int num_sides() const { return 4 * genus_; }
  int euler() const { return 2 - 2 * genus_; }

  int partner(int side) const;
  // Generator index (0..2g-1) of the side pair: 2k for the a-side of handle
  // k, 2k+1 for the b-side.
  int pair_of(int side) const;
  // +1 on the side carrying the positive letter, -1 on its partner.
  int sign_of(int side) const;

  // The relator read around the link of the single vertex; drives Dehn's
  // algorithm for the word problem and conjugacy.
  const Word& relator() const { return relator_; }
  const DehnSolver& solver() const { return solver_; }

 private:
  int genus_;
  Word relator_;
  DehnSolver solver_;

  static Word trace_link(int genus);
};

// A transverse crossing of the glued side pair, stored on the side the curve
// exits through.
struct SidePoint {
  int side = 0;
  Rat pos;  // in (0,1)

  bool operator==(const SidePoint& o) const = default;
};

// Closed oriented curve as the cyclic sequence of its side crossings.  An
// empty sequence denotes a loop contained in the open polygon (necessarily
// contractible); those appear only transiently in surgery output.
struct Curve {
  std::vector<SidePoint> points;

  size_t size() const { return points.size(); }
  bool interior_loop() const { return points.empty(); }
};

struct Multicurve {
  std::vector<Curve> components;
  std::string label;

  bool empty() const { return components.empty(); }
};

struct HomologyClass {
  std::vector<long long> coords;  // length 2g, dual to the side pairs

  bool is_zero() const;
  bool is_primitive() const;
  bool operator==(const HomologyClass& o) const = default;
  HomologyClass operator+(const HomologyClass& o) const;
  HomologyClass operator-(const HomologyClass& o) const;
  HomologyClass operator*(long long k) const;
};

PolygonSurface make_surface(int genus);

// --- Boundary coordinates -------------------------------------------------

// Entry representative of a crossing: the glued image of its exit point.
SidePoint entry_point(const PolygonSurface& S, const SidePoint& exit);
// Total boundary coordinate in [0, 4g), counterclockwise.
Rat boundary_coord(const SidePoint& p);
// Canonical surface-point key: (low side of the pair, parameter there).
std::pair<int, Rat> surface_key(const PolygonSurface& S, const SidePoint& p);

// Chord of a curve inside the polygon, from one boundary point to the next.
struct Chord {
  Rat from;  // boundary coords
  Rat to;
};

// All chords of a curve, chord i ending at points[i].
std::vector<Chord> curve_chords(const PolygonSurface& S, const Curve& c);

// Strict interleaving of endpoint pairs on the boundary circle; equivalent
// to "every pair of embedded arcs with these endpoints crosses".
bool chords_cross(const Chord& c1, const Chord& c2);

// --- Curve and multicurve operations --------------------------------------

HomologyClass homology_class(const PolygonSurface& S, const Multicurve& m);
HomologyClass homology_class(const PolygonSurface& S, const Curve& c);
HomologyClass zero_class(const PolygonSurface& S);

long long pairing(const HomologyClass& x, const HomologyClass& y);

Word curve_word(const PolygonSurface& S, const Curve& c);
bool is_contractible(const PolygonSurface& S, const Curve& c);
bool freely_homotopic(const PolygonSurface& S, const Curve& c1, const Curve& c2);

// Conjugacy-class key of the curve's word; equal keys iff the oriented
// curves are freely homotopic.
Word curve_key(const PolygonSurface& S, const Curve& c);
// Sorted component keys; equal iff the multicurves are componentwise
// isotopic with matching multiplicities.
std::vector<Word> multicurve_key(const PolygonSurface& S, const Multicurve& m);

Curve reverse_curve(const PolygonSurface& S, const Curve& c);

// Embeddedness: all surface points distinct and no two chords interleave.
void check_embedded(const PolygonSurface& S, const Multicurve& m);
bool is_embedded(const PolygonSurface& S, const Multicurve& m);
// Embedded + every component essential.
void check_multicurve(const PolygonSurface& S, const Multicurve& m);

// True iff class(m) == alpha and no nonempty subset of components is null
// homologous.  Throws invalid_class for zero or imprimitive alpha.
bool validate_vertex(const PolygonSurface& S, const Multicurve& m, const HomologyClass& alpha);

// Joint canonical respacing: every crossing of every listed multicurve gets
// a fresh parameter i/(n+1) per side pair, order preserved, collisions
// resolved by list position.  This is the one general-position primitive;
// all mutating operations finish with it.
void normalize_joint(const PolygonSurface& S, std::vector<Multicurve*> ms);

// k parallel copies on the given side (true = left) of c, innermost first.
// Gaps are measured against the joint configuration in `context`.
std::vector<Curve> parallel_copies(const PolygonSurface& S, const Curve& c, bool left, int k,
                                   const std::vector<const Multicurve*>& context);

// k-fold Dehn twist of m about t.  Positive k twists so that
// [result] = [m] + k * pairing([t], [m]) * [t].
Multicurve dehn_twist(const PolygonSurface& S, const Multicurve& m, const Curve& t, int k);

// Geometric crossing count of the coordinate chords (no isotopy applied).
int raw_crossings(const PolygonSurface& S, const Multicurve& a, const Multicurve& b);

}  // namespace cycles
