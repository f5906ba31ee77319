#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cycles/arrangement.hpp"

namespace cycles {

// The overlap function of m2 - m1 on the complement components of the
// minimal-position arrangement.  Crossing an arc of m2 from its right to its
// left raises the value by one; crossing an arc of m1 lowers it; the minimum
// is normalized to zero.
struct OverlapFunction {
  std::shared_ptr<const Arrangement> arr;  // owner 0 = m1, owner 1 = m2
  std::vector<int> value;                  // per component
  int max = 0;

  const Arrangement& arrangement() const { return *arr; }
};

// Face set of an arrangement together with its boundary arcs.
struct Subsurface {
  std::shared_ptr<const Arrangement> arr;
  std::vector<int> comps;  // component ids
  int chi = 0;
  // Arcs on the frontier, with the side the subsurface lies on.
  struct BoundaryArc {
    int arc;
    bool surface_on_left;
  };
  std::vector<BoundaryArc> boundary;

  bool contains(int comp) const;
};

Subsurface make_subsurface(std::shared_ptr<const Arrangement> arr, std::vector<int> comps);

// Cancels freely homotopic equal-orientation component pairs between the
// multicurves, puts them in minimal position, and computes the overlap
// function.  Throws not_homologous when the face labeling is inconsistent.
OverlapFunction overlap_function(const PolygonSurface& S, const Multicurve& m1,
                                 const Multicurve& m2);

int homological_distance(const PolygonSurface& S, const Multicurve& m1, const Multicurve& m2);

// Graph distance in the complex of cycles; equals the homological distance.
int distance(const PolygonSurface& S, const Multicurve& m1, const Multicurve& m2);

enum class Extremal { kMax, kMin };
Subsurface extremal_subsurface(const OverlapFunction& f, Extremal which);

// Faces with f >= level.
Subsurface sublevel_subsurface(const OverlapFunction& f, int level);

// The subsurface bounded by a null homologous cycle, when the cycle's
// overlap function only takes the values 0 and 1; otherwise nullopt.
// The cycle is passed as the formal difference plus - minus.
std::optional<Subsurface> bounds_embedded_subsurface(const PolygonSurface& S,
                                                     const Multicurve& plus,
                                                     const Multicurve& minus);

bool is_edge(const PolygonSurface& S, const Multicurve& v1, const Multicurve& v2);

// Shared preprocessing: homotopic-cancellation then minimal position.
struct ReducedPair {
  Multicurve m1, m2;
  std::shared_ptr<Arrangement> arr;
};
ReducedPair reduce_pair(const PolygonSurface& S, const Multicurve& m1, const Multicurve& m2);

// Overlap values computed on an existing arrangement.
OverlapFunction overlap_on(std::shared_ptr<const Arrangement> arr);

}  // namespace cycles
