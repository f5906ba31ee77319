#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycles/surgery.hpp"

namespace cycles {

// One step of a path over a fixed base arrangement: the face set bounded by
// the vertex difference plus the discard bookkeeping.
struct PathStep {
  std::vector<int> region;                  // base faces of v_{i+1} - v_i
  std::vector<int> surgered_arcs;           // owner-1 base arcs on the region frontier
  std::vector<std::vector<int>> disc_ints;  // discs of discarded contractibles
  std::vector<std::vector<int>> null_ints;  // interiors of discarded null pieces
  int sign = 1;                             // +1 for an S_max step, -1 for S_min
};

struct GeodesicPath {
  const PolygonSurface* S = nullptr;
  std::shared_ptr<const Arrangement> base;  // A(v_front, v_back), reduced pair
  OverlapFunction f;                        // overlap of the endpoints on base
  std::vector<Multicurve> vertices;         // v_1 .. v_n, normalized coordinates
  // Dart form per vertex when the vertex is a subcomplex of the base
  // 1-complex (always, for middle paths).
  std::vector<ArcChain> chains;
  std::vector<PathStep> steps;  // size n-1
  bool is_middle = false;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// The canonical geodesic: repeated surgery corresponding to S_max.
GeodesicPath middle_path(const PolygonSurface& S, const Multicurve& g1, const Multicurve& gn);

// middle_path(gn, g1) reversed is vertexwise isotopic to middle_path(g1, gn).
bool reverse_middle_path_check(const PolygonSurface& S, const GeodesicPath& path);

// Bowditch tightness adapted to the cycle complex: no curve of an interior
// vertex admits a crossing curve disjoint from every earlier-later pair.
bool is_tight(const PolygonSurface& S, const std::vector<Multicurve>& vertices);
bool is_tight(const PolygonSurface& S, const GeodesicPath& path);

// Patches P_1..P_{n-1}: the base face sets altered up to each step.
std::vector<std::vector<int>> compute_patches(const GeodesicPath& path);

// Every component of `next` grows from one component of `prev` by attaching
// one rectangle along each vertex arc of the frontier.
bool boundary_gluing(const GeodesicPath& path, const std::vector<int>& prev,
                     const std::vector<int>& next, const ArcChain& vertex_chain);

enum class CriticalCase { kNewComponent, kBlockedArc, kHandle, kOther };
struct CriticalReport {
  std::vector<int> levels;          // 1 < i < n, path vertex indices (1-based)
  std::vector<CriticalCase> cases;  // parallel to levels
};
CriticalReport critical_levels(const GeodesicPath& path);

// (gamma_{l1+1}, gamma_{l2}) on the middle path; levels are overlap values.
std::pair<Multicurve, Multicurve> sublevel_projection(const PolygonSurface& S,
                                                      const Multicurve& g1, const Multicurve& gn,
                                                      int l1, int l2);

// Surgery choices at one vertex: the two necessary plans plus the optional
// horizontal arc classes away from both extremal boundaries.
struct StepOptions {
  Multicurve smax_result, smin_result;
  bool plans_differ = false;
  std::shared_ptr<const Arrangement> arr;  // arrangement of the reduced pair
  std::vector<int> optional_classes;       // owner-1 class indices in arr
};
StepOptions enumerate_step_options(const PolygonSurface& S, const Multicurve& gi,
                                   const Multicurve& gn);

struct Enumeration {
  std::vector<GeodesicPath> paths;
  bool complete = true;  // false when the cap was hit
};
Enumeration enumerate_tight_geodesics(const PolygonSurface& S, const Multicurve& g1,
                                      const Multicurve& gn, int cap);

// Discrete Jacobi field: an optional surgery propagated along the path.
struct JacobiField {
  const GeodesicPath* path = nullptr;
  int support_begin = 0, support_end = 0;  // vertex indices, inclusive
  // Deformed vertices v_j' for j in the support.
  std::vector<Multicurve> deformed;
  // Optional classes used per supported vertex (size of class stack per j).
  int num_arcs = 1;

  bool zero() const { return deformed.empty(); }
};

// h designates an optional class of enumerate_step_options(vertices[g], gn).
JacobiField make_jacobi(const PolygonSurface& S, const GeodesicPath& path, int optional_class,
                        int g);
JacobiField zero_jacobi(const GeodesicPath& path);
std::optional<JacobiField> add_jacobi(const PolygonSurface& S, const JacobiField& j1,
                                      const JacobiField& j2);
// The path with the field applied; a tight geodesic with the same endpoints.
std::vector<Multicurve> deform_path(const GeodesicPath& path, const JacobiField& j);

int hausdorff_distance(const PolygonSurface& S, const GeodesicPath& p1, const GeodesicPath& p2);

// Layered DAG of an enumerated family in DOT format.
std::string family_dot(const PolygonSurface& S, const Enumeration& e);

}  // namespace cycles
