#pragma once

#include <optional>
#include <vector>

#include "cycles/surface.hpp"

namespace cycles {

// Embedded 4-valent graph of one or two multicurves on the surface, with the
// polygon-level subdivision, the glued complement components, and the
// horizontal/vertical arc structure.
//
// Everything is index-based: chords -> crossings -> pieces -> polygon faces
// -> glued components -> surface arcs.
class Arrangement {
 public:
  // Crossing between a chord of owner 0 and a chord of owner 1.
  struct Crossing {
    int chord_a = -1;  // owner 0 chord
    int chord_b = -1;  // owner 1 chord
    // +1 when the owner-1 strand crosses the owner-0 strand from its left
    // to its right.
    int sign = 0;
    // Arcs meeting this crossing, by owner and end.
    int a_in = -1, a_out = -1, b_in = -1, b_out = -1;
  };

  struct ChordRec {
    int owner, comp, idx;        // position in owners_[owner]
    Rat from, to;                // boundary coordinates
    std::vector<int> crossings;  // ordered along the chord
  };

  // Maximal piece of a curve between consecutive crossings on the surface
  // (or a full circle when the component meets no crossing).
  struct Arc {
    int owner, comp;
    bool circle = false;
    int start_cross = -1, end_cross = -1;
    // Side crossings strictly inside the arc, in travel order (for circles:
    // the whole component).
    std::vector<SidePoint> interior;
    int left_comp = -1, right_comp = -1;
    // For non-circles: the side of the other multicurve the arc leaves from
    // and approaches toward (true = left).
    bool leaves_left = false, approaches_left = false;
    int start_chord = -1, end_chord = -1;  // chords carrying the endpoints

    bool horizontal() const { return !circle && leaves_left == approaches_left; }
  };

  struct Component {
    std::vector<int> polyfaces;
    int chi = 0;
    bool contains_vertex = false;       // the single 0-cell of the 4g-gon
    std::vector<int> boundary_arcs;     // arcs with this component on a side
    enum Kind { kDisc, kAnnulus, kOther } kind = kOther;
  };

  // Maximal family of mutually homotopic arcs of one owner, chained by
  // rectangle faces.
  struct ArcClass {
    int owner;
    std::vector<int> members;       // ordered along the transversal chain
    bool horizontal = false;
    bool left_side = false;         // side of the other multicurve (horizontal only)
    bool cyclic = false;            // rectangle chain closes up
    std::vector<int> rect_comps;    // components between consecutive members
    int end_before = -1, end_after = -1;  // nontrivial components at the short sides
  };

  static Arrangement build(const PolygonSurface& S, const Multicurve& ma, const Multicurve& mb);

  const PolygonSurface& surface() const { return *S_; }
  const Multicurve& owner(int i) const { return owners_[i]; }

  const std::vector<ChordRec>& chords() const { return chords_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Component>& components() const { return comps_; }
  const std::vector<ArcClass>& classes(int owner) const { return classes_[owner]; }
  // Components of owner curves that meet no crossing, as arc indices.
  const std::vector<int>& full_circles() const { return full_circles_; }

  int genus() const { return S_->genus(); }

  // Face index (component id) containing the single surface vertex.
  int vertex_component() const { return vertex_comp_; }

  // First bigon component: a disc bounded by one arc of each owner meeting
  // in two distinct crossings.
  std::optional<int> find_bigon() const;

  // --- polygon-level data, used by the renderer -----------------------------
  struct PolyNode {
    enum Kind { kCorner, kMarked, kCross } kind;
    Rat bc;       // boundary coordinate (corner/marked only)
    int crossing = -1;
  };
  struct PolyEdge {
    int a, b;            // node ids
    bool on_curve;       // chord piece vs boundary segment
    int chord = -1;      // for chord pieces
    int arc = -1;        // surface arc through this piece
  };
  const std::vector<PolyNode>& poly_nodes() const { return nodes_; }
  const std::vector<PolyEdge>& poly_edges() const { return edges_; }
  // Faces as dart cycles; dart = 2*edge+dir, face lies left of each dart.
  const std::vector<std::vector<int>>& poly_faces() const { return faces_; }
  int face_component(int polyface) const { return face_comp_[polyface]; }
  // Component left/right of a directed chord piece of the given edge.
  int left_component_of_edge(int edge) const;
  int right_component_of_edge(int edge) const;

 private:
  const PolygonSurface* S_ = nullptr;
  Multicurve owners_[2];
  std::vector<ChordRec> chords_;
  std::vector<Crossing> crossings_;
  std::vector<Arc> arcs_;
  std::vector<Component> comps_;
  std::vector<ArcClass> classes_[2];
  std::vector<int> full_circles_;
  int vertex_comp_ = -1;

  std::vector<PolyNode> nodes_;
  std::vector<PolyEdge> edges_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> dart_face_;  // face id left of each dart
  std::vector<int> face_comp_;

  void build_subdivision();
  void build_components();
  void build_arcs();
  void classify();
  void euler_check() const;
};

// Repeated bigon pulls until the pair is in minimal position.  Returns the
// moved copies together with their arrangement.
struct MinimalPair {
  Multicurve a, b;
  Arrangement arr;
};
MinimalPair minimal_position(const PolygonSurface& S, const Multicurve& ma, const Multicurve& mb);

// Components of S minus a single multicurve.
std::vector<Arrangement::Component> complement_components(const PolygonSurface& S,
                                                          const Multicurve& m);

bool is_filling(const PolygonSurface& S, const Multicurve& ma, const Multicurve& mb);

}  // namespace cycles
