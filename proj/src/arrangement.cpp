#include "cycles/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cycles {

namespace {

bool in_open_arc(const Rat& x, const Rat& a, const Rat& b) {
  if (a < b) return a < x && x < b;
  return x > a || x < b;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Arrangement Arrangement::build(const PolygonSurface& S, const Multicurve& ma,
                               const Multicurve& mb) {
  Arrangement A;
  A.S_ = &S;
  A.owners_[0] = ma;
  A.owners_[1] = mb;

  // General position: every surface point appears exactly once.
  std::set<std::pair<int, Rat>> keys;
  for (int o = 0; o < 2; ++o)
    for (const Curve& c : A.owners_[o].components) {
      require(!c.points.empty(), errc::invalid_curve, "interior loop in arrangement input");
      for (const SidePoint& p : c.points) {
        auto key = surface_key(S, p);
        require(!keys.count(key), errc::degenerate_position, "shared side point");
        keys.insert(key);
      }
    }

  // Chords.
  for (int o = 0; o < 2; ++o)
    for (size_t ci = 0; ci < A.owners_[o].components.size(); ++ci) {
      auto ch = curve_chords(S, A.owners_[o].components[ci]);
      for (size_t i = 0; i < ch.size(); ++i)
        A.chords_.push_back(ChordRec{o, static_cast<int>(ci), static_cast<int>(i), ch[i].from,
                                     ch[i].to, {}});
    }

  // Crossings (different owners only; same-owner chords must be disjoint).
  for (size_t i = 0; i < A.chords_.size(); ++i)
    for (size_t j = i + 1; j < A.chords_.size(); ++j) {
      const ChordRec& x = A.chords_[i];
      const ChordRec& y = A.chords_[j];
      bool cross = chords_cross(Chord{x.from, x.to}, Chord{y.from, y.to});
      if (x.owner == y.owner) {
        require(!cross, errc::invalid_curve, "owner multicurve is not embedded");
        continue;
      }
      if (!cross) continue;
      int ca = x.owner == 0 ? static_cast<int>(i) : static_cast<int>(j);
      int cb = x.owner == 0 ? static_cast<int>(j) : static_cast<int>(i);
      int id = static_cast<int>(A.crossings_.size());
      // Owner-1 strand starts on the left of the owner-0 chord iff its start
      // lies on the ccw arc from the owner-0 chord's head back to its tail.
      int sign = in_open_arc(A.chords_[cb].from, A.chords_[ca].to, A.chords_[ca].from) ? 1 : -1;
      A.crossings_.push_back(Crossing{ca, cb, sign});
      A.chords_[i].crossings.push_back(id);
      A.chords_[j].crossings.push_back(id);
    }

  // Order crossings along each chord: the crossers are pairwise disjoint, so
  // sorting their endpoints inside the chord's forward arc gives the order.
  Rat modulus(4 * S.genus());
  for (size_t ci = 0; ci < A.chords_.size(); ++ci) {
    ChordRec& c = A.chords_[ci];
    auto key = [&](int xid) {
      const Crossing& x = A.crossings_[xid];
      const ChordRec& other =
          A.chords_[x.chord_a == static_cast<int>(ci) ? x.chord_b : x.chord_a];
      Rat e = in_open_arc(other.from, c.from, c.to) ? other.from : other.to;
      Rat d = e - c.from;
      if (d < Rat(0)) d += modulus;
      return d;
    };
    std::sort(c.crossings.begin(), c.crossings.end(),
              [&](int a, int b) { return key(a) < key(b); });
  }

  A.build_subdivision();
  A.build_components();
  A.build_arcs();
  A.classify();
  A.euler_check();
  return A;
}

void Arrangement::build_subdivision() {
  const PolygonSurface& S = *S_;
  int nsides = S.num_sides();

  // Nodes: corners, then one marked node per chord endpoint, then crossings.
  std::map<Rat, int> bc_node;
  for (int k = 0; k < nsides; ++k) {
    nodes_.push_back(PolyNode{PolyNode::kCorner, Rat(k), -1});
    bc_node[Rat(k)] = k;
  }
  auto marked = [&](const Rat& bc) {
    auto it = bc_node.find(bc);
    if (it != bc_node.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(PolyNode{PolyNode::kMarked, bc, -1});
    bc_node[bc] = id;
    return id;
  };
  std::vector<int> chord_from(chords_.size()), chord_to(chords_.size());
  for (size_t i = 0; i < chords_.size(); ++i) {
    chord_from[i] = marked(chords_[i].from);
    chord_to[i] = marked(chords_[i].to);
  }
  std::vector<int> cross_node(crossings_.size());
  for (size_t x = 0; x < crossings_.size(); ++x) {
    cross_node[x] = static_cast<int>(nodes_.size());
    nodes_.push_back(PolyNode{PolyNode::kCross, Rat(0), static_cast<int>(x)});
  }

  // Boundary segments between consecutive boundary nodes.
  std::vector<std::pair<Rat, int>> bnodes(bc_node.begin(), bc_node.end());
  std::vector<int> bd_edges;
  for (size_t i = 0; i < bnodes.size(); ++i) {
    int a = bnodes[i].second;
    int b = bnodes[(i + 1) % bnodes.size()].second;
    bd_edges.push_back(static_cast<int>(edges_.size()));
    edges_.push_back(PolyEdge{a, b, false, -1, -1});
  }

  // Chord pieces, oriented with the curve.
  std::vector<std::vector<int>> piece_edges(chords_.size());
  for (size_t ci = 0; ci < chords_.size(); ++ci) {
    std::vector<int> stops{chord_from[ci]};
    for (int xid : chords_[ci].crossings) stops.push_back(cross_node[xid]);
    stops.push_back(chord_to[ci]);
    for (size_t k = 0; k + 1 < stops.size(); ++k) {
      piece_edges[ci].push_back(static_cast<int>(edges_.size()));
      edges_.push_back(PolyEdge{stops[k], stops[k + 1], true, static_cast<int>(ci), -1});
    }
  }

  // Rotations: darts leaving each node in counterclockwise order.
  std::vector<std::vector<int>> rot(nodes_.size());
  auto dart_from = [&](int edge, int node) {
    return edges_[edge].a == node ? 2 * edge : 2 * edge + 1;
  };
  for (size_t i = 0; i < bnodes.size(); ++i) {
    int node = bnodes[i].second;
    int enext = bd_edges[i];
    int eprev = bd_edges[(i + bnodes.size() - 1) % bnodes.size()];
    rot[node].push_back(dart_from(enext, node));
    if (nodes_[node].kind == PolyNode::kMarked) {
      for (size_t ci = 0; ci < chords_.size(); ++ci) {
        if (chord_from[ci] == node)
          rot[node].push_back(dart_from(piece_edges[ci].front(), node));
        else if (chord_to[ci] == node)
          rot[node].push_back(dart_from(piece_edges[ci].back(), node));
      }
      require(rot[node].size() == 2, errc::internal, "marked node degree");
    }
    rot[node].push_back(dart_from(eprev, node));
  }
  for (size_t x = 0; x < crossings_.size(); ++x) {
    const Crossing& cr = crossings_[x];
    int node = cross_node[x];
    auto fwd_bwd = [&](int chord) {
      const auto& xs = chords_[chord].crossings;
      int pos =
          static_cast<int>(std::find(xs.begin(), xs.end(), static_cast<int>(x)) - xs.begin());
      int efwd = piece_edges[chord][pos + 1];
      int ebwd = piece_edges[chord][pos];
      return std::pair<int, int>{dart_from(efwd, node), dart_from(ebwd, node)};
    };
    auto [afwd, abwd] = fwd_bwd(cr.chord_a);
    auto [bfwd, bbwd] = fwd_bwd(cr.chord_b);
    if (cr.sign == 1)
      rot[node] = {afwd, bbwd, abwd, bfwd};
    else
      rot[node] = {afwd, bfwd, abwd, bbwd};
  }

  // Face tracing: the face lies on the left of each of its darts; the
  // successor of d is the rotation-predecessor of reverse(d) at head(d).
  size_t ndarts = 2 * edges_.size();
  std::vector<int> pos_in_rot(ndarts, -1);
  for (size_t n = 0; n < nodes_.size(); ++n)
    for (size_t k = 0; k < rot[n].size(); ++k) pos_in_rot[rot[n][k]] = static_cast<int>(k);
  auto head = [&](int d) { return d % 2 == 0 ? edges_[d / 2].b : edges_[d / 2].a; };
  auto next_dart = [&](int d) {
    int r = d ^ 1;
    int v = head(d);
    const auto& rv = rot[v];
    int k = pos_in_rot[r];
    return rv[(k + rv.size() - 1) % rv.size()];
  };
  dart_face_.assign(ndarts, -1);
  for (size_t d0 = 0; d0 < ndarts; ++d0) {
    if (dart_face_[d0] != -1) continue;
    int f = static_cast<int>(faces_.size());
    faces_.emplace_back();
    int d = static_cast<int>(d0);
    do {
      dart_face_[d] = f;
      faces_[f].push_back(d);
      d = next_dart(d);
    } while (d != static_cast<int>(d0));
  }

  // The outer face is the one left of a clockwise boundary dart.
  int outer = dart_face_[bd_edges[0] * 2 + 1];
  int last = static_cast<int>(faces_.size()) - 1;
  if (outer != last) {
    std::swap(faces_[outer], faces_[last]);
    for (auto& f : dart_face_) {
      if (f == outer)
        f = last;
      else if (f == last)
        f = outer;
    }
    outer = last;
  }
  for (int d : faces_[outer]) {
    require(!edges_[d / 2].on_curve && d % 2 == 1, errc::internal,
            "outer face touches the interior");
    dart_face_[d] = -1;
  }
  faces_.pop_back();

  require(static_cast<long long>(nodes_.size()) - static_cast<long long>(edges_.size()) +
                  static_cast<long long>(faces_.size()) + 1 ==
              2,
          errc::internal, "disc Euler check failed");
}

void Arrangement::build_components() {
  UnionFind uf(faces_.size());
  struct Seg {
    int side;
    Rat lo, hi;  // side parameters
    int inner_face;
  };
  std::vector<Seg> segs;
  std::map<std::tuple<int, Rat, Rat>, int> seg_at;
  for (size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].on_curve) continue;
    const PolyNode& na = nodes_[edges_[e].a];
    const PolyNode& nb = nodes_[edges_[e].b];
    Rat lo = na.bc, hi = nb.bc;
    if (hi <= lo) hi = Rat(S_->num_sides());  // wrap-around segment ends at corner 0
    Int side_i = lo.numerator() / lo.denominator();
    int side = static_cast<int>(to_ll(side_i));
    Seg s{side, lo - Rat(side), hi - Rat(side), dart_face_[2 * e]};
    require(s.lo >= Rat(0) && s.hi <= Rat(1) && s.lo < s.hi, errc::internal, "bad segment");
    seg_at[{side, s.lo, s.hi}] = static_cast<int>(segs.size());
    segs.push_back(s);
  }
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < segs.size(); ++i) {
    int ps = S_->partner(segs[i].side);
    auto it = seg_at.find({ps, Rat(1) - segs[i].hi, Rat(1) - segs[i].lo});
    require(it != seg_at.end(), errc::internal, "unmatched boundary segment");
    if (static_cast<int>(i) < it->second) {
      pairs.push_back({static_cast<int>(i), it->second});
      uf.unite(segs[i].inner_face, segs[it->second].inner_face);
    }
  }

  face_comp_.assign(faces_.size(), -1);
  std::map<int, int> root_comp;
  for (size_t f = 0; f < faces_.size(); ++f) {
    int r = uf.find(static_cast<int>(f));
    auto it = root_comp.find(r);
    if (it == root_comp.end()) {
      it = root_comp.insert({r, static_cast<int>(comps_.size())}).first;
      comps_.emplace_back();
    }
    face_comp_[f] = it->second;
    comps_[it->second].polyfaces.push_back(static_cast<int>(f));
  }

  std::vector<int> pairs_in(comps_.size(), 0);
  for (auto& [i, j] : pairs) pairs_in[face_comp_[segs[i].inner_face]]++;
  // All corner sectors belong to one component: the single surface vertex.
  vertex_comp_ = -1;
  for (const Seg& s : segs) {
    if (s.lo == Rat(0) || s.hi == Rat(1)) {
      int c = face_comp_[s.inner_face];
      require(vertex_comp_ == -1 || vertex_comp_ == c, errc::internal,
              "vertex sectors span components");
      vertex_comp_ = c;
    }
  }
  require(vertex_comp_ >= 0, errc::internal, "no corner segment");
  comps_[vertex_comp_].contains_vertex = true;
  int total = 0;
  for (size_t c = 0; c < comps_.size(); ++c) {
    Component& comp = comps_[c];
    comp.chi = static_cast<int>(comp.polyfaces.size()) - pairs_in[c] +
               (comp.contains_vertex ? 1 : 0);
    comp.kind = comp.chi == 1 ? Component::kDisc
                              : (comp.chi == 0 ? Component::kAnnulus : Component::kOther);
    total += comp.chi;
  }
  // The open complement misses the 4-valent graph, whose compactly
  // supported Euler characteristic is minus the crossing count.
  require(total == S_->euler() + static_cast<int>(crossings_.size()), errc::internal,
          "component chi sum mismatch");
}

int Arrangement::left_component_of_edge(int edge) const {
  return face_comp_[dart_face_[2 * edge]];
}

int Arrangement::right_component_of_edge(int edge) const {
  return face_comp_[dart_face_[2 * edge + 1]];
}

void Arrangement::build_arcs() {
  std::map<std::pair<int, int>, std::vector<int>> comp_chords;
  for (size_t i = 0; i < chords_.size(); ++i)
    comp_chords[{chords_[i].owner, chords_[i].comp}].push_back(static_cast<int>(i));

  std::vector<std::vector<int>> chord_pieces(chords_.size());
  for (size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].on_curve) chord_pieces[edges_[e].chord].push_back(static_cast<int>(e));

  auto register_arc = [&](Arc arc, const std::vector<int>& pieces) {
    int id = static_cast<int>(arcs_.size());
    int lc = -1, rc = -1;
    for (int e : pieces) {
      int l = left_component_of_edge(e), r = right_component_of_edge(e);
      require((lc == -1 || lc == l) && (rc == -1 || rc == r), errc::internal,
              "arc side component changed mid-arc");
      lc = l;
      rc = r;
      edges_[e].arc = id;
    }
    arc.left_comp = lc;
    arc.right_comp = rc;
    if (!arc.circle) {
      Crossing& x1 = crossings_[arc.start_cross];
      Crossing& x2 = crossings_[arc.end_cross];
      (arc.owner == 0 ? x1.a_out : x1.b_out) = id;
      (arc.owner == 0 ? x2.a_in : x2.b_in) = id;
    }
    arcs_.push_back(arc);
    comps_[lc].boundary_arcs.push_back(id);
    if (rc != lc) comps_[rc].boundary_arcs.push_back(id);
    return id;
  };

  for (auto& [oc, chord_ids] : comp_chords) {
    auto [owner, comp] = oc;
    const Curve& curve = owners_[owner].components[comp];
    int n = static_cast<int>(chord_ids.size());
    bool any = false;
    for (int ci : chord_ids) any = any || !chords_[ci].crossings.empty();
    if (!any) {
      Arc arc;
      arc.owner = owner;
      arc.comp = comp;
      arc.circle = true;
      arc.interior = curve.points;
      std::vector<int> pieces;
      for (int ci : chord_ids) pieces.push_back(chord_pieces[ci][0]);
      int id = register_arc(arc, pieces);
      full_circles_.push_back(id);
      continue;
    }
    // Cyclic list of crossings in travel order: (chord position, crossing).
    std::vector<std::pair<int, int>> stops;
    for (int k = 0; k < n; ++k)
      for (int x : chords_[chord_ids[k]].crossings) stops.push_back({k, x});
    for (size_t s = 0; s < stops.size(); ++s) {
      auto [k1, x1] = stops[s];
      auto [k2, x2] = stops[(s + 1) % stops.size()];
      Arc arc;
      arc.owner = owner;
      arc.comp = comp;
      arc.start_cross = x1;
      arc.end_cross = x2;
      arc.start_chord = chord_ids[k1];
      arc.end_chord = chord_ids[k2];
      std::vector<int> pieces;
      const auto& xs1 = chords_[chord_ids[k1]].crossings;
      int pos1 = static_cast<int>(std::find(xs1.begin(), xs1.end(), x1) - xs1.begin());
      bool same_chord = (k1 == k2) && (pos1 + 1 < static_cast<int>(xs1.size())) &&
                        xs1[pos1 + 1] == x2;
      if (same_chord) {
        pieces.push_back(chord_pieces[chord_ids[k1]][pos1 + 1]);
      } else {
        for (size_t p = pos1 + 1; p < chord_pieces[chord_ids[k1]].size(); ++p)
          pieces.push_back(chord_pieces[chord_ids[k1]][p]);
        arc.interior.push_back(curve.points[chords_[chord_ids[k1]].idx]);
        int kk = (k1 + 1) % n;
        while (kk != k2) {
          require(chords_[chord_ids[kk]].crossings.empty(), errc::internal,
                  "skipped a crossing while walking an arc");
          for (int e : chord_pieces[chord_ids[kk]]) pieces.push_back(e);
          arc.interior.push_back(curve.points[chords_[chord_ids[kk]].idx]);
          kk = (kk + 1) % n;
        }
        const auto& xs2 = chords_[chord_ids[k2]].crossings;
        int pos2 = static_cast<int>(std::find(xs2.begin(), xs2.end(), x2) - xs2.begin());
        for (int p = 0; p <= pos2; ++p) pieces.push_back(chord_pieces[chord_ids[k2]][p]);
      }
      int s1 = crossings_[x1].sign, s2 = crossings_[x2].sign;
      if (owner == 0) {
        arc.leaves_left = (s1 == 1);
        arc.approaches_left = (s2 == -1);
      } else {
        arc.leaves_left = (s1 == -1);
        arc.approaches_left = (s2 == 1);
      }
      register_arc(arc, pieces);
    }
  }
}

void Arrangement::classify() {
  std::vector<std::pair<int, int>> rect_pairs[2];
  std::vector<int> rect_comp_of[2];
  for (size_t c = 0; c < comps_.size(); ++c) {
    const Component& comp = comps_[c];
    if (comp.kind != Component::kDisc) continue;
    std::vector<int> inc;
    for (int a : comp.boundary_arcs) {
      int times = (arcs_[a].left_comp == static_cast<int>(c)) +
                  (arcs_[a].right_comp == static_cast<int>(c));
      for (int t = 0; t < times; ++t) inc.push_back(a);
    }
    if (inc.size() != 4) continue;
    std::vector<int> byowner[2];
    for (int a : inc) byowner[arcs_[a].owner].push_back(a);
    if (byowner[0].size() != 2 || byowner[1].size() != 2) continue;
    for (int o = 0; o < 2; ++o) {
      if (byowner[o][0] == byowner[o][1]) continue;
      if (arcs_[byowner[o][0]].circle || arcs_[byowner[o][1]].circle) continue;
      rect_pairs[o].push_back({byowner[o][0], byowner[o][1]});
      rect_comp_of[o].push_back(static_cast<int>(c));
    }
  }

  for (int o = 0; o < 2; ++o) {
    std::map<int, std::vector<std::pair<int, int>>> adj;
    for (size_t k = 0; k < rect_pairs[o].size(); ++k) {
      auto [a, b] = rect_pairs[o][k];
      adj[a].push_back({b, rect_comp_of[o][k]});
      adj[b].push_back({a, rect_comp_of[o][k]});
    }
    std::set<int> done;
    for (size_t ai = 0; ai < arcs_.size(); ++ai) {
      if (arcs_[ai].owner != o || arcs_[ai].circle) continue;
      if (done.count(static_cast<int>(ai))) continue;
      ArcClass cls;
      cls.owner = o;
      int start = static_cast<int>(ai);
      std::set<int> seen{start};
      bool cyclic = false;
      int cur = start, prev = -1;
      while (true) {
        int nxt = -1;
        auto it = adj.find(cur);
        if (it != adj.end())
          for (auto& [nb, cp] : it->second)
            if (nb != prev) nxt = nb;
        if (nxt == -1) break;
        if (seen.count(nxt)) {
          cyclic = true;
          break;
        }
        seen.insert(nxt);
        prev = cur;
        cur = nxt;
      }
      cls.cyclic = cyclic;
      std::vector<int> members;
      std::vector<int> rects;
      prev = -1;
      int walk = cur;
      while (true) {
        members.push_back(walk);
        int nxt = -1, rcomp = -1;
        auto it = adj.find(walk);
        if (it != adj.end())
          for (auto& [nb, cp] : it->second)
            if (nb != prev) {
              nxt = nb;
              rcomp = cp;
            }
        if (nxt == -1) break;
        if (std::find(members.begin(), members.end(), nxt) != members.end()) break;
        rects.push_back(rcomp);
        prev = walk;
        walk = nxt;
      }
      cls.members = members;
      cls.rect_comps = rects;
      for (int m : members) done.insert(m);
      cls.horizontal = arcs_[members[0]].horizontal();
      for (int m : members)
        require(arcs_[m].horizontal() == cls.horizontal, errc::internal,
                "mixed kinds in one arc class");
      if (cls.horizontal) {
        cls.left_side = arcs_[members[0]].leaves_left;
        for (int m : members)
          require(arcs_[m].leaves_left == cls.left_side, errc::internal,
                  "mixed sides in one horizontal class");
      }
      if (!cyclic) {
        auto far_side = [&](int member, int towards_comp) {
          const Arc& a = arcs_[member];
          return a.left_comp == towards_comp ? a.right_comp : a.left_comp;
        };
        if (members.size() == 1) {
          cls.end_before = arcs_[members[0]].left_comp;
          cls.end_after = arcs_[members[0]].right_comp;
        } else {
          cls.end_before = far_side(members.front(), rects.front());
          cls.end_after = far_side(members.back(), rects.back());
        }
      }
      classes_[o].push_back(cls);
    }
  }
}

void Arrangement::euler_check() const {
  size_t marked = 0, segments = 0, pieces = 0;
  for (const auto& n : nodes_)
    if (n.kind == PolyNode::kMarked) ++marked;
  for (const auto& e : edges_)
    (e.on_curve ? pieces : segments)++;
  require(marked % 2 == 0 && segments % 2 == 0, errc::internal, "parity");
  long long V =
      1 + static_cast<long long>(marked / 2) + static_cast<long long>(crossings_.size());
  long long E = static_cast<long long>(segments / 2) + static_cast<long long>(pieces);
  long long F = static_cast<long long>(faces_.size());
  require(V - E + F == S_->euler(), errc::internal, "glued Euler check failed");
}

std::optional<int> Arrangement::find_bigon() const {
  for (size_t c = 0; c < comps_.size(); ++c) {
    const Component& comp = comps_[c];
    if (comp.kind != Component::kDisc) continue;
    std::vector<int> inc;
    for (int a : comp.boundary_arcs) {
      int times = (arcs_[a].left_comp == static_cast<int>(c)) +
                  (arcs_[a].right_comp == static_cast<int>(c));
      for (int t = 0; t < times; ++t) inc.push_back(a);
    }
    if (inc.size() != 2) continue;
    const Arc& a0 = arcs_[inc[0]];
    const Arc& a1 = arcs_[inc[1]];
    if (a0.circle || a1.circle) continue;
    if (a0.owner == a1.owner) continue;
    std::set<int> xs{a0.start_cross, a0.end_cross, a1.start_cross, a1.end_cross};
    if (xs.size() != 2) continue;
    return static_cast<int>(c);
  }
  return std::nullopt;
}

namespace {

std::map<int, std::vector<Rat>> all_params(const PolygonSurface& S,
                                           std::initializer_list<const Multicurve*> ms) {
  std::map<int, std::vector<Rat>> out;
  for (const Multicurve* m : ms)
    for (const Curve& c : m->components)
      for (const SidePoint& p : c.points) {
        auto [low, u] = surface_key(S, p);
        out[low].push_back(u);
      }
  return out;
}

// Side crossings of a strand running parallel to the guide points on the
// given side, optionally against the guide's direction.
std::vector<SidePoint> lane_points(const PolygonSurface& S, const std::vector<SidePoint>& guide,
                                   bool left_of_guide, bool backward,
                                   const std::map<int, std::vector<Rat>>& params) {
  auto gap = [&](int low, const Rat& u) {
    Rat lo(0), hi(1);
    auto it = params.find(low);
    if (it != params.end())
      for (const Rat& v : it->second) {
        if (v < u && v > lo) lo = v;
        if (v > u && v < hi) hi = v;
      }
    // A third of the free space: two lanes in one gap moving toward each
    // other stay apart.
    return std::min(u - lo, hi - u) / 3;
  };
  std::vector<SidePoint> out;
  for (const SidePoint& tp : guide) {
    auto [low, u] = surface_key(S, tp);
    Rat d = gap(low, u);
    SidePoint np{tp.side, tp.pos + (left_of_guide ? d : -d)};
    if (backward) np = entry_point(S, np);
    out.push_back(np);
  }
  if (backward) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

MinimalPair minimal_position(const PolygonSurface& S, const Multicurve& ma,
                             const Multicurve& mb) {
  Multicurve a = ma, b = mb;
  normalize_joint(S, {&a, &b});
  int guard = 0;
  while (true) {
    require(++guard < 10000, errc::internal, "bigon removal did not terminate");
    Arrangement arr = Arrangement::build(S, a, b);
    auto big = arr.find_bigon();
    if (!big) return MinimalPair{std::move(a), std::move(b), std::move(arr)};
    const auto& comp = arr.components()[*big];
    int arc_move = -1, arc_guide = -1;
    for (int ai : comp.boundary_arcs) {
      if (arr.arcs()[ai].owner == 0) arc_move = ai;
      if (arr.arcs()[ai].owner == 1) arc_guide = ai;
    }
    const Arrangement::Arc& mv = arr.arcs()[arc_move];
    const Arrangement::Arc& gd = arr.arcs()[arc_guide];
    bool bigon_left_of_guide = (gd.left_comp == *big);
    bool far_left = !bigon_left_of_guide;
    bool aligned = (gd.start_cross == mv.start_cross);
    require(aligned || gd.start_cross == mv.end_cross, errc::internal, "bigon corners mismatch");
    auto params = all_params(S, {&a, &b});
    std::vector<SidePoint> lane = lane_points(S, gd.interior, far_left, !aligned, params);
    Curve& curve = a.components[mv.comp];
    std::vector<SidePoint> pts = curve.points;
    size_t n = pts.size();
    size_t cnt = mv.interior.size();
    int end_k = arr.chords()[mv.end_chord].idx;
    // Keep everything outside the moving arc, starting at the exit point of
    // the chord carrying the end crossing; prepend the rerouted lane.
    std::vector<SidePoint> result = lane;
    for (size_t i = 0; i < n - cnt; ++i)
      result.push_back(pts[(static_cast<size_t>(end_k) + i) % n]);
    curve.points = result;
    normalize_joint(S, {&a, &b});
  }
}

std::vector<Arrangement::Component> complement_components(const PolygonSurface& S,
                                                          const Multicurve& m) {
  Multicurve copy = m;
  normalize_joint(S, {&copy});
  Arrangement arr = Arrangement::build(S, copy, Multicurve{});
  return arr.components();
}

bool is_filling(const PolygonSurface& S, const Multicurve& ma, const Multicurve& mb) {
  MinimalPair mp = minimal_position(S, ma, mb);
  for (const auto& c : mp.arr.components())
    if (c.kind != Arrangement::Component::kDisc) return false;
  return true;
}

}  // namespace cycles
