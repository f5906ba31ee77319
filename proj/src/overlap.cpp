#include "cycles/overlap.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cycles {

bool Subsurface::contains(int comp) const {
  return std::find(comps.begin(), comps.end(), comp) != comps.end();
}

Subsurface make_subsurface(std::shared_ptr<const Arrangement> arr, std::vector<int> comps) {
  Subsurface s;
  s.arr = arr;
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  s.comps = comps;
  std::set<int> in(comps.begin(), comps.end());
  // chi by compactly-supported additivity: open components, then interior
  // arcs (intervals count -1, circles 0), then interior crossings (+1).
  s.chi = 0;
  for (int c : comps) s.chi += arr->components()[c].chi;
  std::set<int> seen;
  std::set<int> interior_arcs;
  for (int c : comps)
    for (int a : arr->components()[c].boundary_arcs) {
      if (seen.count(a)) continue;
      seen.insert(a);
      const auto& arc = arr->arcs()[a];
      bool lin = in.count(arc.left_comp) > 0;
      bool rin = in.count(arc.right_comp) > 0;
      if (lin != rin) {
        s.boundary.push_back(Subsurface::BoundaryArc{a, lin});
      } else if (lin && rin) {
        interior_arcs.insert(a);
        if (!arc.circle) s.chi -= 1;
      }
    }
  // A crossing is interior when all four incident arc ends are interior.
  std::map<int, int> cross_deg;
  for (int a : interior_arcs) {
    const auto& arc = arr->arcs()[a];
    if (arc.circle) continue;
    cross_deg[arc.start_cross]++;
    cross_deg[arc.end_cross]++;
  }
  for (auto [x, deg] : cross_deg)
    if (deg == 4) s.chi += 1;
  return s;
}

ReducedPair reduce_pair(const PolygonSurface& S, const Multicurve& m1, const Multicurve& m2) {
  Multicurve a = m1, b = m2;
  // Greedy cancellation of freely homotopic, equally oriented components:
  // the overlap maximum is minimized over representatives, and parallel
  // shared components only inflate it.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < a.components.size() && !changed; ++i)
      for (size_t j = 0; j < b.components.size() && !changed; ++j)
        if (freely_homotopic(S, a.components[i], b.components[j])) {
          a.components.erase(a.components.begin() + i);
          b.components.erase(b.components.begin() + j);
          changed = true;
        }
  }
  MinimalPair mp = minimal_position(S, a, b);
  ReducedPair rp;
  rp.m1 = std::move(mp.a);
  rp.m2 = std::move(mp.b);
  rp.arr = std::make_shared<Arrangement>(std::move(mp.arr));
  return rp;
}

OverlapFunction overlap_on(std::shared_ptr<const Arrangement> arr) {
  const Arrangement& A = *arr;
  size_t n = A.components().size();
  std::vector<int> value(n, 0);
  std::vector<bool> visited(n, false);
  // BFS over components across arcs; crossing owner-1 right-to-left is +1,
  // owner-0 right-to-left is -1.
  std::deque<int> queue;
  visited[0] = true;
  queue.push_back(0);
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int ai : A.components()[c].boundary_arcs) {
      const auto& arc = A.arcs()[ai];
      int delta = arc.owner == 1 ? 1 : -1;
      // value(left) - value(right) = delta
      std::tuple<int, int, int> steps[2] = {{arc.right_comp, arc.left_comp, delta},
                                            {arc.left_comp, arc.right_comp, -delta}};
      for (auto [from, to, d] : steps) {
        if (from != c) continue;
        int want = value[c] + d;
        if (!visited[to]) {
          visited[to] = true;
          value[to] = want;
          queue.push_back(to);
        } else {
          require(value[to] == want, errc::not_homologous,
                  "overlap labeling inconsistent: cycle is not null homologous");
        }
      }
    }
  }
  for (size_t c = 0; c < n; ++c)
    require(visited[c], errc::internal, "arrangement complement is disconnected in BFS");
  int lo = *std::min_element(value.begin(), value.end());
  int hi = *std::max_element(value.begin(), value.end());
  OverlapFunction f;
  f.arr = std::move(arr);
  f.value.resize(n);
  for (size_t c = 0; c < n; ++c) f.value[c] = value[c] - lo;
  f.max = hi - lo;
  return f;
}

OverlapFunction overlap_function(const PolygonSurface& S, const Multicurve& m1,
                                 const Multicurve& m2) {
  ReducedPair rp = reduce_pair(S, m1, m2);
  return overlap_on(rp.arr);
}

int homological_distance(const PolygonSurface& S, const Multicurve& m1, const Multicurve& m2) {
  return overlap_function(S, m1, m2).max;
}

int distance(const PolygonSurface& S, const Multicurve& m1, const Multicurve& m2) {
  HomologyClass a1 = homology_class(S, m1);
  require(!a1.is_zero() && a1.is_primitive(), errc::invalid_vertex,
          "m1 does not represent a vertex");
  require(homology_class(S, m2) == a1, errc::not_homologous, "classes differ");
  require(validate_vertex(S, m1, a1), errc::invalid_vertex, "m1 is not a valid vertex");
  require(validate_vertex(S, m2, a1), errc::invalid_vertex, "m2 is not a valid vertex");
  return homological_distance(S, m1, m2);
}

Subsurface extremal_subsurface(const OverlapFunction& f, Extremal which) {
  int target = which == Extremal::kMax ? f.max : 0;
  std::vector<int> comps;
  for (size_t c = 0; c < f.value.size(); ++c)
    if (f.value[c] == target) comps.push_back(static_cast<int>(c));
  return make_subsurface(f.arr, comps);
}

Subsurface sublevel_subsurface(const OverlapFunction& f, int level) {
  require(level >= 0 && level <= f.max, errc::out_of_range, "sublevel out of range");
  std::vector<int> comps;
  for (size_t c = 0; c < f.value.size(); ++c)
    if (f.value[c] >= level) comps.push_back(static_cast<int>(c));
  return make_subsurface(f.arr, comps);
}

std::optional<Subsurface> bounds_embedded_subsurface(const PolygonSurface& S,
                                                     const Multicurve& plus,
                                                     const Multicurve& minus) {
  HomologyClass h = homology_class(S, plus) - homology_class(S, minus);
  require(h.is_zero(), errc::not_homologous, "cycle is not null homologous");
  if (plus.components.empty() && minus.components.empty()) {
    // Empty cycle bounds the empty subsurface.
    Multicurve e1, e2;
    normalize_joint(S, {&e1, &e2});
    auto arr = std::make_shared<Arrangement>(Arrangement::build(S, e1, e2));
    return make_subsurface(arr, {});
  }
  // The two halves may be given in crossing position; an embedded cycle
  // requires them disjoint, so minimize first and give up if crossings
  // survive.
  MinimalPair half = minimal_position(S, minus, plus);
  if (!half.arr.crossings().empty()) return std::nullopt;
  // Compute the overlap of the cycle: treat minus reversed as extra owner-1
  // components so that crossing any piece of the cycle right-to-left is +1.
  Multicurve cycle;
  for (const Curve& c : half.b.components) cycle.components.push_back(c);
  for (const Curve& c : half.a.components) cycle.components.push_back(reverse_curve(S, c));
  Multicurve empty;
  MinimalPair mp = minimal_position(S, empty, cycle);
  auto arr = std::make_shared<Arrangement>(std::move(mp.arr));
  OverlapFunction f = overlap_on(arr);
  if (f.max > 1) return std::nullopt;
  std::vector<int> comps;
  for (size_t c = 0; c < f.value.size(); ++c)
    if (f.value[c] == 1) comps.push_back(static_cast<int>(c));
  return make_subsurface(arr, comps);
}

bool is_edge(const PolygonSurface& S, const Multicurve& v1, const Multicurve& v2) {
  return distance(S, v1, v2) == 1;
}

}  // namespace cycles
