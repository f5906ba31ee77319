#include "cycles/geodesics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cycles {

namespace {

Multicurve chain_coords(const PolygonSurface& S, const Arrangement& arr, const ArcChain& chain) {
  auto cycles = resolve_cycles(arr, chain);
  Multicurve m;
  for (const Cycle& c : cycles) m.components.push_back(cycle_coords(arr, c));
  normalize_joint(S, {&m});
  return m;
}

// Components of the host multicurve removed by homotopic cancellation, to be
// reattached to every path vertex.
std::vector<Curve> cancelled_components(const PolygonSurface& S, const Multicurve& original,
                                        const Multicurve& reduced) {
  std::vector<Word> left = multicurve_key(S, reduced);
  std::vector<Curve> out;
  for (const Curve& c : original.components) {
    Word k = curve_key(S, c);
    auto it = std::find(left.begin(), left.end(), k);
    if (it != left.end())
      left.erase(it);
    else
      out.push_back(c);
  }
  return out;
}

Multicurve merge_disjointly(const PolygonSurface& S, Multicurve base,
                            const std::vector<Curve>& extras) {
  for (const Curve& c : extras) {
    MinimalPair mp = minimal_position(S, Multicurve{{c}, ""}, base);
    require(mp.arr.crossings().empty(), errc::internal,
            "cancelled component cannot be reattached disjointly");
    base = mp.b;
    base.components.push_back(mp.a.components[0]);
    normalize_joint(S, {&base});
  }
  check_embedded(S, base);
  return base;
}

}  // namespace

GeodesicPath middle_path(const PolygonSurface& S, const Multicurve& g1, const Multicurve& gn) {
  GeodesicPath path;
  path.S = &S;
  path.is_middle = true;
  ReducedPair rp = reduce_pair(S, g1, gn);
  path.base = rp.arr;
  path.f = overlap_on(rp.arr);
  std::vector<Curve> extra1 = cancelled_components(S, g1, rp.m1);

  int M = path.f.max;
  const Arrangement& A = *rp.arr;
  ArcChain target = owner_chain(A, 1);
  ArcChain chain = owner_chain(A, 0);
  path.chains.push_back(chain);
  path.vertices.push_back(rp.m1);
  for (int i = 1; i <= M; ++i) {
    ChainStep cs = extremal_chain_step(S, A, chain, target, 1);
    PathStep step;
    step.region = cs.region;
    step.disc_ints = cs.disc_ints;
    step.null_ints = cs.null_ints;
    std::set<int> in(cs.region.begin(), cs.region.end());
    for (size_t a = 0; a < A.arcs().size(); ++a) {
      const auto& arc = A.arcs()[a];
      if (arc.owner != 1) continue;
      bool lin = in.count(arc.left_comp) > 0, rin = in.count(arc.right_comp) > 0;
      if (lin != rin) step.surgered_arcs.push_back(static_cast<int>(a));
    }
    path.steps.push_back(step);
    chain = cs.chain;
    path.chains.push_back(chain);
    path.vertices.push_back(chain_coords(S, A, chain));
  }
  if (M > 0)
    require(multicurve_key(S, path.vertices.back()) == multicurve_key(S, rp.m2),
            errc::internal, "middle path did not reach the target");
  // Reattach components cancelled up front; they are untouched by the path.
  if (!extra1.empty())
    for (auto& v : path.vertices) v = merge_disjointly(S, v, extra1);
  return path;
}

bool reverse_middle_path_check(const PolygonSurface& S, const GeodesicPath& path) {
  GeodesicPath rev = middle_path(S, path.vertices.back(), path.vertices.front());
  if (rev.vertices.size() != path.vertices.size()) return false;
  size_t n = path.vertices.size();
  for (size_t i = 0; i < n; ++i)
    if (multicurve_key(S, rev.vertices[i]) != multicurve_key(S, path.vertices[n - 1 - i]))
      return false;
  return true;
}

// --- Tightness ---------------------------------------------------------------

namespace {

struct PairData {
  std::shared_ptr<Arrangement> arr;
  Multicurve a, b;
  std::vector<Curve> betas;  // boundary circles of non-disc components
};

PairData pair_data(const PolygonSurface& S, const Multicurve& vj, const Multicurve& vk) {
  PairData pd;
  MinimalPair mp = minimal_position(S, vj, vk);
  pd.a = mp.a;
  pd.b = mp.b;
  pd.arr = std::make_shared<Arrangement>(std::move(mp.arr));
  const Arrangement& A = *pd.arr;
  for (size_t c = 0; c < A.components().size(); ++c) {
    if (A.components()[c].kind == Arrangement::Component::kDisc) continue;
    ArcChain mult(A.arcs().size(), 0);
    for (int ai : A.components()[c].boundary_arcs) {
      const auto& arc = A.arcs()[ai];
      int m = 0;
      if (arc.left_comp == static_cast<int>(c)) m += 1;
      if (arc.right_comp == static_cast<int>(c)) m -= 1;
      mult[ai] = m;
    }
    for (const Cycle& cyc : resolve_cycles(A, mult)) {
      Curve beta = cycle_coords(A, cyc);
      if (!beta.points.empty()) pd.betas.push_back(beta);
    }
  }
  return pd;
}

int min_crossings(const PolygonSurface& S, const Curve& c, const Multicurve& m) {
  if (m.empty()) return 0;
  MinimalPair mp = minimal_position(S, Multicurve{{c}, ""}, m);
  return static_cast<int>(mp.arr.crossings().size());
}

}  // namespace

bool is_tight(const PolygonSurface& S, const std::vector<Multicurve>& vertices) {
  int n = static_cast<int>(vertices.size());
  for (int i = 1; i + 1 < n; ++i) {
    for (int j = 0; j < i; ++j) {
      for (int k = i + 1; k < n; ++k) {
        PairData pd = pair_data(S, vertices[j], vertices[k]);
        for (const Curve& c : vertices[i].components) {
          bool off_j = min_crossings(S, c, pd.a) == 0;
          bool off_k = min_crossings(S, c, pd.b) == 0;
          if (off_j && off_k) {
            // c lives inside one complement component; it must be parallel
            // to a boundary circle of a non-disc piece.
            bool parallel = false;
            for (const Curve& beta : pd.betas) {
              if (freely_homotopic(S, c, beta) ||
                  freely_homotopic(S, c, reverse_curve(S, beta))) {
                parallel = true;
                break;
              }
            }
            if (!parallel) return false;
          } else {
            // Essential arcs inside a non-disc component show up as
            // unremovable crossings with its boundary circles.
            for (const Curve& beta : pd.betas) {
              if (min_crossings(S, c, Multicurve{{beta}, ""}) > 0) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

bool is_tight(const PolygonSurface& S, const GeodesicPath& path) {
  return is_tight(S, path.vertices);
}

// --- Patches and critical levels --------------------------------------------

std::vector<std::vector<int>> compute_patches(const GeodesicPath& path) {
  std::vector<std::vector<int>> out;
  std::set<int> acc;
  for (const PathStep& st : path.steps) {
    for (int c : st.region) acc.insert(c);
    for (const auto& v : st.disc_ints)
      for (int c : v) acc.insert(c);
    for (const auto& v : st.null_ints)
      for (int c : v) acc.insert(c);
    out.emplace_back(acc.begin(), acc.end());
  }
  return out;
}

namespace {

// Connected components of a face set, via arcs interior to the set.
std::vector<std::vector<int>> face_set_components(const Arrangement& A,
                                                  const std::vector<int>& faces) {
  std::set<int> in(faces.begin(), faces.end());
  std::map<int, int> root;
  for (int f : faces) root[f] = f;
  std::function<int(int)> find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (size_t a = 0; a < A.arcs().size(); ++a) {
    const auto& arc = A.arcs()[a];
    if (in.count(arc.left_comp) && in.count(arc.right_comp) && arc.left_comp != arc.right_comp)
      root[find(arc.left_comp)] = find(arc.right_comp);
  }
  std::map<int, std::vector<int>> groups;
  for (int f : faces) groups[find(f)].push_back(f);
  std::vector<std::vector<int>> out;
  for (auto& [r, v] : groups) out.push_back(v);
  return out;
}

bool is_rectangle(const Arrangement& A, int comp) {
  const auto& c = A.components()[comp];
  if (c.kind != Arrangement::Component::kDisc) return false;
  int inc = 0, own0 = 0, own1 = 0;
  for (int a : c.boundary_arcs) {
    int times = (A.arcs()[a].left_comp == comp) + (A.arcs()[a].right_comp == comp);
    inc += times;
    (A.arcs()[a].owner == 0 ? own0 : own1) += times;
  }
  return inc == 4 && own0 == 2 && own1 == 2;
}

CriticalCase check_gluing(const GeodesicPath& path, const std::vector<int>& prev,
                          const std::vector<int>& next, const ArcChain& vertex_chain) {
  const Arrangement& A = *path.base;
  std::set<int> pin(prev.begin(), prev.end());
  std::set<int> nin(next.begin(), next.end());
  std::vector<int> fresh;
  for (int c : next)
    if (!pin.count(c)) fresh.push_back(c);

  // Every component of `next` must contain exactly one component of `prev`.
  auto prev_comps = face_set_components(A, prev);
  auto next_comps = face_set_components(A, next);
  for (const auto& K : next_comps) {
    std::set<int> kset(K.begin(), K.end());
    int contained = 0;
    for (const auto& P : prev_comps)
      if (kset.count(P[0])) ++contained;
    if (contained == 0) return CriticalCase::kNewComponent;
    if (contained > 1) return CriticalCase::kHandle;
  }

  // A vertex arc of the old frontier whose growth stalled.
  for (size_t a = 0; a < A.arcs().size(); ++a) {
    if (vertex_chain[a] == 0) continue;
    const auto& arc = A.arcs()[a];
    bool lin = pin.count(arc.left_comp) > 0, rin = pin.count(arc.right_comp) > 0;
    if (lin == rin) continue;  // not on the frontier
    int across = lin ? arc.right_comp : arc.left_comp;
    if (!nin.count(across)) return CriticalCase::kBlockedArc;
  }
  (void)fresh;
  return CriticalCase::kOther;
}

}  // namespace

bool boundary_gluing(const GeodesicPath& path, const std::vector<int>& prev,
                     const std::vector<int>& next, const ArcChain& vertex_chain) {
  // Operational form of the gluing condition: the growth must neither
  // create nor merge patch components, and it must extend across every
  // vertex arc of the old frontier.
  const Arrangement& A = *path.base;
  std::set<int> pin(prev.begin(), prev.end());
  std::set<int> nin(next.begin(), next.end());

  auto prev_comps = face_set_components(A, prev);
  auto next_comps = face_set_components(A, next);
  if (prev_comps.size() != next_comps.size()) return false;
  for (const auto& K : next_comps) {
    std::set<int> kset(K.begin(), K.end());
    int contained = 0;
    for (const auto& P : prev_comps)
      if (kset.count(P[0])) ++contained;
    if (contained != 1) return false;
  }

  for (size_t a = 0; a < A.arcs().size(); ++a) {
    if (vertex_chain[a] == 0) continue;
    const auto& arc = A.arcs()[a];
    bool lin = pin.count(arc.left_comp) > 0, rin = pin.count(arc.right_comp) > 0;
    if (lin == rin) continue;
    int across = lin ? arc.right_comp : arc.left_comp;
    if (!nin.count(across) || pin.count(across)) return false;
  }
  return true;
}

CriticalReport critical_levels(const GeodesicPath& path) {
  CriticalReport report;
  auto patches = compute_patches(path);
  int n = static_cast<int>(path.vertices.size());
  // Level i compares P_i with P_{i+1}, growing along the arcs of gamma_i;
  // both patches must exist, which bounds the levels by 1 < i < n-1.
  for (int i = 2; i <= n - 2; ++i) {
    const auto& prev = patches[i - 1];
    const auto& next = patches[i];
    const ArcChain& chain = path.chains[i - 1];
    if (!boundary_gluing(path, prev, next, chain)) {
      report.levels.push_back(i);
      report.cases.push_back(check_gluing(path, prev, next, chain));
    }
  }
  return report;
}

// --- Sublevel projections ----------------------------------------------------

std::pair<Multicurve, Multicurve> sublevel_projection(const PolygonSurface& S,
                                                      const Multicurve& g1, const Multicurve& gn,
                                                      int l1, int l2) {
  GeodesicPath path = middle_path(S, g1, gn);
  int M = path.f.max;
  require(0 <= l1 && l1 < l2 && l2 <= M, errc::out_of_range,
          "levels must satisfy 0 <= l1 < l2 <= M");
  return {path.vertices[l1], path.vertices[l2 - 1]};
}

// --- Step options and enumeration --------------------------------------------

StepOptions enumerate_step_options(const PolygonSurface& S, const Multicurve& gi,
                                   const Multicurve& gn) {
  ReducedPair rp = reduce_pair(S, gi, gn);
  OverlapFunction f = overlap_on(rp.arr);
  require(f.max >= 1, errc::nothing_to_do, "the vertices are already equal");
  const Arrangement& A = *rp.arr;

  StepOptions opts;
  opts.arr = rp.arr;
  ChainStep mx = extremal_chain_step(S, A, owner_chain(A, 0), owner_chain(A, 1), 1);
  ChainStep mn = extremal_chain_step(S, A, owner_chain(A, 0), owner_chain(A, 1), -1);
  opts.smax_result = chain_coords(S, A, mx.chain);
  opts.smin_result = chain_coords(S, A, mn.chain);
  opts.plans_differ =
      multicurve_key(S, opts.smax_result) != multicurve_key(S, opts.smin_result);

  // Arcs on the boundary of either extremal subsurface are necessary.
  std::set<int> extremal_arcs;
  for (int level : {0, f.max}) {
    std::set<int> in;
    for (size_t c = 0; c < f.value.size(); ++c)
      if (f.value[c] == level) in.insert(static_cast<int>(c));
    for (size_t a = 0; a < A.arcs().size(); ++a) {
      const auto& arc = A.arcs()[a];
      bool lin = in.count(arc.left_comp) > 0, rin = in.count(arc.right_comp) > 0;
      if (lin != rin) extremal_arcs.insert(static_cast<int>(a));
    }
  }

  HomologyClass alpha = homology_class(S, rp.m1);
  Word gi_key_hash;  // via multicurve_key below
  auto gi_key = multicurve_key(S, rp.m1);
  for (size_t ci = 0; ci < A.classes(1).size(); ++ci) {
    const auto& cls = A.classes(1)[ci];
    if (!cls.horizontal || cls.cyclic) continue;
    bool touches = false;
    for (int m : cls.members)
      if (extremal_arcs.count(m)) touches = true;
    if (touches) continue;
    // The band surgery must produce a genuinely different valid vertex at
    // the same distance; arcs homotopic to a subarc of their own target
    // curve only reroute it.
    try {
      Multicurve banded = multi_band_surgery(A, {cls.members.front()});
      if (multicurve_key(S, banded) == gi_key) continue;
      if (!validate_vertex(S, banded, alpha)) continue;
      if (homological_distance(S, banded, rp.m2) != f.max) continue;
      opts.optional_classes.push_back(static_cast<int>(ci));
    } catch (const error&) {
      continue;
    }
  }
  (void)gi_key_hash;
  return opts;
}

Enumeration enumerate_tight_geodesics(const PolygonSurface& S, const Multicurve& g1,
                                      const Multicurve& gn, int cap) {
  Enumeration result;
  ReducedPair rp = reduce_pair(S, g1, gn);
  auto base = rp.arr;
  const Arrangement& A = *base;
  OverlapFunction f = overlap_on(base);
  std::vector<Curve> extra1 = cancelled_components(S, g1, rp.m1);
  int M = f.max;

  if (M == 0) {
    GeodesicPath p;
    p.S = &S;
    p.base = base;
    p.f = f;
    p.vertices.push_back(g1);
    result.paths.push_back(p);
    return result;
  }

  ArcChain target = owner_chain(A, 1);
  struct Node {
    std::vector<ArcChain> chains;
    std::vector<PathStep> steps;
  };
  std::vector<Node> stack{Node{{owner_chain(A, 0)}, {}}};
  std::vector<Node> complete;
  long long explored = 0;

  while (!stack.empty()) {
    if (++explored > cap || static_cast<int>(complete.size()) > cap) {
      result.complete = false;
      break;
    }
    Node node = std::move(stack.back());
    stack.pop_back();
    int depth = static_cast<int>(node.chains.size()) - 1;
    if (depth == M) {
      complete.push_back(std::move(node));
      continue;
    }
    const ArcChain& cur = node.chains.back();
    std::vector<ArcChain> nexts;
    std::vector<PathStep> nsteps;
    std::vector<std::vector<Word>> keys;
    for (int sign : {1, -1}) {
      ChainStep cs;
      try {
        cs = extremal_chain_step(S, A, cur, target, sign);
      } catch (const error&) {
        continue;
      }
      Multicurve v = chain_coords(S, A, cs.chain);
      auto key = multicurve_key(S, v);
      bool dup = false;
      for (const auto& k : keys) dup = dup || k == key;
      if (dup) continue;
      keys.push_back(key);
      PathStep step;
      step.region = cs.region;
      step.disc_ints = cs.disc_ints;
      step.null_ints = cs.null_ints;
      step.sign = sign;
      nexts.push_back(cs.chain);
      nsteps.push_back(step);
    }
    for (size_t i = 0; i < nexts.size(); ++i) {
      Node child = node;
      child.chains.push_back(nexts[i]);
      child.steps.push_back(nsteps[i]);
      stack.push_back(std::move(child));
    }
  }

  // Materialize, filter by tightness, and deduplicate.
  std::set<std::vector<std::vector<Word>>> seen;
  for (const Node& node : complete) {
    GeodesicPath p;
    p.S = &S;
    p.base = base;
    p.f = f;
    p.chains = node.chains;
    p.steps = node.steps;
    for (const ArcChain& c : node.chains) p.vertices.push_back(chain_coords(S, A, c));
    if (!extra1.empty())
      for (auto& v : p.vertices) v = merge_disjointly(S, v, extra1);
    std::vector<std::vector<Word>> pathkey;
    for (const auto& v : p.vertices) pathkey.push_back(multicurve_key(S, v));
    if (seen.count(pathkey)) continue;
    if (!is_tight(S, p.vertices)) continue;
    seen.insert(pathkey);
    result.paths.push_back(std::move(p));
  }

  // Optional band surgeries can leave the subcomplex universe; flag the
  // enumeration as partial whenever a vertex offers them.
  if (result.complete) {
    for (const auto& p : result.paths) {
      for (size_t i = 0; i + 1 < p.vertices.size() && result.complete; ++i) {
        try {
          StepOptions so = enumerate_step_options(S, p.vertices[i], gn);
          if (!so.optional_classes.empty()) result.complete = false;
        } catch (const error&) {
        }
      }
    }
  }
  return result;
}

// --- Jacobi fields -----------------------------------------------------------

namespace {

// Band deformation of a vertex along one optional class of its step options;
// nullopt when no class yields a valid same-level deformation matching the
// wanted key (or any, when wanted is empty).
std::optional<Multicurve> deform_vertex(const PolygonSurface& S, const Multicurve& v,
                                        const Multicurve& gn, int optional_class) {
  StepOptions so = enumerate_step_options(S, v, gn);
  if (optional_class < 0 || optional_class >= static_cast<int>(so.optional_classes.size()))
    return std::nullopt;
  const auto& cls = so.arr->classes(1)[so.optional_classes[optional_class]];
  try {
    return multi_band_surgery(*so.arr, {cls.members.front()});
  } catch (const error&) {
    return std::nullopt;
  }
}

}  // namespace

JacobiField zero_jacobi(const GeodesicPath& path) {
  JacobiField j;
  j.path = &path;
  j.support_begin = 0;
  j.support_end = -1;
  return j;
}

JacobiField make_jacobi(const PolygonSurface& S, const GeodesicPath& path, int optional_class,
                        int g) {
  int n = static_cast<int>(path.vertices.size());
  require(g >= 0 && g < n - 1, errc::out_of_range, "support start out of range");
  const Multicurve& gn = path.vertices.back();

  JacobiField j;
  j.path = &path;
  j.support_begin = g;

  // Deform at g, then continue as long as an optional surgery keeps the
  // deformed path connected and the final vertex rejoins the original path.
  StepOptions so = enumerate_step_options(S, path.vertices[g], gn);
  require(optional_class >= 0 &&
              optional_class < static_cast<int>(so.optional_classes.size()),
          errc::illegal_surgery, "not an optional class at the support start");
  const auto& cls = so.arr->classes(1)[so.optional_classes[optional_class]];
  Multicurve cur = multi_band_surgery(*so.arr, {cls.members.front()});
  j.deformed.push_back(cur);

  int e = g;
  while (e + 1 < n - 1) {
    // Try to continue the deformation at the next vertex.
    std::optional<Multicurve> next;
    try {
      StepOptions nso = enumerate_step_options(S, path.vertices[e + 1], gn);
      for (int oc = 0; oc < static_cast<int>(nso.optional_classes.size()); ++oc) {
        const auto& ncls = nso.arr->classes(1)[nso.optional_classes[oc]];
        Multicurve cand = multi_band_surgery(*nso.arr, {ncls.members.front()});
        if (homological_distance(S, cand, j.deformed.back()) == 1) {
          next = cand;
          break;
        }
      }
    } catch (const error&) {
    }
    if (!next) break;
    j.deformed.push_back(*next);
    ++e;
  }
  j.support_end = e;
  // The deformed path must rejoin the original after the support.
  require(homological_distance(S, j.deformed.back(), path.vertices[e + 1]) == 1,
          errc::illegal_surgery, "deformed path does not rejoin; support is empty");
  if (g > 0)
    require(homological_distance(S, j.deformed.front(), path.vertices[g - 1]) == 1,
            errc::illegal_surgery, "deformed path does not connect to the predecessor");
  return j;
}

std::vector<Multicurve> deform_path(const GeodesicPath& path, const JacobiField& j) {
  std::vector<Multicurve> out = path.vertices;
  for (int i = j.support_begin; i <= j.support_end; ++i)
    out[i] = j.deformed[i - j.support_begin];
  return out;
}

std::optional<JacobiField> add_jacobi(const PolygonSurface& S, const JacobiField& j1,
                                      const JacobiField& j2) {
  require(j1.path == j2.path, errc::illegal_surgery, "fields live on different paths");
  if (j1.zero()) return j2;
  if (j2.zero()) return j1;
  const GeodesicPath& path = *j1.path;
  const Multicurve& gn = path.vertices.back();

  JacobiField sum;
  sum.path = j1.path;
  sum.support_begin = std::min(j1.support_begin, j2.support_begin);
  sum.support_end = std::max(j1.support_end, j2.support_end);
  sum.num_arcs = j1.num_arcs + j2.num_arcs;
  for (int i = sum.support_begin; i <= sum.support_end; ++i) {
    bool in1 = i >= j1.support_begin && i <= j1.support_end;
    bool in2 = i >= j2.support_begin && i <= j2.support_end;
    if (in1 && in2) {
      // Both fields deform here: the arcs must sit on the same side of each
      // host curve, equivalently the double band must stay embeddable and
      // keep the level.
      StepOptions so = enumerate_step_options(S, path.vertices[i], gn);
      // Locate, among the optional classes, ones reproducing each field's
      // single deformation.
      std::vector<int> match(2, -1);
      const JacobiField* fields[2] = {&j1, &j2};
      for (int w = 0; w < 2; ++w) {
        auto want = multicurve_key(S, fields[w]->deformed[i - fields[w]->support_begin]);
        for (int oc = 0; oc < static_cast<int>(so.optional_classes.size()); ++oc) {
          const auto& cls = so.arr->classes(1)[so.optional_classes[oc]];
          try {
            Multicurve cand = multi_band_surgery(*so.arr, {cls.members.front()});
            if (multicurve_key(S, cand) == want) {
              match[w] = so.optional_classes[oc];
              break;
            }
          } catch (const error&) {
          }
        }
      }
      if (match[0] < 0 || match[1] < 0 || match[0] == match[1]) return std::nullopt;
      // Same-side condition per host curve.
      const Arrangement& A = *so.arr;
      std::map<int, std::set<bool>> host_sides;
      for (int w = 0; w < 2; ++w) {
        const auto& cls = A.classes(1)[match[w]];
        for (int m : cls.members) {
          const auto& arc = A.arcs()[m];
          int host1 = A.arcs()[A.crossings()[arc.start_cross].a_in].comp;
          int host2 = A.arcs()[A.crossings()[arc.end_cross].a_in].comp;
          host_sides[host1].insert(cls.left_side);
          host_sides[host2].insert(cls.left_side);
        }
      }
      for (auto& [host, sides] : host_sides)
        if (sides.size() > 1) return std::nullopt;
      try {
        Multicurve both = multi_band_surgery(
            A, {A.classes(1)[match[0]].members.front(), A.classes(1)[match[1]].members.front()});
        if (homological_distance(S, both, gn) != homological_distance(S, path.vertices[i], gn))
          return std::nullopt;
        sum.deformed.push_back(both);
      } catch (const error&) {
        return std::nullopt;
      }
    } else if (in1) {
      sum.deformed.push_back(j1.deformed[i - j1.support_begin]);
    } else {
      sum.deformed.push_back(j2.deformed[i - j2.support_begin]);
    }
  }
  return sum;
}

int hausdorff_distance(const PolygonSurface& S, const GeodesicPath& p1, const GeodesicPath& p2) {
  auto one_sided = [&](const GeodesicPath& a, const GeodesicPath& b) {
    int worst = 0;
    for (const auto& va : a.vertices) {
      int best = -1;
      for (const auto& vb : b.vertices) {
        int d = homological_distance(S, va, vb);
        if (best < 0 || d < best) best = d;
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(p1, p2), one_sided(p2, p1));
}

std::string family_dot(const PolygonSurface& S, const Enumeration& e) {
  std::ostringstream os;
  os << "digraph tight_geodesics {\n  rankdir=LR;\n";
  std::map<std::vector<Word>, std::string> names;
  auto node = [&](const Multicurve& v, int layer) {
    auto key = multicurve_key(S, v);
    auto it = names.find(key);
    if (it != names.end()) return it->second;
    std::string name = "v" + std::to_string(names.size());
    names[key] = name;
    os << "  " << name << " [label=\"" << layer << ":" << v.components.size()
       << "c\"];\n";
    return name;
  };
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& p : e.paths) {
    for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      std::string a = node(p.vertices[i], static_cast<int>(i));
      std::string b = node(p.vertices[i + 1], static_cast<int>(i + 1));
      std::string label =
          i < p.steps.size() ? (p.steps[i].sign > 0 ? "smax" : "smin") : "";
      if (edges.insert({a, b}).second)
        os << "  " << a << " -> " << b << " [label=\"" << label << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cycles
