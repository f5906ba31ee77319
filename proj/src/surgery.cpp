#include "cycles/surgery.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

namespace cycles {

namespace {

// The four strand ends of a crossing as (arc, is_start_end), in the
// counterclockwise rotation order used by the face tracing.
std::array<std::pair<int, bool>, 4> cross_rotation(const Arrangement& arr, int x) {
  const auto& cr = arr.crossings()[x];
  if (cr.sign == 1)
    return {{{cr.a_out, true}, {cr.b_in, false}, {cr.a_in, false}, {cr.b_out, true}}};
  return {{{cr.a_out, true}, {cr.b_out, true}, {cr.a_in, false}, {cr.b_in, false}}};
}

}  // namespace

std::vector<Cycle> resolve_cycles(const Arrangement& arr, const ArcChain& mult) {
  const auto& arcs = arr.arcs();
  require(mult.size() == arcs.size(), errc::internal, "chain size mismatch");
  for (size_t a = 0; a < arcs.size(); ++a)
    require(mult[a] >= -1 && mult[a] <= 1, errc::illegal_surgery,
            "chain multiplicity out of range");

  // Per crossing: match each incoming strand end to the outgoing strand end
  // carrying the same local level values.
  std::map<std::pair<int, int>, std::pair<int, int>> follow;
  for (size_t x = 0; x < arr.crossings().size(); ++x) {
    auto rot = cross_rotation(arr, static_cast<int>(x));
    int jump[4], value[4];
    for (int i = 0; i < 4; ++i) {
      auto [a, is_start] = rot[i];
      jump[i] = (a >= 0 && mult[a] != 0) ? (is_start ? mult[a] : -mult[a]) : 0;
    }
    require(jump[0] + jump[1] + jump[2] + jump[3] == 0, errc::internal,
            "crossing level jumps do not close");
    value[0] = 0;
    for (int i = 1; i < 4; ++i) value[i] = value[i - 1] + jump[i];
    std::vector<int> ins, outs;
    for (int i = 0; i < 4; ++i) {
      auto [a, is_start] = rot[i];
      if (a < 0 || mult[a] == 0) continue;
      bool out = (is_start && mult[a] == 1) || (!is_start && mult[a] == -1);
      (out ? outs : ins).push_back(i);
    }
    require(ins.size() == outs.size(), errc::internal, "in/out mismatch at crossing");
    auto sector = [&](int i) { return value[(i % 4 + 4) % 4]; };
    // Level-set tracing: an incoming strand with left value v runs around
    // the maximal clockwise run of sectors with value >= v and leaves at
    // the out-end on its far side.
    for (int i : ins) {
      int v = sector(i - 1);
      int j = i - 1;
      int guard = 0;
      while (sector(j - 1) >= v && ++guard < 4) --j;
      int o = (j % 4 + 4) % 4;
      bool is_out = std::find(outs.begin(), outs.end(), o) != outs.end();
      require(is_out && sector(o) == v, errc::internal, "no matching out strand at crossing");
      follow[{static_cast<int>(x), i}] = {rot[o].first, rot[o].second ? 1 : -1};
    }
  }

  auto arrival = [&](int a, int dir) {
    int x = dir == 1 ? arcs[a].end_cross : arcs[a].start_cross;
    auto rot = cross_rotation(arr, x);
    for (int i = 0; i < 4; ++i)
      if (rot[i].first == a && rot[i].second == (dir == -1))
        return std::pair<int, int>{x, i};
    fail(errc::internal, "arc arrival end not found");
  };

  std::vector<Cycle> cycles;
  std::set<std::pair<int, int>> used;
  for (size_t a0 = 0; a0 < arcs.size(); ++a0) {
    if (mult[a0] == 0) continue;
    if (arcs[a0].circle) {
      cycles.push_back(Cycle{UsedArc{static_cast<int>(a0), mult[a0]}});
      continue;
    }
    int dir0 = mult[a0];
    if (used.count({static_cast<int>(a0), dir0})) continue;
    Cycle cyc;
    int a = static_cast<int>(a0), dir = dir0;
    do {
      used.insert({a, dir});
      cyc.push_back(UsedArc{a, dir});
      auto key = arrival(a, dir);
      auto it = follow.find(key);
      require(it != follow.end(), errc::internal, "walk fell off at a crossing");
      a = it->second.first;
      dir = it->second.second;
    } while (!(a == static_cast<int>(a0) && dir == dir0));
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

Curve cycle_coords(const Arrangement& arr, const Cycle& cycle) {
  const PolygonSurface& S = arr.surface();
  Curve c;
  for (const UsedArc& ua : cycle) {
    const auto& arc = arr.arcs()[ua.arc];
    if (ua.dir == 1) {
      c.points.insert(c.points.end(), arc.interior.begin(), arc.interior.end());
    } else {
      for (auto it = arc.interior.rbegin(); it != arc.interior.rend(); ++it)
        c.points.push_back(entry_point(S, *it));
    }
  }
  return c;
}

std::optional<std::vector<int>> cycle_values(const Arrangement& arr, const ArcChain& mult) {
  size_t n = arr.components().size();
  std::vector<int> value(n, 0);
  std::vector<bool> visited(n, false);
  std::deque<int> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int ai : arr.components()[c].boundary_arcs) {
      const auto& arc = arr.arcs()[ai];
      int delta = mult[ai];
      std::tuple<int, int, int> steps[2] = {{arc.right_comp, arc.left_comp, delta},
                                            {arc.left_comp, arc.right_comp, -delta}};
      for (auto [from, to, d] : steps) {
        if (from != c) continue;
        int want = value[c] + d;
        if (!visited[to]) {
          visited[to] = true;
          value[to] = want;
          queue.push_back(to);
        } else if (value[to] != want) {
          return std::nullopt;
        }
      }
    }
  }
  int lo = *std::min_element(value.begin(), value.end());
  for (auto& v : value) v -= lo;
  return value;
}

ArcChain chain_difference(const ArcChain& target, const ArcChain& base) {
  ArcChain d(target.size());
  for (size_t i = 0; i < target.size(); ++i) d[i] = target[i] - base[i];
  return d;
}

ArcChain owner_chain(const Arrangement& arr, int owner) {
  ArcChain c(arr.arcs().size(), 0);
  for (size_t a = 0; a < arr.arcs().size(); ++a)
    if (arr.arcs()[a].owner == owner) c[a] = 1;
  return c;
}

namespace {

ArcChain chain_plus_boundary(const Arrangement& arr, const ArcChain& base,
                             const std::vector<int>& region, int sign) {
  std::set<int> in(region.begin(), region.end());
  ArcChain mult(arr.arcs().size(), 0);
  for (size_t a = 0; a < arr.arcs().size(); ++a) {
    const auto& arc = arr.arcs()[a];
    bool lin = in.count(arc.left_comp) > 0;
    bool rin = in.count(arc.right_comp) > 0;
    int coeff = (lin == rin) ? 0 : (lin ? 1 : -1);
    int m = base[a] + sign * coeff;
    require(m >= -1 && m <= 1, errc::illegal_surgery, "surgery not embeddable");
    require(!(base[a] == 1 && m == -1), errc::illegal_surgery, "surgery reverses a base strand");
    mult[a] = m;
  }
  return mult;
}

ArcChain chain_of_cycles(const Arrangement& arr, const std::vector<Cycle>& cycles) {
  ArcChain mult(arr.arcs().size(), 0);
  for (const Cycle& c : cycles)
    for (const UsedArc& ua : c) mult[ua.arc] += ua.dir;
  return mult;
}

// Face set with value one under the cycle's own overlap function.
std::optional<std::vector<int>> interior_faces(const Arrangement& arr, const ArcChain& mult) {
  auto vals = cycle_values(arr, mult);
  if (!vals) return std::nullopt;
  int mx = *std::max_element(vals->begin(), vals->end());
  if (mx > 1) return std::nullopt;
  std::vector<int> out;
  for (size_t c = 0; c < vals->size(); ++c)
    if ((*vals)[c] == 1) out.push_back(static_cast<int>(c));
  return out;
}

}  // namespace

ArcChain surgered_chain(const Arrangement& arr, const std::vector<int>& region, int sign) {
  return chain_plus_boundary(arr, owner_chain(arr, 0), region, sign);
}

ChainStep extremal_chain_step(const PolygonSurface& S, const Arrangement& arr,
                              const ArcChain& base, const ArcChain& target, int sign) {
  auto fvals = cycle_values(arr, chain_difference(target, base));
  require(fvals.has_value(), errc::not_homologous, "difference is not null homologous");
  int fmax = *std::max_element(fvals->begin(), fvals->end());
  require(fmax >= 1, errc::nothing_to_do, "the chains are already at distance zero");

  int level = sign == 1 ? fmax : 0;
  int other = sign == 1 ? 0 : fmax;
  std::vector<int> region;
  std::set<int> other_comps;
  for (size_t c = 0; c < fvals->size(); ++c) {
    if ((*fvals)[c] == level) region.push_back(static_cast<int>(c));
    if ((*fvals)[c] == other) other_comps.insert(static_cast<int>(c));
  }

  ChainStep step;
  int guard = 0;
  while (true) {
    require(++guard <= static_cast<int>(arr.components().size()) + 2, errc::internal,
            "surgery repair did not terminate");
    ArcChain mult = chain_plus_boundary(arr, base, region, sign);
    auto cycles = resolve_cycles(arr, mult);

    std::vector<Curve> coords;
    for (const Cycle& c : cycles) coords.push_back(cycle_coords(arr, c));
    std::vector<bool> trivial(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i) trivial[i] = is_contractible(S, coords[i]);

    std::vector<size_t> essential;
    for (size_t i = 0; i < cycles.size(); ++i)
      if (!trivial[i]) essential.push_back(i);
    require(essential.size() <= 20, errc::too_large, "too many components in surgery output");
    std::vector<HomologyClass> cls;
    for (size_t i : essential) cls.push_back(homology_class(S, coords[i]));

    std::vector<size_t> offender;
    std::vector<int> offender_int;
    for (size_t mask = 1; mask < (size_t(1) << essential.size()); ++mask) {
      HomologyClass h = zero_class(S);
      for (size_t i = 0; i < essential.size(); ++i)
        if (mask & (size_t(1) << i)) h = h + cls[i];
      if (!h.is_zero()) continue;
      std::vector<Cycle> sub;
      for (size_t i = 0; i < essential.size(); ++i)
        if (mask & (size_t(1) << i)) sub.push_back(cycles[essential[i]]);
      auto faces = interior_faces(arr, chain_of_cycles(arr, sub));
      if (!faces) continue;
      if (offender.empty() || faces->size() > offender_int.size()) {
        offender.clear();
        for (size_t i = 0; i < essential.size(); ++i)
          if (mask & (size_t(1) << i)) offender.push_back(essential[i]);
        offender_int = *faces;
      }
    }

    if (offender.empty()) {
      for (size_t i = 0; i < cycles.size(); ++i) {
        if (trivial[i]) {
          step.discarded_trivial.push_back(coords[i]);
          auto faces = interior_faces(arr, chain_of_cycles(arr, {cycles[i]}));
          step.disc_ints.push_back(faces ? *faces : std::vector<int>{});
        } else {
          step.kept.push_back(cycles[i]);
        }
      }
      step.region = region;
      step.chain = chain_of_cycles(arr, step.kept);
      return step;
    }

    // Repair: drop the region components inside Int(n); when Int(n) holds
    // opposite-extremum components, add Int(n) minus those instead.
    std::set<int> intset(offender_int.begin(), offender_int.end());
    std::vector<int> next_region;
    for (int c : region)
      if (!intset.count(c)) next_region.push_back(c);
    bool has_other = false;
    for (int c : offender_int)
      if (other_comps.count(c)) has_other = true;
    if (has_other) {
      for (int c : offender_int)
        if (!other_comps.count(c) &&
            std::find(next_region.begin(), next_region.end(), c) == next_region.end())
          next_region.push_back(c);
    }
    Multicurve n_mc;
    for (size_t i : offender) n_mc.components.push_back(cycle_coords(arr, cycles[i]));
    step.discarded_null.push_back(n_mc);
    step.null_ints.push_back(offender_int);
    std::sort(next_region.begin(), next_region.end());
    require(next_region != region, errc::internal, "surgery repair made no progress");
    region = next_region;
  }
}

namespace {

SurgeryCertificate extremal_surgery(const PolygonSurface& S, const Multicurve& gi,
                                    const Multicurve& gn, int sign) {
  ReducedPair rp = reduce_pair(S, gi, gn);
  const Arrangement& A = *rp.arr;
  ChainStep step =
      extremal_chain_step(S, A, owner_chain(A, 0), owner_chain(A, 1), sign);

  SurgeryCertificate cert;
  cert.input = rp.m1;
  cert.target = rp.m2;
  cert.arr = rp.arr;
  cert.sign = sign;
  cert.region = step.region;
  cert.kept_cycles = step.kept;
  cert.discarded_trivial = step.discarded_trivial;
  cert.disc_ints = step.disc_ints;
  cert.discarded_null = step.discarded_null;
  cert.null_ints = step.null_ints;
  Multicurve out;
  for (const Cycle& c : step.kept) out.components.push_back(cycle_coords(A, c));
  normalize_joint(S, {&out});
  check_embedded(S, out);
  cert.output = out;
  return cert;
}

}  // namespace

SurgeryCertificate smax_surgery(const PolygonSurface& S, const Multicurve& gi,
                                const Multicurve& gn) {
  return extremal_surgery(S, gi, gn, 1);
}

SurgeryCertificate smin_surgery(const PolygonSurface& S, const Multicurve& gi,
                                const Multicurve& gn) {
  return extremal_surgery(S, gi, gn, -1);
}

namespace {

std::map<int, std::vector<Rat>> arr_params(const Arrangement& arr) {
  std::map<int, std::vector<Rat>> out;
  const PolygonSurface& S = arr.surface();
  for (int o = 0; o < 2; ++o)
    for (const Curve& c : arr.owner(o).components)
      for (const SidePoint& p : c.points) {
        auto [low, u] = surface_key(S, p);
        out[low].push_back(u);
      }
  return out;
}

std::vector<SidePoint> lane(const Arrangement& arr, const std::vector<SidePoint>& guide,
                            bool left_of_guide, bool backward) {
  const PolygonSurface& S = arr.surface();
  auto params = arr_params(arr);
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

Multicurve multi_band_surgery(const Arrangement& arr, const std::vector<int>& band_arcs) {
  const PolygonSurface& S = arr.surface();
  require(!band_arcs.empty(), errc::illegal_surgery, "no arcs to band along");
  int owner = arr.arcs()[band_arcs[0]].owner;
  int host_owner = 1 - owner;

  // Each band cuts the host just after its two crossings and inserts two
  // parallel copies of the guide arc.
  struct Cut {
    int comp;
    int chord_idx;  // index along the component
    int rank;       // crossing rank along the chord
    // Rewiring: the lane entered when a strand arrives at this cut, and the
    // cut the lane leads to.
    std::vector<SidePoint> lane;
    int to_cut;
  };
  std::vector<Cut> cuts;
  auto rank_on = [&](int chord, int x) {
    const auto& xs = arr.chords()[chord].crossings;
    return static_cast<int>(std::find(xs.begin(), xs.end(), x) - xs.begin());
  };
  for (int ai : band_arcs) {
    const auto& a = arr.arcs()[ai];
    require(a.owner == owner, errc::illegal_surgery, "band arcs from mixed owners");
    require(!a.circle && a.horizontal(), errc::illegal_surgery,
            "band surgery needs a horizontal arc");
    int x1 = a.start_cross, x2 = a.end_cross;
    const auto& c1 = arr.crossings()[x1];
    const auto& c2 = arr.crossings()[x2];
    int host_in_x1 = host_owner == 0 ? c1.a_in : c1.b_in;
    int host_out_x2 = host_owner == 0 ? c2.a_out : c2.b_out;
    bool side = arr.arcs()[host_in_x1].approaches_left;
    require(arr.arcs()[host_out_x2].leaves_left == side, errc::illegal_surgery,
            "band reconnection is orientation-incompatible");
    int hchord1 = host_owner == 0 ? c1.chord_a : c1.chord_b;
    int hchord2 = host_owner == 0 ? c2.chord_a : c2.chord_b;
    int id1 = static_cast<int>(cuts.size());
    int id2 = id1 + 1;
    Cut cut1{arr.arcs()[host_in_x1].comp, arr.chords()[hchord1].idx, rank_on(hchord1, x1),
             lane(arr, a.interior, side, false), id2};
    Cut cut2{arr.arcs()[host_out_x2].comp, arr.chords()[hchord2].idx, rank_on(hchord2, x2),
             lane(arr, a.interior, !side, true), id1};
    cuts.push_back(std::move(cut1));
    cuts.push_back(std::move(cut2));
  }

  // Walk the rewired host.  From a cut's outgoing side we emit host points
  // until the next cut along the component, then traverse that cut's lane.
  auto cut_order = [&](const Cut& c) { return std::pair<int, int>{c.chord_idx, c.rank}; };
  std::map<int, std::vector<int>> cuts_by_comp;
  for (size_t i = 0; i < cuts.size(); ++i) cuts_by_comp[cuts[i].comp].push_back(static_cast<int>(i));
  for (auto& [comp, ids] : cuts_by_comp)
    std::sort(ids.begin(), ids.end(),
              [&](int a, int b) { return cut_order(cuts[a]) < cut_order(cuts[b]); });

  Multicurve out;
  for (size_t c = 0; c < arr.owner(host_owner).components.size(); ++c)
    if (!cuts_by_comp.count(static_cast<int>(c)))
      out.components.push_back(arr.owner(host_owner).components[c]);

  std::set<int> visited;  // cut ids whose outgoing side has been walked
  for (size_t start = 0; start < cuts.size(); ++start) {
    if (visited.count(static_cast<int>(start))) continue;
    Curve curve;
    int cur = static_cast<int>(start);
    do {
      visited.insert(cur);
      // Emit host points from cut `cur` to the next cut on its component.
      const Cut& c = cuts[cur];
      const auto& ids = cuts_by_comp[c.comp];
      const Curve& host = arr.owner(host_owner).components[c.comp];
      int n = static_cast<int>(host.points.size());
      size_t pos = std::find(ids.begin(), ids.end(), cur) - ids.begin();
      int nxt = ids[(pos + 1) % ids.size()];
      auto [ka, ra] = cut_order(c);
      auto [kb, rb] = cut_order(cuts[nxt]);
      bool same_chord_forward = (ka == kb && rb > ra);
      if (!same_chord_forward) {
        curve.points.push_back(host.points[ka]);
        int k = (ka + 1) % n;
        while (k != kb) {
          curve.points.push_back(host.points[k]);
          k = (k + 1) % n;
        }
      }
      // Traverse the lane at the next cut.
      const Cut& entered = cuts[nxt];
      curve.points.insert(curve.points.end(), entered.lane.begin(), entered.lane.end());
      cur = entered.to_cut;
    } while (cur != static_cast<int>(start));
    out.components.push_back(curve);
  }
  normalize_joint(S, {&out});
  check_embedded(S, out);
  return out;
}

Multicurve surger_along_arc(const Arrangement& arr, int arc, int partner) {
  const PolygonSurface& S = arr.surface();
  const auto& a = arr.arcs()[arc];
  require(!a.circle, errc::illegal_surgery, "cannot surger along a full circle");
  require(a.horizontal(), errc::illegal_surgery, "surgery requires a horizontal arc");
  if (partner == arc) return multi_band_surgery(arr, {arc});

  const auto& p = arr.arcs()[partner];
  require(p.owner == a.owner && p.horizontal(), errc::illegal_surgery,
          "partner must be a homotopic horizontal arc");
  const Arrangement::ArcClass* cls = nullptr;
  for (const auto& c : arr.classes(a.owner)) {
    if (std::find(c.members.begin(), c.members.end(), arc) != c.members.end()) {
      cls = &c;
      break;
    }
  }
  require(cls != nullptr, errc::internal, "arc class not found");
  auto ia = std::find(cls->members.begin(), cls->members.end(), arc);
  auto ip = std::find(cls->members.begin(), cls->members.end(), partner);
  require(ip != cls->members.end(), errc::illegal_surgery, "arcs are not homotopic");
  size_t lo = std::min(ia, ip) - cls->members.begin();
  size_t hi = std::max(ia, ip) - cls->members.begin();
  std::vector<int> region(cls->rect_comps.begin() + lo, cls->rect_comps.begin() + hi);

  int base_owner = 1 - a.owner;
  for (int sign : {1, -1}) {
    try {
      ArcChain mult = chain_plus_boundary(arr, owner_chain(arr, base_owner), region, sign);
      auto cycles = resolve_cycles(arr, mult);
      Multicurve out;
      for (const Cycle& c : cycles) out.components.push_back(cycle_coords(arr, c));
      normalize_joint(S, {&out});
      check_embedded(S, out);
      return out;
    } catch (const error& e) {
      if (e.code() != errc::illegal_surgery) throw;
    }
  }
  fail(errc::illegal_surgery, "no orientation of the rectangle makes the surgery embeddable");
}

DiscardResult discard_trivial(const PolygonSurface& S, const Multicurve& m) {
  DiscardResult res;
  res.kept.label = m.label;
  for (const Curve& c : m.components) {
    if (is_contractible(S, c)) {
      res.discarded.push_back(c);
      if (!c.points.empty()) {
        auto sub = bounds_embedded_subsurface(S, Multicurve{{c}, ""}, Multicurve{});
        if (sub) {
          // Report the disc side, which may be the complement of the
          // orientation-coinciding side.
          if (sub->chi != 1) {
            std::vector<int> rest;
            for (size_t k = 0; k < sub->arr->components().size(); ++k)
              if (!sub->contains(static_cast<int>(k))) rest.push_back(static_cast<int>(k));
            *sub = make_subsurface(sub->arr, rest);
          }
          res.discs.push_back(*sub);
        }
      }
    } else {
      res.kept.components.push_back(c);
    }
  }
  return res;
}

}  // namespace cycles
