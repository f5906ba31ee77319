#include "cycles/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cycles {

namespace {

// Flipping this would flip which twist direction the public dehn_twist calls
// "positive"; fixed by the homology identity in the tests.
constexpr int kTwistDir = -1;

}  // namespace

PolygonSurface::PolygonSurface(int genus)
    : genus_(genus), relator_(trace_link(genus)), solver_(relator_) {}

int PolygonSurface::partner(int side) const {
  int r = side % 4;
  return (r == 0 || r == 1) ? side + 2 : side - 2;
}

int PolygonSurface::pair_of(int side) const {
  int handle = side / 4;
  int r = side % 4;
  return 2 * handle + ((r == 0 || r == 2) ? 0 : 1);
}

int PolygonSurface::sign_of(int side) const {
  int r = side % 4;
  return (r == 0 || r == 1) ? 1 : -1;
}

Word PolygonSurface::trace_link(int genus) {
  require(genus >= 2, errc::unsupported_surface, "genus must be at least 2");
  int n = 4 * genus;
  auto partner = [&](int s) {
    int r = s % 4;
    return (r == 0 || r == 1) ? s + 2 : s - 2;
  };
  auto letter = [&](int s) {
    int handle = s / 4;
    int r = s % 4;
    int pair = 2 * handle + ((r == 0 || r == 2) ? 0 : 1);
    int sign = (r == 0 || r == 1) ? 1 : -1;
    return sign * (pair + 1);
  };
  Word w;
  int s = 0;
  do {
    w.push_back(letter(s));
    s = (partner(s) + 1) % n;
  } while (s != 0 && static_cast<int>(w.size()) <= n);
  require(static_cast<int>(w.size()) == n, errc::internal, "gluing does not have one vertex");
  return w;
}

PolygonSurface make_surface(int genus) { return PolygonSurface(genus); }

// --- HomologyClass ---------------------------------------------------------

bool HomologyClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long long v) { return v == 0; });
}

bool HomologyClass::is_primitive() const {
  long long g = 0;
  for (long long v : coords) g = std::gcd(g, std::abs(v));
  return g == 1;
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
  HomologyClass r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

HomologyClass HomologyClass::operator-(const HomologyClass& o) const {
  HomologyClass r = *this;
  for (size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

HomologyClass HomologyClass::operator*(long long k) const {
  HomologyClass r = *this;
  for (auto& v : r.coords) v *= k;
  return r;
}

// --- Boundary coordinates --------------------------------------------------

SidePoint entry_point(const PolygonSurface& S, const SidePoint& exit) {
  return SidePoint{S.partner(exit.side), Rat(1) - exit.pos};
}

Rat boundary_coord(const SidePoint& p) { return Rat(p.side) + p.pos; }

std::pair<int, Rat> surface_key(const PolygonSurface& S, const SidePoint& p) {
  int low = std::min(p.side, S.partner(p.side));
  Rat u = (p.side == low) ? p.pos : Rat(1) - p.pos;
  return {low, u};
}

std::vector<Chord> curve_chords(const PolygonSurface& S, const Curve& c) {
  std::vector<Chord> out;
  size_t n = c.points.size();
  for (size_t i = 0; i < n; ++i) {
    const SidePoint& prev = c.points[(i + n - 1) % n];
    out.push_back(Chord{boundary_coord(entry_point(S, prev)), boundary_coord(c.points[i])});
  }
  return out;
}

namespace {

bool in_open_arc(const Rat& x, const Rat& a, const Rat& b) {
  // Open counterclockwise arc from a to b on the boundary circle.
  if (a < b) return a < x && x < b;
  return x > a || x < b;
}

}  // namespace

bool chords_cross(const Chord& c1, const Chord& c2) {
  bool from_in = in_open_arc(c2.from, c1.from, c1.to);
  bool to_in = in_open_arc(c2.to, c1.from, c1.to);
  return from_in != to_in;
}

// --- Homology, words -------------------------------------------------------

HomologyClass zero_class(const PolygonSurface& S) {
  return HomologyClass{std::vector<long long>(2 * S.genus(), 0)};
}

HomologyClass homology_class(const PolygonSurface& S, const Curve& c) {
  HomologyClass h = zero_class(S);
  for (const SidePoint& p : c.points) h.coords[S.pair_of(p.side)] += S.sign_of(p.side);
  return h;
}

HomologyClass homology_class(const PolygonSurface& S, const Multicurve& m) {
  HomologyClass h = zero_class(S);
  for (const Curve& c : m.components) h = h + homology_class(S, c);
  return h;
}

long long pairing(const HomologyClass& x, const HomologyClass& y) {
  require(x.coords.size() == y.coords.size(), errc::invalid_class, "pairing dimension mismatch");
  long long s = 0;
  for (size_t i = 0; i + 1 < x.coords.size(); i += 2)
    s += x.coords[i] * y.coords[i + 1] - x.coords[i + 1] * y.coords[i];
  return s;
}

Word curve_word(const PolygonSurface& S, const Curve& c) {
  Word w;
  for (const SidePoint& p : c.points) w.push_back(S.sign_of(p.side) * (S.pair_of(p.side) + 1));
  return cyclic_reduce(w);
}

bool is_contractible(const PolygonSurface& S, const Curve& c) {
  return S.solver().is_trivial(curve_word(S, c));
}

Word curve_key(const PolygonSurface& S, const Curve& c) {
  return S.solver().conjugacy_key(curve_word(S, c));
}

bool freely_homotopic(const PolygonSurface& S, const Curve& c1, const Curve& c2) {
  return S.solver().conjugate(curve_word(S, c1), curve_word(S, c2));
}

std::vector<Word> multicurve_key(const PolygonSurface& S, const Multicurve& m) {
  std::vector<Word> keys;
  for (const Curve& c : m.components) keys.push_back(curve_key(S, c));
  std::sort(keys.begin(), keys.end());
  return keys;
}

Curve reverse_curve(const PolygonSurface& S, const Curve& c) {
  Curve r;
  for (auto it = c.points.rbegin(); it != c.points.rend(); ++it)
    r.points.push_back(entry_point(S, *it));
  return r;
}

// --- Validity --------------------------------------------------------------

void check_embedded(const PolygonSurface& S, const Multicurve& m) {
  std::set<std::pair<int, Rat>> keys;
  for (const Curve& c : m.components)
    for (const SidePoint& p : c.points) {
      require(p.pos > Rat(0) && p.pos < Rat(1), errc::invalid_curve, "position out of range");
      auto key = surface_key(S, p);
      require(!keys.count(key), errc::invalid_curve, "repeated surface point");
      keys.insert(key);
    }
  std::vector<Chord> all;
  for (const Curve& c : m.components) {
    auto ch = curve_chords(S, c);
    all.insert(all.end(), ch.begin(), ch.end());
  }
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      require(!chords_cross(all[i], all[j]), errc::invalid_curve, "multicurve is not embedded");
}

bool is_embedded(const PolygonSurface& S, const Multicurve& m) {
  try {
    check_embedded(S, m);
    return true;
  } catch (const error&) {
    return false;
  }
}

void check_multicurve(const PolygonSurface& S, const Multicurve& m) {
  check_embedded(S, m);
  for (const Curve& c : m.components)
    require(!is_contractible(S, c), errc::invalid_curve, "contractible component");
}

bool validate_vertex(const PolygonSurface& S, const Multicurve& m, const HomologyClass& alpha) {
  require(!alpha.is_zero() && alpha.is_primitive(), errc::invalid_class,
          "alpha must be primitive and nonzero");
  check_embedded(S, m);
  if (!(homology_class(S, m) == alpha)) return false;
  size_t n = m.components.size();
  require(n <= 20, errc::too_large, "too many components for subset check");
  std::vector<HomologyClass> cls;
  for (const Curve& c : m.components) cls.push_back(homology_class(S, c));
  for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
    HomologyClass h = zero_class(S);
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) h = h + cls[i];
    if (h.is_zero()) return false;
  }
  for (const Curve& c : m.components)
    if (is_contractible(S, c)) return false;
  return true;
}

// --- Normalization ---------------------------------------------------------

void normalize_joint(const PolygonSurface& S, std::vector<Multicurve*> ms) {
  struct Entry {
    Rat u;
    size_t mc, comp, pt;
  };
  std::map<int, std::vector<Entry>> by_pair;  // keyed by low side
  for (size_t a = 0; a < ms.size(); ++a)
    for (size_t b = 0; b < ms[a]->components.size(); ++b)
      for (size_t c = 0; c < ms[a]->components[b].points.size(); ++c) {
        const SidePoint& p = ms[a]->components[b].points[c];
        auto [low, u] = surface_key(S, p);
        by_pair[low].push_back(Entry{u, a, b, c});
      }
  for (auto& [low, entries] : by_pair) {
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
      if (x.u != y.u) return x.u < y.u;
      return std::tie(x.mc, x.comp, x.pt) < std::tie(y.mc, y.comp, y.pt);
    });
    Int n = Int(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) {
      Rat u(Int(i + 1), n + 1);
      SidePoint& p = ms[entries[i].mc]->components[entries[i].comp].points[entries[i].pt];
      p.pos = (p.side == low) ? u : Rat(1) - u;
    }
  }
}

// --- Parallel copies -------------------------------------------------------

namespace {

// Sorted parameters on each side pair over a set of multicurves.
std::map<int, std::vector<Rat>> pair_params(const PolygonSurface& S,
                                            const std::vector<const Multicurve*>& ms) {
  std::map<int, std::vector<Rat>> out;
  for (const Multicurve* m : ms)
    for (const Curve& c : m->components)
      for (const SidePoint& p : c.points) {
        auto [low, u] = surface_key(S, p);
        out[low].push_back(u);
      }
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
  return out;
}

// Half the free space around parameter u on its side pair.
Rat local_gap(const std::map<int, std::vector<Rat>>& params, int low, const Rat& u) {
  Rat lo(0), hi(1);
  auto it = params.find(low);
  if (it != params.end()) {
    for (const Rat& v : it->second) {
      if (v < u && v > lo) lo = v;
      if (v > u && v < hi) hi = v;
    }
  }
  Rat gap = std::min(u - lo, hi - u);
  return gap / 2;
}

}  // namespace

std::vector<Curve> parallel_copies(const PolygonSurface& S, const Curve& c, bool left, int k,
                                   const std::vector<const Multicurve*>& context) {
  std::vector<const Multicurve*> ctx = context;
  Multicurve self{{c}, ""};
  ctx.push_back(&self);
  auto params = pair_params(S, ctx);
  int sgn = left ? 1 : -1;
  std::vector<Curve> out;
  for (int j = 1; j <= k; ++j) {
    Curve copy;
    for (const SidePoint& p : c.points) {
      auto [low, u] = surface_key(S, p);
      Rat step = local_gap(params, low, u) / Int(k + 1);
      copy.points.push_back(SidePoint{p.side, p.pos + step * Int(sgn * j)});
    }
    out.push_back(copy);
  }
  return out;
}

// --- Dehn twist ------------------------------------------------------------

int raw_crossings(const PolygonSurface& S, const Multicurve& a, const Multicurve& b) {
  std::vector<Chord> ca, cb;
  for (const Curve& c : a.components) {
    auto ch = curve_chords(S, c);
    ca.insert(ca.end(), ch.begin(), ch.end());
  }
  for (const Curve& c : b.components) {
    auto ch = curve_chords(S, c);
    cb.insert(cb.end(), ch.begin(), ch.end());
  }
  int n = 0;
  for (const Chord& x : ca)
    for (const Chord& y : cb)
      if (chords_cross(x, y)) ++n;
  return n;
}

Multicurve dehn_twist(const PolygonSurface& S, const Multicurve& m, const Curve& t, int k) {
  Multicurve mm = m;
  if (k == 0 || t.points.empty()) {
    normalize_joint(S, {&mm});
    return mm;
  }
  Multicurve tm{{t}, "t"};
  normalize_joint(S, {&mm, &tm});
  const Curve& tt = tm.components[0];
  int T = static_cast<int>(tt.points.size());
  auto tchords = curve_chords(S, tt);
  auto params = pair_params(S, {&mm, &tm});

  // Collect crossings, grouped per t-chord so ranks give exact angles.
  std::vector<std::vector<std::pair<Rat, size_t>>> per_tchord(T);  // (along key, id)
  struct MCross {
    size_t curve, chord;
    size_t tchord;
    Rat along_m;  // order key along the m-chord
    int sign;
  };
  std::vector<MCross> crossings;
  Rat modulus(4 * S.genus());
  auto ccw_dist = [&](const Rat& from, const Rat& to) {
    Rat d = to - from;
    if (d < Rat(0)) d += modulus;
    return d;
  };
  for (size_t ci = 0; ci < mm.components.size(); ++ci) {
    auto mchords = curve_chords(S, mm.components[ci]);
    for (size_t mi = 0; mi < mchords.size(); ++mi) {
      for (size_t ti = 0; ti < tchords.size(); ++ti) {
        if (!chords_cross(mchords[mi], tchords[ti])) continue;
        // Sign: the m-chord starts on t's left iff its start lies in the
        // ccw arc from the t-chord's end to its start.
        bool starts_left = in_open_arc(mchords[mi].from, tchords[ti].to, tchords[ti].from);
        MCross x;
        x.curve = ci;
        x.chord = mi;
        x.tchord = ti;
        x.along_m = ccw_dist(mchords[mi].from,
                             in_open_arc(tchords[ti].from, mchords[mi].from, mchords[mi].to)
                                 ? tchords[ti].from
                                 : tchords[ti].to);
        x.sign = starts_left ? 1 : -1;
        size_t id = crossings.size();
        crossings.push_back(x);
        Rat key = ccw_dist(tchords[ti].from,
                           in_open_arc(mchords[mi].from, tchords[ti].from, tchords[ti].to)
                               ? mchords[mi].from
                               : mchords[mi].to);
        per_tchord[ti].push_back({key, id});
      }
    }
  }
  // Angles on t from ranks along each t-chord.
  std::vector<Rat> angle(crossings.size());
  for (int ti = 0; ti < T; ++ti) {
    auto& v = per_tchord[ti];
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t r = 0; r < v.size(); ++r)
      angle[v[r].second] = Rat(ti) + Rat(Int(r + 1), Int(v.size() + 1));
  }

  // Rebuild each component.
  Multicurve out;
  out.label = m.label;
  for (size_t ci = 0; ci < mm.components.size(); ++ci) {
    const Curve& c = mm.components[ci];
    size_t n = c.points.size();
    if (n == 0) {
      out.components.push_back(c);
      continue;
    }
    // Crossings per chord of this curve, ordered along the chord.
    std::vector<std::vector<size_t>> per_mchord(n);
    for (size_t id = 0; id < crossings.size(); ++id)
      if (crossings[id].curve == ci) per_mchord[crossings[id].chord].push_back(id);
    for (auto& v : per_mchord)
      std::sort(v.begin(), v.end(), [&](size_t a, size_t b) {
        return crossings[a].along_m < crossings[b].along_m;
      });

    Curve nc;
    for (size_t i = 0; i < n; ++i) {
      for (size_t id : per_mchord[i]) {
        const MCross& x = crossings[id];
        long long w = static_cast<long long>(k) * x.sign * kTwistDir;  // signed laps
        if (w == 0) continue;
        Rat phi = angle[id];
        Rat span = Rat(w) * Rat(T);
        // Side-crossing passages are the integer angles strictly between
        // phi and phi+span, in travel order; phi itself is non-integral.
        std::vector<long long> markers;
        if (w > 0) {
          // phi is non-integral; first integer above phi.
          Int num = phi.numerator(), den = phi.denominator();
          long long first = to_ll(num / den) + 1;
          for (long long a = first; Rat(a) < phi + span; ++a) markers.push_back(a);
        } else {
          Int num = phi.numerator(), den = phi.denominator();
          long long first = to_ll(num / den);
          for (long long a = first; Rat(a) > phi + span; --a) markers.push_back(a);
        }
        for (long long a : markers) {
          // Marker a corresponds to t's point index (a-1) mod T.
          long long q = ((a - 1) % T + T) % T;
          const SidePoint& tp = tt.points[static_cast<size_t>(q)];
          Rat f = (Rat(a) - phi) / span;  // in (0,1)
          Rat lam = Rat(x.sign) * (Rat(1) - Rat(2) * f);
          auto [low, u] = surface_key(S, tp);
          Rat delta = local_gap(params, low, u);
          SidePoint np{tp.side, tp.pos + lam * delta};
          // Winding against t's orientation crosses the side pair the other
          // way, so the exit representative flips to the partner side.
          if (w < 0) np = entry_point(S, np);
          nc.points.push_back(np);
        }
      }
      nc.points.push_back(c.points[i]);
    }
    out.components.push_back(nc);
  }
  normalize_joint(S, {&out});
  check_embedded(S, out);
  return out;
}

}  // namespace cycles
