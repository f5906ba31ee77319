#pragma once

#include <optional>
#include <vector>

#include "cycles/overlap.hpp"

namespace cycles {

// An oriented sum of arrangement arcs: multiplicity -1, 0 or +1 per arc.
using ArcChain = std::vector<int>;

struct UsedArc {
  int arc;
  int dir;  // +1 with the arc, -1 against it
};
using Cycle = std::vector<UsedArc>;  // closed walk through crossings

// Splits an arc chain into closed embedded cycles, smoothing every crossing
// by matching local level values of the chain's winding function.
std::vector<Cycle> resolve_cycles(const Arrangement& arr, const ArcChain& mult);

// Side-crossing coordinates of a resolved cycle; empty for loops that meet
// no side (contractible corner loops).
Curve cycle_coords(const Arrangement& arr, const Cycle& cycle);

// Locally constant function on components jumping by mult across each arc
// (right to left), normalized to minimum zero; nullopt when inconsistent.
std::optional<std::vector<int>> cycle_values(const Arrangement& arr, const ArcChain& mult);

// Arc multiplicities of input + sign * (boundary of the component set D):
// owner-0 arcs start at 1, owner-1 at 0.  Throws illegal_surgery when a
// multiplicity leaves {-1, 0, 1} or an owner-0 arc would double.
ArcChain surgered_chain(const Arrangement& arr, const std::vector<int>& region, int sign);

struct SurgeryCertificate {
  Multicurve input;   // reduced representative actually surgered
  Multicurve target;  // reduced target
  Multicurve output;
  std::shared_ptr<const Arrangement> arr;
  std::vector<int> region;  // final face set D
  int sign = 1;             // output = input + sign * dD before discards
  std::vector<Cycle> kept_cycles;
  std::vector<Curve> discarded_trivial;
  std::vector<std::vector<int>> disc_ints;  // face sets bounded by the discards
  std::vector<Multicurve> discarded_null;
  std::vector<std::vector<int>> null_ints;
};

// The surgery corresponding to S_max(gi, gn) (sign +1) or S_min (sign -1),
// with the null-homologous repair procedure from the distance corollary.
SurgeryCertificate smax_surgery(const PolygonSurface& S, const Multicurve& gi,
                                const Multicurve& gn);
SurgeryCertificate smin_surgery(const PolygonSurface& S, const Multicurve& gi,
                                const Multicurve& gn);

// Chain form of the extremal surgery, for paths living on one arrangement:
// the step from `base` toward `target` using the extremal region of the
// difference function, with the same repair and discard rules.
struct ChainStep {
  ArcChain chain;           // the next vertex
  std::vector<int> region;  // final face set
  std::vector<Cycle> kept;
  std::vector<Curve> discarded_trivial;
  std::vector<std::vector<int>> disc_ints;
  std::vector<Multicurve> discarded_null;
  std::vector<std::vector<int>> null_ints;
};
ChainStep extremal_chain_step(const PolygonSurface& S, const Arrangement& arr,
                              const ArcChain& base, const ArcChain& target, int sign);

// Difference chain target - base as per-arc deltas.
ArcChain chain_difference(const ArcChain& target, const ArcChain& base);
// All arcs of one owner with multiplicity one.
ArcChain owner_chain(const Arrangement& arr, int owner);

// Band surgeries along several horizontal arcs at once (arcs of the same
// owner; the other owner is the host being rerouted).
Multicurve multi_band_surgery(const Arrangement& arr, const std::vector<int>& arcs);

// Surgering owner-0 of the arrangement along a horizontal arc of owner-1:
// with a distinct homotopic partner this adds the boundary of the rectangle
// chain between them; with partner == arc it is the band surgery, rerouting
// the host strands through two parallel copies of the arc.
Multicurve surger_along_arc(const Arrangement& arr, int arc, int partner);

// Removes contractible components; returns them with their bounding discs.
struct DiscardResult {
  Multicurve kept;
  std::vector<Curve> discarded;
  std::vector<Subsurface> discs;
};
DiscardResult discard_trivial(const PolygonSurface& S, const Multicurve& m);

}  // namespace cycles
