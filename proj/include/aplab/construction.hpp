#pragma once

#include <vector>

#include "aplab/interval.hpp"

namespace aplab {

// Two registered interval-replacement colourings of the circle. Both refine a
// starting partition by replacing every open interval with a fixed pattern of
// closed coloured and open uncoloured children, scaled into the parent and
// mirrored when the parent's direction is -1. Closed intervals never change
// again.
//
//   ap1414     one rule (TypeI); colour classes end up symmetric under the
//              half-turn colour swap.
//   ap3x30000  two rules (TypeI, TypeII); heavily blue, red measure tends to
//              2/95 from below.

Configuration initial_config(ConstructionId id);

// Children of one open interval, position-sorted. Throws NotReplaceable if the
// interval is coloured.
std::vector<Interval> replace_interval(const Interval& ivl, ConstructionId id);

Configuration step(const Configuration& c);

// Where a child interval of step() came from.
enum class Origin { Carried, FromTypeI, FromTypeII };

// step() that also reports, for every interval of the result, the kind of
// parent that produced it (Carried for copied closed intervals).
Configuration step_traced(const Configuration& c, std::vector<Origin>& origins);

// c_k: k steps from the initial configuration. k must be >= 0. Depth caps are
// a command-line concern; the library iterates as far as memory allows.
Configuration iterate(ConstructionId id, int k);

enum class PointColour { Red, Blue, Unresolved };
const char* to_string(PointColour c);

// Colour of a single point after at most max_depth refinements, by descending
// through the containing open interval only. O(max_depth) rational work; no
// configuration is materialized.
PointColour colour_at(ConstructionId id, const Rational& point, int max_depth);

// Rotate by 1/2, swap colours, flip directions; the result is renormalized to
// the canonical cut at 0. ap1414 configurations are fixed points.
Configuration dual_rotation(const Configuration& c);

// Mirror about `centre`, keep colours, flip directions, renormalize. With
// centre 1/4 the ap3x30000 configurations are fixed points.
Configuration reflect(const Configuration& c, const Rational& centre);

// Aggregate colour masses of c_k, computed from the per-step mass-transfer
// recurrence without materializing c_k. Agrees with measure() on materialized
// configurations and stays exact at depths far beyond what fits in memory.
struct LevelMeasures {
  Rational red;
  Rational blue;
  Rational uncoloured;
};
LevelMeasures measures_at_level(ConstructionId id, int k);
Rational measure_at_level(ConstructionId id, int k, Colour colour);

// Deepest level the command-line tool will materialize.
int depth_cap(ConstructionId id);
// Default refinement depth when inducing cyclic colourings.
int default_induce_depth(ConstructionId id);

}  // namespace aplab
