#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "racg/graph.hpp"
#include "racg/planar.hpp"
#include "racg/relhyp.hpp"

namespace racg {

/// Connected, not complete, no separating clique.
bool is_one_ended(const SimplicialGraph& g);

/// Indices of members J0 having a vertex subset that separates g. Throws
/// PreconditionViolated when g or a member is not one-ended or the
/// collection fails the Caprace conditions.
std::vector<int> parabolic_cut_points(const SimplicialGraph& g, const PeripheralCollection& pc);

/// A subset of `member` whose removal disconnects g, if any. Throws
/// PreconditionViolated when g is not connected.
std::optional<VertexSet> separating_subset(const SimplicialGraph& g, VertexSet member);

struct PeripheralSplit {
  VertexSet first;
  VertexSet second;
};

/// Splits g along a separating subset L of member `j0`, then absorbs J0
/// into one side. Throws NoSeparatingSubgraph.
PeripheralSplit peripheral_splitting(const SimplicialGraph& g, const PeripheralCollection& pc, int j0);

enum class TriState { Yes, No, Indeterminate };
std::string to_string(TriState t);

struct CutPairVerdict {
  TriState verdict = TriState::No;
  std::optional<CompleteSubgraphSuspension> witness;
};

/// Yes needs a separating complete subgraph suspension whose poles share no
/// member; the witness is the one whose smallest complementary component is
/// largest. Throws PreconditionViolated as parabolic_cut_points.
CutPairVerdict nonparabolic_cut_pair(const SimplicialGraph& g, const PeripheralCollection& pc);

/// Throws PreconditionViolated unless the complex is connected, not a
/// simplex and has no separating vertex or edge.
bool splits_over_2ended(const PlanarComplex& c);

/// Throws StandingAssumptionsViolated.
bool sierpinski_carpet(const PlanarComplex& c);

}  // namespace racg
