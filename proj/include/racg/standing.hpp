#pragma once

#include <string>

#include "racg/graph.hpp"
#include "racg/planar.hpp"

namespace racg {

/// Outcome of the standing assumptions on a nerve. Clause 1: connected, no
/// separating vertex or edge, some induced 4-cycle. Clause 2: neither a
/// 4-cycle nor the cone over one.
struct StandingCheck {
  bool pass = false;
  int failed_clause = 0;
  std::string reason;
};

StandingCheck check_standing_assumptions(const SimplicialGraph& g);
StandingCheck check_standing_assumptions(const PlanarComplex& c);

/// Throws StandingAssumptionsViolated with the failing clause.
void require_standing_assumptions(const SimplicialGraph& g);

bool is_cone_of_4cycle(const SimplicialGraph& g);

}  // namespace racg
