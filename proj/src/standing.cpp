#include "racg/standing.hpp"

namespace racg {

bool is_cone_of_4cycle(const SimplicialGraph& g) {
  if (g.order() != 5) return false;
  for (Vertex apex : universal_vertices(g)) {
    if (is_cycle(g, g.vertices() - VertexSet{apex})) return true;
  }
  return false;
}

StandingCheck check_standing_assumptions(const SimplicialGraph& g) {
  auto fail = [](int clause, std::string why) { return StandingCheck{false, clause, std::move(why)}; };
  if (g.empty()) return fail(1, "graph has no vertices");
  if (!is_connected(g)) return fail(1, "graph is disconnected");
  for (Vertex v : g.vertices()) {
    if (g.order() > 1 && separates(g, VertexSet{v})) return fail(1, "separating vertex " + g.label(v));
  }
  for (auto [u, v] : g.edges()) {
    VertexSet e{u, v};
    if (e != g.vertices() && separates(g, e)) return fail(1, "separating edge " + format_set(g, e));
  }
  if (!has_induced_4cycle(g)) return fail(1, "no induced 4-cycle");
  if (g.order() == 4 && is_cycle(g, g.vertices())) return fail(2, "graph is a 4-cycle");
  if (is_cone_of_4cycle(g)) return fail(2, "graph is the cone over a 4-cycle");
  return {true, 0, ""};
}

StandingCheck check_standing_assumptions(const PlanarComplex& c) { return check_standing_assumptions(c.base()); }

void require_standing_assumptions(const SimplicialGraph& g) {
  auto s = check_standing_assumptions(g);
  if (!s.pass) {
    throw Error(ErrorCode::StandingAssumptionsViolated,
                "clause (" + std::to_string(s.failed_clause) + "): " + s.reason);
  }
}

}  // namespace racg
