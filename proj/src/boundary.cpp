#include "racg/boundary.hpp"

#include <algorithm>

#include "racg/kernels.hpp"
#include "racg/standing.hpp"

namespace racg {

namespace {

void require_cut_point_hypotheses(const SimplicialGraph& g, const PeripheralCollection& pc) {
  if (!is_one_ended(g)) throw Error(ErrorCode::PreconditionViolated, "graph is not one-ended");
  for (VertexSet m : pc.members) {
    if (!is_one_ended(induced_subgraph(g, m))) {
      throw Error(ErrorCode::PreconditionViolated, "member " + format_set(g, m) + " is not one-ended");
    }
  }
  auto v = verify_caprace(g, pc.members);
  if (!v.empty()) {
    throw Error(ErrorCode::PreconditionViolated, "collection fails Caprace condition (" +
                                                     std::to_string(v.front().condition) + "): " + v.front().detail);
  }
}

}  // namespace

bool is_one_ended(const SimplicialGraph& g) {
  if (g.empty() || !is_connected(g) || is_complete(g)) return false;
  return !has_separating_clique(g);
}

std::optional<VertexSet> separating_subset(const SimplicialGraph& g, VertexSet member) {
  if (g.empty() || !is_connected(g)) throw Error(ErrorCode::PreconditionViolated, "graph is not connected");
  // Components outside the member decide everything unless it is the whole
  // graph: two or more separate already; a single one C is cut off from
  // x in J0 exactly when x has no neighbour in C.
  auto outside = components(g, g.vertices() - member);
  if (outside.size() >= 2) return member;
  if (outside.size() == 1) {
    for (Vertex x : member) {
      if (!g.neighbors(x).intersects(outside.front())) return member - VertexSet{x};
    }
    return std::nullopt;
  }
  return kernels::parallel::find_separating_subset(g, member);
}

std::vector<int> parabolic_cut_points(const SimplicialGraph& g, const PeripheralCollection& pc) {
  require_cut_point_hypotheses(g, pc);
  std::vector<int> out;
  for (std::size_t i = 0; i < pc.members.size(); ++i) {
    if (separating_subset(g, pc.members[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

PeripheralSplit peripheral_splitting(const SimplicialGraph& g, const PeripheralCollection& pc, int j0) {
  VertexSet member = pc.members.at(static_cast<std::size_t>(j0));
  auto cut = separating_subset(g, member);
  if (!cut) throw Error(ErrorCode::NoSeparatingSubgraph, "no subset of " + format_set(g, member) + " separates the graph");
  VertexSet l = *cut;
  auto parts = components(g, g.vertices() - l);
  VertexSet a = l | parts.front();
  VertexSet b = l;
  for (std::size_t i = 1; i < parts.size(); ++i) b |= parts[i];
  PeripheralSplit out;
  if (!(a - member).empty()) {
    out = {a, b | member};
  } else {
    out = {a | member, b};
  }
  // Proper sides, meeting inside the member, no crossing edges, members kept whole.
  bool proper = out.first != g.vertices() && out.second != g.vertices();
  bool meet_in_member = (out.first & out.second).subset_of(member);
  bool no_cross_edges = true;
  for (auto [u, v] : g.edges()) {
    bool in_one = (out.first.contains(u) && out.first.contains(v)) || (out.second.contains(u) && out.second.contains(v));
    no_cross_edges = no_cross_edges && in_one;
  }
  bool members_inside = std::all_of(pc.members.begin(), pc.members.end(),
                                    [&](VertexSet m) { return m.subset_of(out.first) || m.subset_of(out.second); });
  if (!proper || !meet_in_member || !no_cross_edges || !members_inside) {
    throw Error(ErrorCode::InternalInvariant, "splitting of " + format_set(g, member) + " fails its postconditions");
  }
  return out;
}

std::string to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

CutPairVerdict nonparabolic_cut_pair(const SimplicialGraph& g, const PeripheralCollection& pc) {
  require_cut_point_hypotheses(g, pc);
  auto sus = separating_complete_subgraph_suspensions(g);
  if (sus.empty()) return {TriState::No, std::nullopt};
  // Among unshared suspensions prefer the one whose smallest side is largest,
  // so a pair cutting off a lone vertex loses to a wider cut.
  std::optional<CompleteSubgraphSuspension> best;
  int best_side = 0;
  for (const auto& s : sus) {
    VertexSet poles{s.poles.first, s.poles.second};
    bool shared = std::any_of(pc.members.begin(), pc.members.end(), [&](VertexSet m) { return poles.subset_of(m); });
    if (shared) continue;
    int side = g.order();
    for (VertexSet part : components(g, g.vertices() - s.vertex_set())) side = std::min(side, part.size());
    if (!best || side > best_side) {
      best = s;
      best_side = side;
    }
  }
  if (best) return {TriState::Yes, best};
  return {TriState::Indeterminate, std::nullopt};
}

bool splits_over_2ended(const PlanarComplex& c) {
  const SimplicialGraph& g = c.base();
  if (g.empty() || !is_connected(g)) throw Error(ErrorCode::PreconditionViolated, "complex is not connected");
  if (is_complete(g)) throw Error(ErrorCode::PreconditionViolated, "complex is a simplex");
  for (Vertex v : g.vertices()) {
    if (separates(g, VertexSet{v})) throw Error(ErrorCode::PreconditionViolated, "separating vertex " + g.label(v));
  }
  for (auto [u, v] : g.edges()) {
    if (separates(g, VertexSet{u, v})) {
      throw Error(ErrorCode::PreconditionViolated, "separating edge " + format_set(g, VertexSet{u, v}));
    }
  }
  return !cut_pairs(g).empty() || !separating_induced_paths_len2(g).empty();
}

bool sierpinski_carpet(const PlanarComplex& c) {
  const SimplicialGraph& g = c.base();
  require_standing_assumptions(g);
  bool long_region = std::any_of(c.regions().begin(), c.regions().end(),
                                 [](const Region& r) { return r.boundary_is_cycle && r.boundary_len >= 5; });
  return long_region && separating_induced_4cycles(g).empty() && cut_pairs(g).empty() &&
         separating_induced_paths_len2(g).empty();
}

}  // namespace racg
