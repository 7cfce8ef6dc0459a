#include "racg/relhyp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "racg/decomp_tree.hpp"

namespace racg {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

// Some vertex pair of `s` is non-adjacent.
bool has_gap(const SimplicialGraph& g, VertexSet s) { return !is_clique(g, s); }

void sort_unique(std::vector<VertexSet>& v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

PeripheralCollection certify(const SimplicialGraph& g, std::vector<VertexSet> members, ErrorCode on_failure) {
  sort_unique(members);
  PeripheralCollection pc;
  for (VertexSet m : members) {
    MemberTag t = tag_member(g, m);
    if (t == MemberTag::Other) {
      throw Error(ErrorCode::ClosureNotThick, "member " + format_set(g, m) + " is neither a square nor CFS");
    }
    pc.members.push_back(m);
    pc.tags.push_back(t);
  }
  auto violations = verify_caprace(g, pc.members);
  if (!violations.empty()) {
    throw Error(on_failure, "condition (" + std::to_string(violations.front().condition) + "): " +
                                violations.front().detail);
  }
  pc.minimality_certified = true;
  return pc;
}

}  // namespace

std::string to_string(MemberTag t) {
  switch (t) {
    case MemberTag::Square: return "square";
    case MemberTag::Cfs: return "CFS";
    case MemberTag::Other: return "other";
  }
  return "other";
}

std::string to_string(DivergenceClass d) {
  switch (d) {
    case DivergenceClass::Linear: return "linear";
    case DivergenceClass::Quadratic: return "quadratic";
    case DivergenceClass::Exponential: return "exponential";
    case DivergenceClass::UnknownPolynomial: return "unknown_polynomial";
  }
  return "unknown_polynomial";
}

std::vector<CapraceViolation> verify_caprace(const SimplicialGraph& g, const std::vector<VertexSet>& members) {
  for (VertexSet m : members) {
    if (m.empty() || !m.subset_of(g.vertices())) {
      throw Error(ErrorCode::NotInducedMember, "member is empty or has vertices outside the graph");
    }
  }
  std::vector<CapraceViolation> out;
  for (const FourCycle& c : enumerate_induced_4cycles(g)) {
    VertexSet s = c.vertex_set();
    bool covered = std::any_of(members.begin(), members.end(), [&](VertexSet m) { return s.subset_of(m); });
    if (!covered) out.push_back({1, {s}, "induced 4-cycle " + format_cycle(g, c) + " lies in no member"});
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      VertexSet meet = members[i] & members[j];
      if (!meet.empty() && has_gap(g, meet)) {
        out.push_back({2, {members[i], members[j]},
                       format_set(g, members[i]) + " and " + format_set(g, members[j]) + " meet in " + format_set(g, meet)});
      }
    }
  }
  for (VertexSet m : members) {
    for (Vertex v : g.vertices() - m) {
      VertexSet seen = g.neighbors(v) & m;
      if (has_gap(g, seen)) {
        out.push_back({3, {m, VertexSet{v}},
                       g.label(v) + " commutes with a non-adjacent pair of " + format_set(g, m)});
      }
    }
  }
  return out;
}

MemberTag tag_member(const SimplicialGraph& g, VertexSet member) {
  if (member.size() == 4 && is_cycle(g, member)) return MemberTag::Square;
  if (is_cfs(induced_subgraph(g, member))) return MemberTag::Cfs;
  return MemberTag::Other;
}

std::vector<VertexSet> square_closure(const SimplicialGraph& g, std::vector<VertexSet> members) {
  sort_unique(members);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < members.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (has_gap(g, members[i] & members[j])) {
          members[i] |= members[j];
          members.erase(members.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
          break;
        }
      }
    }
    for (VertexSet& m : members) {
      for (Vertex v : g.vertices() - m) {
        if (has_gap(g, g.neighbors(v) & m)) {
          m.insert(v);
          changed = true;
        }
      }
    }
    sort_unique(members);
  }
  return members;
}

std::optional<PeripheralCollection> minimal_peripheral_structure(const SimplicialGraph& g) {
  std::vector<VertexSet> seeds;
  for (const FourCycle& c : enumerate_induced_4cycles(g)) seeds.push_back(c.vertex_set());
  auto members = square_closure(g, seeds);
  if (members.size() == 1 && members.front() == g.vertices()) {
    if (tag_member(g, members.front()) == MemberTag::Other) {
      throw Error(ErrorCode::ClosureNotThick, "closure engulfs the graph, which is not CFS");
    }
    return std::nullopt;
  }
  return certify(g, members, ErrorCode::InternalInvariant);
}

std::optional<PeripheralCollection> planar_peripheral_structure(const PlanarComplex& c) {
  const SimplicialGraph& g = c.base();
  PrimeTree t = prime_decomposition_tree(c);
  std::size_t n = t.nodes.size();
  std::vector<bool> special(n);
  for (std::size_t i = 0; i < n; ++i) special[i] = is_special_shape(t.nodes[i].base());

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[uz(x)] == x ? x : parent[uz(x)] = find(parent[uz(x)]); };
  for (const auto& e : t.edges) {
    if (special[uz(e.a)] && special[uz(e.b)]) parent[uz(find(e.b))] = find(e.a);
  }
  std::vector<VertexSet> unions(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (special[i]) unions[uz(find(static_cast<int>(i)))] |= t.node_vertices[i];
  }
  std::vector<VertexSet> members;
  for (VertexSet u : unions) {
    if (u.empty()) continue;
    if (u == g.vertices()) return std::nullopt;
    members.push_back(u);
  }
  std::vector<VertexSet> special_unions = members;
  for (std::size_t i = 0; i < n; ++i) {
    if (special[i]) continue;
    for (const FourCycle& s : enumerate_induced_4cycles(t.nodes[i].base())) {
      VertexSet lifted = lift(s.vertex_set(), t.node_vertices[i]);
      bool absorbed = std::any_of(special_unions.begin(), special_unions.end(),
                                  [&](VertexSet u) { return lifted.subset_of(u); });
      if (!absorbed) members.push_back(lifted);
    }
  }
  try {
    return certify(g, members, ErrorCode::CapraceVerificationFailed);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ClosureNotThick) throw Error(ErrorCode::CapraceVerificationFailed, e.what());
    throw;
  }
}

DivergenceClass divergence_class(const SimplicialGraph& g, const PlanarComplex* planar_hint) {
  try {
    if (has_separating_clique(g)) throw Error(ErrorCode::HypothesisViolated, "graph has a separating clique");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Disconnected || e.code() == ErrorCode::CompleteGraph || e.code() == ErrorCode::EmptyGraph) {
      throw Error(ErrorCode::HypothesisViolated, e.what());
    }
    throw;
  }
  if (is_join_of_two_diam_ge2(g)) return DivergenceClass::Linear;
  if (is_cfs(g)) return DivergenceClass::Quadratic;
  try {
    if (minimal_peripheral_structure(g)) return DivergenceClass::Exponential;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClosureNotThick) throw;
  }
  if (planar_hint != nullptr) {
    try {
      if (planar_peripheral_structure(*planar_hint)) return DivergenceClass::Exponential;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapraceVerificationFailed && e.code() != ErrorCode::StandingAssumptionsViolated) throw;
    }
  }
  return DivergenceClass::UnknownPolynomial;
}

}  // namespace racg
