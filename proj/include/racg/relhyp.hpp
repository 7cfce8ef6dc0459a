#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/graph.hpp"
#include "racg/planar.hpp"

namespace racg {

enum class MemberTag { Square, Cfs, Other };
std::string to_string(MemberTag t);

/// Candidate peripheral subgraphs, each an induced subgraph given by its
/// vertex set. Members are kept in lex order.
struct PeripheralCollection {
  std::vector<VertexSet> members;
  std::vector<MemberTag> tags;
  bool minimality_certified = false;
};

struct CapraceViolation {
  /// 1: a square is in no member; 2: two members meet in a non-clique;
  /// 3: an outside vertex commutes with a non-adjacent pair of a member.
  int condition = 0;
  std::vector<VertexSet> witnesses;
  std::string detail;
};

/// Throws NotInducedMember for an empty member or one outside V(g).
std::vector<CapraceViolation> verify_caprace(const SimplicialGraph& g, const std::vector<VertexSet>& members);

MemberTag tag_member(const SimplicialGraph& g, VertexSet member);

/// Fixpoint of: merge members sharing a non-adjacent pair; add any vertex
/// adjacent to a non-adjacent pair of a member. Output in lex order.
std::vector<VertexSet> square_closure(const SimplicialGraph& g, std::vector<VertexSet> seeds);

/// Seeds the closure with every induced 4-cycle. nullopt when a member
/// engulfs the whole graph and is CFS (the group is thick). Throws
/// ClosureNotThick when some member is neither a square nor CFS.
std::optional<PeripheralCollection> minimal_peripheral_structure(const SimplicialGraph& g);

/// Unions of maximal subtrees of special prime pieces plus the squares of
/// the other pieces. nullopt when the special pieces cover the complex.
/// Throws StandingAssumptionsViolated or CapraceVerificationFailed.
std::optional<PeripheralCollection> planar_peripheral_structure(const PlanarComplex& c);

enum class DivergenceClass { Linear, Quadratic, Exponential, UnknownPolynomial };
std::string to_string(DivergenceClass d);

/// Throws HypothesisViolated unless g is connected, not complete and has no
/// separating clique.
DivergenceClass divergence_class(const SimplicialGraph& g, const PlanarComplex* planar_hint = nullptr);

}  // namespace racg
