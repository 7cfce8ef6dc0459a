#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "racg/error.hpp"
#include "racg/vertex_set.hpp"

namespace racg {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple graph with unique string labels. Vertices are numbered in
/// lexicographic label order at construction, so two graphs built from the
/// same labels and edges compare equal regardless of input order.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Throws DuplicateVertex, UnknownEndpoint, SelfLoop or TooManyVertices.
  static SimplicialGraph build(std::vector<std::string> labels,
                               const std::vector<std::pair<std::string, std::string>>& edges);

  /// Internal constructor: `labels` must already be sorted and unique and
  /// `adjacency` symmetric and irreflexive.
  static SimplicialGraph from_adjacency(std::vector<std::string> labels,
                                        std::vector<VertexSet> adjacency);

  int order() const { return static_cast<int>(labels_.size()); }
  int edge_count() const;
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::optional<Vertex> find(std::string_view label) const;
  /// Throws UnknownVertex.
  Vertex at(std::string_view label) const;
  /// Throws UnknownVertex.
  VertexSet set_of(std::initializer_list<std::string_view> labels) const;
  VertexSet set_of(const std::vector<std::string>& labels) const;

  VertexSet vertices() const { return VertexSet::first_n(order()); }
  VertexSet neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  std::vector<Edge> edges() const;

  bool operator==(const SimplicialGraph&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> adjacency_;
};

/// Induced 4-cycle, stored in canonical rotation: starts at its least vertex
/// and continues towards the lesser of that vertex's two cycle neighbours.
struct FourCycle {
  std::array<Vertex, 4> v{};

  /// Canonicalises an arbitrary cyclic listing.
  static FourCycle canonical(Vertex a, Vertex b, Vertex c, Vertex d);
  VertexSet vertex_set() const { return VertexSet{v[0], v[1], v[2], v[3]}; }
  /// The two non-adjacent (opposite) pairs.
  std::array<Edge, 2> diagonals() const { return {Edge{v[0], v[2]}, Edge{v[1], v[3]}}; }

  auto operator<=>(const FourCycle&) const = default;
};

/// Γ⁴: vertices are the induced 4-cycles of a graph, adjacent when they share
/// two vertices that are non-adjacent in the base graph.
struct SquareGraph {
  std::vector<FourCycle> cycles;
  std::vector<std::vector<int>> adjacency;

  std::vector<std::vector<int>> components() const;
};

struct Suspension {
  Edge poles;
  VertexSet base;
};

struct CompleteSubgraphSuspension {
  Edge poles;
  VertexSet clique;
  VertexSet vertex_set() const { return clique | VertexSet{poles.first, poles.second}; }
  bool operator==(const CompleteSubgraphSuspension&) const = default;
};

SimplicialGraph build_graph(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& edges);

/// Labels keep their relative order, so vertex i of the result is the i-th
/// member of `s`.
SimplicialGraph induced_subgraph(const SimplicialGraph& g, VertexSet s);
/// Maps a vertex set of induced_subgraph(g, host) back to the numbering of g.
VertexSet lift(VertexSet local, VertexSet host);
Vertex lift(Vertex local, VertexSet host);
/// Maps a subset of `host` to the numbering of induced_subgraph(g, host).
VertexSet restrict_to(VertexSet host, VertexSet subset);
Vertex restrict_to(VertexSet host, Vertex v);

/// Connected components of g[within], each as a vertex set, ordered by least
/// vertex.
std::vector<VertexSet> components(const SimplicialGraph& g, VertexSet within);
std::vector<VertexSet> components(const SimplicialGraph& g);
bool is_connected(const SimplicialGraph& g);
bool is_connected(const SimplicialGraph& g, VertexSet within);
bool is_clique(const SimplicialGraph& g, VertexSet s);
bool is_complete(const SimplicialGraph& g);

/// True iff g - s has at least two components. Throws SIsWholeGraph when s
/// covers every vertex and UnknownVertex when s is not a subset of V(g).
bool separates(const SimplicialGraph& g, VertexSet s);

/// Every clique (including the empty one) contained in `within`, in
/// lexicographic order.
std::vector<VertexSet> cliques(const SimplicialGraph& g, VertexSet within);

/// Throws Disconnected or CompleteGraph.
bool has_separating_clique(const SimplicialGraph& g);

std::vector<FourCycle> enumerate_induced_4cycles(const SimplicialGraph& g);
bool has_induced_4cycle(const SimplicialGraph& g);
bool is_induced_4cycle(const SimplicialGraph& g, const FourCycle& c);
SquareGraph square_graph(const SimplicialGraph& g);

/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const SimplicialGraph& g);
bool is_cfs(const SimplicialGraph& g);

/// Complement-graph components of g (the unique maximal join decomposition),
/// as vertex sets of g.
std::vector<VertexSet> join_factor_sets(const SimplicialGraph& g);
std::vector<SimplicialGraph> join_factors(const SimplicialGraph& g);
bool is_join(const SimplicialGraph& g);
/// Disconnected groups count as infinite diameter and therefore qualify.
bool is_join_of_two_diam_ge2(const SimplicialGraph& g);

/// Lexicographically least pole pair; the base is non-empty.
std::optional<Suspension> suspension_form(const SimplicialGraph& g);
std::vector<Suspension> all_suspension_forms(const SimplicialGraph& g);

/// Throws EmptyGraph.
bool is_broken_line(const SimplicialGraph& g);
/// g[s] is a disjoint union of points and paths (s non-empty).
bool is_broken_line(const SimplicialGraph& g, VertexSet s);
/// g[s] is a single cycle through all of s.
bool is_cycle(const SimplicialGraph& g, VertexSet s);
/// g[s] is a path on exactly three vertices.
bool is_path_of_length2(const SimplicialGraph& g, VertexSet s);

/// Throws Disconnected.
std::vector<Edge> cut_pairs(const SimplicialGraph& g);
/// Induced paths (a, m, b) with a < b non-adjacent; throws Disconnected.
std::vector<std::array<Vertex, 3>> separating_induced_paths_len2(const SimplicialGraph& g);
/// Throws Disconnected.
std::vector<CompleteSubgraphSuspension> separating_complete_subgraph_suspensions(
    const SimplicialGraph& g);

/// Induced 4-cycles whose vertex set separates g.
std::vector<FourCycle> separating_induced_4cycles(const SimplicialGraph& g);

bool is_three_connected(const SimplicialGraph& g);

std::string format_set(const SimplicialGraph& g, VertexSet s);
std::string format_cycle(const SimplicialGraph& g, const FourCycle& c);

}  // namespace racg
