#pragma once

#include <string>
#include <vector>

#include "racg/graph.hpp"
#include "racg/planar.hpp"

namespace racg {

/// Tree edge between node indices, labelled by the shared 4-cycle in the
/// numbering of the decomposed complex.
struct TreeEdge {
  int a = 0;
  int b = 0;
  FourCycle cycle;
};

/// Prime pieces of a complex glued along strongly separating 4-cycles.
struct PrimeTree {
  /// Node complexes with inherited embeddings; node_vertices[i] gives their
  /// vertices in the numbering of the decomposed complex.
  std::vector<PlanarComplex> nodes;
  std::vector<VertexSet> node_vertices;
  std::vector<TreeEdge> edges;

  int degree(int node) const;
};

enum class SplitOrder { LeastFirst, GreatestFirst };

/// Splits recursively along strongly separating 4-cycles, least cycle first
/// by default. Nodes are sorted by vertex set. Throws
/// StandingAssumptionsViolated.
PrimeTree prime_decomposition_tree(const PlanarComplex& c, SplitOrder order = SplitOrder::LeastFirst);

enum class EdgeColor { Red, Blue };

/// Throws NonSpecialVertexComplex.
std::vector<EdgeColor> color_tree_edges(const PrimeTree& t);

enum class NodeColor { Black, White };
std::string to_string(NodeColor c);

struct VisualNode {
  PlanarComplex complex;
  VertexSet vertices;
  Edge poles;
  /// The broken line suspended by the poles.
  VertexSet line;
  int weight = 0;
  int degree = 0;
  NodeColor color = NodeColor::White;
  /// Prime tree nodes merged into this one.
  std::vector<int> absorbed;
};

struct VisualDecompositionTree {
  std::vector<VisualNode> nodes;
  std::vector<TreeEdge> edges;
};

/// Collapses red components of the prime tree, then weighs and colours.
/// Throws StandingAssumptionsViolated, IsJoin or NotCFS.
VisualDecompositionTree visual_decomposition_tree(const PlanarComplex& c,
                                                  SplitOrder order = SplitOrder::LeastFirst);

/// Same node vertex sets, poles, weights, colours and edges.
bool same_tree(const VisualDecompositionTree& x, const VisualDecompositionTree& y);

/// Node label in the form "v:{a,b}|w=3|deg=1|black".
std::string node_label(const SimplicialGraph& g, const VisualNode& n);

}  // namespace racg
