#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/decomp_tree.hpp"
#include "racg/io.hpp"

namespace racg {

/// Vertex-coloured graph in which loops are allowed. Adjacency lists are
/// sorted and symmetric; a loop at v lists v among its own neighbours.
struct TwoColoredGraph {
  std::vector<std::string> labels;
  std::vector<NodeColor> colors;
  std::vector<std::vector<int>> adjacency;

  int order() const { return static_cast<int>(labels.size()); }
  int add_vertex(std::string label, NodeColor color);
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  int edge_count() const;

  bool operator==(const TwoColoredGraph&) const = default;
};

TwoColoredGraph colored_tree(const SimplicialGraph& g, const VisualDecompositionTree& t);
/// Needs a colour for every vertex ("black" or "white"); throws ParseError
/// otherwise.
TwoColoredGraph colored_graph(const io::InputDocument& doc);

/// `f[v]` is the image of v, -1 where undefined (throws PartialMap).
bool is_weak_covering(const std::vector<int>& f, const TwoColoredGraph& g, const TwoColoredGraph& h);

/// Coarsest partition refining the colouring in which block-mates see the
/// same set of neighbouring blocks. Blocks are numbered by least member.
std::vector<int> bisimulation_blocks(const TwoColoredGraph& g);
/// Quotient by bisimulation_blocks; each block is labelled by its least
/// member. Throws InternalInvariant if the projection is not a weak covering.
TwoColoredGraph minimal_quotient(const TwoColoredGraph& g);

/// Colour-preserving isomorphism by backtracking; loops must match too.
std::optional<std::vector<int>> find_isomorphism(const TwoColoredGraph& g, const TwoColoredGraph& h);
bool bisimilar(const TwoColoredGraph& g, const TwoColoredGraph& h);

/// Throws HypothesisViolated naming the input and the failed condition.
bool qi_equivalent_A2(const PlanarComplex& a, const PlanarComplex& b);
bool qi_to_raag(const PlanarComplex& c);

}  // namespace racg
