#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "racg/graph.hpp"

namespace racg {

/// Cyclic neighbour order around each vertex. Faces are traced with the rule
/// that dart a->b is followed by b->c where c comes right after a in the
/// rotation at b.
using RotationSystem = std::vector<std::vector<Vertex>>;
using Triangle = std::array<Vertex, 3>;

struct Region {
  std::vector<Vertex> walk;
  bool boundary_is_cycle = false;
  int boundary_len = 0;
};

/// Flag complex with a fixed embedding in the 2-sphere.
///
/// Faces are computed per connected component; an isolated vertex has a
/// single face whose walk is that vertex.
class PlanarComplex {
 public:
  PlanarComplex() = default;

  /// Validates the rotation system: neighbour permutations, Euler's formula
  /// per component, no 4-clique, every triangle bounding a face. Throws
  /// InvalidEmbedding or ContainsK4.
  static PlanarComplex from_embedding(SimplicialGraph g, RotationSystem rotation);

  const SimplicialGraph& base() const { return base_; }
  const RotationSystem& rotation() const { return rotation_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<std::vector<Vertex>>& faces() const { return faces_; }
  /// For each face, the triangle filling it or -1.
  const std::vector<int>& face_fill() const { return face_fill_; }
  const std::vector<Region>& regions() const { return regions_; }
  bool is_sphere() const { return regions_.empty(); }
  /// Short stable fingerprint of the rotation system.
  std::string embedding_id() const;

 private:
  SimplicialGraph base_;
  RotationSystem rotation_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<Vertex>> faces_;
  std::vector<int> face_fill_;
  std::vector<Region> regions_;
};

inline constexpr std::int64_t kDefaultSearchBudget = 4'000'000;

/// Throws EmptyGraph, ContainsK4, NotPlanar, TriangleNotFillable or
/// EmbeddingSearchExceeded.
PlanarComplex flag_planar_complex(const SimplicialGraph& g,
                                  std::int64_t budget = kDefaultSearchBudget);

/// All embeddings in which every triangle bounds a face, one per reflection
/// pair. Connected graphs only.
std::vector<PlanarComplex> enumerate_embeddings(const SimplicialGraph& g,
                                                std::int64_t budget = kDefaultSearchBudget);

std::vector<Triangle> triangles_of(const SimplicialGraph& g);
std::optional<std::array<Vertex, 4>> find_k4(const SimplicialGraph& g);

std::vector<Region> regions(const PlanarComplex& c);

/// Vertices of Δ - σ lying on each side of σ (components of the complement
/// not attached to σ are ignored).
std::array<VertexSet, 2> cycle_sides(const PlanarComplex& c, const FourCycle& sigma);

/// Throws NotInducedFourCycle.
bool bounds_region(const FourCycle& sigma, const PlanarComplex& c);
std::vector<FourCycle> strongly_separating_4cycles(const PlanarComplex& c);

bool is_prime(const PlanarComplex& c);
/// Throws NotPrime.
bool is_special_prime(const PlanarComplex& c);
/// Suspension of a 3-vertex triangle-free graph; no primality check.
bool is_special_shape(const SimplicialGraph& g);

/// Induced subcomplex on `s` with the inherited rotation system.
PlanarComplex subcomplex(const PlanarComplex& c, VertexSet s);

struct StrongVisualDecomposition {
  PlanarComplex first;
  PlanarComplex second;
  /// Vertex sets in the numbering of the decomposed complex.
  VertexSet first_vertices;
  VertexSet second_vertices;
};

/// The first piece holds the least vertex outside σ. Throws
/// NotInducedFourCycle or NotStronglySeparating.
StrongVisualDecomposition strong_visual_decomposition(const PlanarComplex& c,
                                                      const FourCycle& sigma);

/// Region walk as labels, rotated to start at its least label.
std::vector<std::string> walk_labels(const SimplicialGraph& g, const std::vector<Vertex>& walk);

struct EmbeddingSurvey {
  bool applicable = false;
  std::string reason;
  int embeddings = 0;
  bool strongly_separating_invariant = true;
};

/// Enumerates every embedding when the graph is connected, not 3-connected
/// and has at most `max_vertices` vertices.
EmbeddingSurvey survey_embeddings(const SimplicialGraph& g, int max_vertices = 14);

}  // namespace racg
