#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/boundary.hpp"
#include "racg/decomp_tree.hpp"
#include "racg/graph.hpp"
#include "racg/planar.hpp"
#include "racg/relhyp.hpp"
#include "racg/standing.hpp"

namespace racg {

enum class ManifoldType { A, B };
std::string to_string(ManifoldType t);

/// A iff the complex is the whole sphere or every region is bounded by a
/// 4-cycle. Throws StandingAssumptionsViolated.
ManifoldType type_AB(const PlanarComplex& c);

/// "A.1" to "A.4" or "B.1" to "B.3". Throws TypeUnassigned when the standing
/// assumptions fail.
std::string subtype(const PlanarComplex& c);

/// Outcome of one pipeline stage: a value, or the reason it was skipped.
template <class T>
struct Stage {
  std::optional<T> value;
  std::string skipped;

  bool ran() const { return value.has_value(); }
};

struct BoundaryFeatures {
  bool one_ended = false;
  Stage<std::vector<int>> cut_point_peripherals;
  Stage<CutPairVerdict> nonparabolic_cut_pair;
  Stage<bool> splits_over_2ended;
  Stage<bool> sierpinski_carpet;
};

/// Minimal peripheral structure, or thick when the closure engulfs a CFS
/// graph.
struct PeripheralSummary {
  bool thick = false;
  PeripheralCollection collection;
};

struct EmbeddingNote {
  std::string embedding_id;
  bool three_connected = false;
  /// Filled when the embedding check was requested.
  std::optional<EmbeddingSurvey> survey;
};

struct ClassificationReport {
  SimplicialGraph graph;
  std::optional<std::string> name;
  Stage<PlanarComplex> planar;
  StandingCheck standing;
  /// Both empty when excluded.
  std::optional<ManifoldType> type;
  std::optional<std::string> subtype;
  Stage<DivergenceClass> divergence;
  Stage<PeripheralSummary> peripheral;
  BoundaryFeatures boundary;
  Stage<VisualDecompositionTree> tree;
  Stage<bool> qi_raag;
  Stage<EmbeddingNote> embedding;
};

struct ReportOptions {
  /// Enumerate all embeddings of small, not 3-connected inputs.
  bool embedding_check = false;
};

/// Never throws on hypothesis failures; those are recorded per stage.
ClassificationReport full_report(const SimplicialGraph& g, const ReportOptions& options = {});

}  // namespace racg
