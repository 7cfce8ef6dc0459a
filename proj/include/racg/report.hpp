#pragma once

#include <string>

#include <json.hpp>

#include "racg/bisim.hpp"
#include "racg/classify.hpp"

namespace racg::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Vertex set as a sorted label list.
Json labels_json(const SimplicialGraph& g, VertexSet s);

Json peripheral_json(const SimplicialGraph& g, const Stage<PeripheralSummary>& p);
Json features_json(const SimplicialGraph& g, const BoundaryFeatures& b,
                   const Stage<PeripheralSummary>& p);
Json tree_json(const SimplicialGraph& g, const VisualDecompositionTree& t);
Json quotient_json(const TwoColoredGraph& q);
Json report_json(const ClassificationReport& r);

std::string report_text(const ClassificationReport& r);

/// Undirected DOT; nodes carry their label and colour.
std::string tree_dot(const SimplicialGraph& g, const VisualDecompositionTree& t);
std::string quotient_dot(const TwoColoredGraph& q);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace racg::report
