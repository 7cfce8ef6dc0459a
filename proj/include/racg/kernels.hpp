#pragma once

#include <optional>
#include <vector>

#include "racg/graph.hpp"

/// Data-parallel scans. Each kernel has a serial reference and an OpenMP
/// version that must return identical results; the library calls the
/// parallel one.
namespace racg::kernels {

namespace serial {
std::vector<FourCycle> induced_4cycles(const SimplicialGraph& g);
std::vector<CompleteSubgraphSuspension> separating_suspensions(const SimplicialGraph& g);
/// Least subset (by mask value) of `pool` whose removal disconnects g.
std::optional<VertexSet> find_separating_subset(const SimplicialGraph& g, VertexSet pool);
}  // namespace serial

namespace parallel {
std::vector<FourCycle> induced_4cycles(const SimplicialGraph& g);
std::vector<CompleteSubgraphSuspension> separating_suspensions(const SimplicialGraph& g);
std::optional<VertexSet> find_separating_subset(const SimplicialGraph& g, VertexSet pool);
}  // namespace parallel

/// Number of threads OpenMP would use; 1 when built without it.
int max_threads();

}  // namespace racg::kernels
