#pragma once

#include <random>
#include <string>
#include <vector>

#include "racg/graph.hpp"
#include "racg/planar.hpp"

// Independent reference implementations used only by tests. They share no
// code with the library beyond SimplicialGraph itself.
namespace racg::testing {

SimplicialGraph load_fixture(const std::string& name);

/// Graph on labels v00, v01, ... with each edge present with probability p.
SimplicialGraph random_graph(int n, double p, std::mt19937_64& rng);
/// Arbitrary labels and edges given by index pairs.
SimplicialGraph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& edges);

/// Every 4-subset tried in all three cyclic orders.
std::vector<FourCycle> brute_force_4cycles(const SimplicialGraph& g);

/// Component count of g - removed by union-find over the edge list.
int uf_component_count(const SimplicialGraph& g, VertexSet removed);

/// Any subset of `pool` (non-empty, not all of V) whose removal disconnects g,
/// by plain enumeration.
bool some_subset_separates(const SimplicialGraph& g, VertexSet pool);

/// Brute-force clique separation check.
bool brute_separating_clique(const SimplicialGraph& g);

}  // namespace racg::testing

namespace racg::testing {

/// Tries every rotation system (feasible up to about 7 vertices) and reports
/// whether one is planar with every triangle bounding a face. Uses its own
/// face tracing.
bool brute_force_flag_embeddable(const SimplicialGraph& g);

/// Random 2-connected planar graph grown by face subdivision from a cycle:
/// new vertices join two or three corners of a face, chords split a face.
SimplicialGraph random_planar_graph(int n, std::mt19937_64& rng, double chord_rate = 0.3);

/// Connected graphs on up to `max_n` vertices, one per isomorphism class,
/// whose flag complex embeds in the sphere. Grown by adding a vertex to
/// smaller members (the class is closed under induced connected subgraphs
/// that keep a non-cut vertex).
std::vector<SimplicialGraph> flag_planar_corpus(int max_n);

/// Canonical adjacency string under relabelling (brute force within
/// invariant cells).
std::string canonical_form(const SimplicialGraph& g);

/// `count` random flag-planar complexes passing the standing assumptions,
/// with 7 to 14 vertices.
std::vector<PlanarComplex> random_standing_complexes(int count, std::uint64_t seed);

/// Every fixture that is flag-planar and passes the standing assumptions.
std::vector<PlanarComplex> standing_fixture_complexes();

}  // namespace racg::testing
