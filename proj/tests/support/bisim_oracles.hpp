#pragma once

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "racg/bisim.hpp"

// Brute-force reference for bisimilarity: enumerate every colour-respecting
// partition, keep the weakly covered quotients, compare canonical forms.
namespace racg::testing {

TwoColoredGraph make_colored(const std::vector<NodeColor>& colors, const std::vector<std::pair<int, int>>& edges);

// Adjacency as a bit matrix, independent of TwoColoredGraph methods.
struct Small {
  int n = 0;
  std::vector<int> color;
  std::vector<std::vector<bool>> adj;
};

Small to_small(const TwoColoredGraph& g);
/// Least encoding over all vertex permutations.
std::string canon(const Small& s);
/// Canonical forms of every graph that `g` weakly covers (connected g).
std::set<std::string> covered_graphs(const Small& g);
bool oracle_bisimilar(const std::set<std::string>& a, const std::set<std::string>& b);
/// All trees on 1..max_n vertices up to isomorphism.
std::vector<std::vector<std::pair<int, int>>> all_trees(int max_n);
/// Every two-colouring of every tree from all_trees.
std::vector<TwoColoredGraph> colored_trees(int max_n);
/// Connected coloured graph on 2 to 6 vertices.
TwoColoredGraph random_connected_colored(std::mt19937_64& rng);

}  // namespace racg::testing
