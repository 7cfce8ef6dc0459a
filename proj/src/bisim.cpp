#include "racg/bisim.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

namespace racg {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

VisualDecompositionTree tree_or_hypothesis(const PlanarComplex& c, const std::string& which) {
  try {
    return visual_decomposition_tree(c);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::StandingAssumptionsViolated || e.code() == ErrorCode::IsJoin ||
        e.code() == ErrorCode::NotCFS) {
      throw Error(ErrorCode::HypothesisViolated, which + ": " + e.what());
    }
    throw;
  }
}

}  // namespace

int TwoColoredGraph::add_vertex(std::string label, NodeColor color) {
  labels.push_back(std::move(label));
  colors.push_back(color);
  adjacency.emplace_back();
  return order() - 1;
}

void TwoColoredGraph::add_edge(int a, int b) {
  auto put = [](std::vector<int>& row, int x) {
    auto it = std::lower_bound(row.begin(), row.end(), x);
    if (it == row.end() || *it != x) row.insert(it, x);
  };
  put(adjacency[uz(a)], b);
  put(adjacency[uz(b)], a);
}

bool TwoColoredGraph::has_edge(int a, int b) const {
  const auto& row = adjacency[uz(a)];
  return std::binary_search(row.begin(), row.end(), b);
}

int TwoColoredGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order(); ++v) {
    for (int w : adjacency[uz(v)]) twice += w == v ? 2 : 1;
  }
  return twice / 2;
}

TwoColoredGraph colored_tree(const SimplicialGraph& g, const VisualDecompositionTree& t) {
  TwoColoredGraph out;
  for (const auto& n : t.nodes) out.add_vertex(node_label(g, n), n.color);
  for (const auto& e : t.edges) out.add_edge(e.a, e.b);
  return out;
}

TwoColoredGraph colored_graph(const io::InputDocument& doc) {
  SimplicialGraph g = io::to_graph(doc);
  TwoColoredGraph out;
  for (const auto& label : g.labels()) {
    auto it = doc.colors.find(label);
    if (it == doc.colors.end() || (it->second != "black" && it->second != "white")) {
      throw ParseError(1, 1, "colour black or white for vertex " + label);
    }
    out.add_vertex(label, it->second == "black" ? NodeColor::Black : NodeColor::White);
  }
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  return out;
}

bool is_weak_covering(const std::vector<int>& f, const TwoColoredGraph& g, const TwoColoredGraph& h) {
  if (static_cast<int>(f.size()) != g.order()) throw Error(ErrorCode::PartialMap, "map size differs from vertex count");
  for (int v = 0; v < g.order(); ++v) {
    if (f[uz(v)] < 0 || f[uz(v)] >= h.order()) {
      throw Error(ErrorCode::PartialMap, "no image for " + g.labels[uz(v)]);
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    int fv = f[uz(v)];
    if (g.colors[uz(v)] != h.colors[uz(fv)]) return false;
    for (int w : g.adjacency[uz(v)]) {
      if (!h.has_edge(fv, f[uz(w)])) return false;
    }
    for (int target : h.adjacency[uz(fv)]) {
      bool lifted = std::any_of(g.adjacency[uz(v)].begin(), g.adjacency[uz(v)].end(),
                                [&](int w) { return f[uz(w)] == target; });
      if (!lifted) return false;
    }
  }
  return true;
}

std::vector<int> bisimulation_blocks(const TwoColoredGraph& g) {
  std::vector<int> block(uz(g.order()));
  auto renumber = [&](const auto& key_of) {
    std::map<decltype(key_of(0)), int> ids;
    std::vector<int> next(block.size());
    for (int v = 0; v < g.order(); ++v) {
      auto [it, fresh] = ids.try_emplace(key_of(v), static_cast<int>(ids.size()));
      next[uz(v)] = it->second;
    }
    return std::make_pair(next, static_cast<int>(ids.size()));
  };
  auto [first, count] = renumber([&](int v) { return static_cast<int>(g.colors[uz(v)]); });
  block = first;
  while (true) {
    auto [next, n] = renumber([&](int v) {
      std::vector<int> seen;
      for (int w : g.adjacency[uz(v)]) seen.push_back(block[uz(w)]);
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      return std::make_pair(block[uz(v)], seen);
    });
    block = next;
    if (n == count) break;
    count = n;
  }
  return block;
}

TwoColoredGraph minimal_quotient(const TwoColoredGraph& g) {
  std::vector<int> block = bisimulation_blocks(g);
  TwoColoredGraph q;
  std::vector<int> rep;
  for (int v = 0; v < g.order(); ++v) {
    if (block[uz(v)] == static_cast<int>(rep.size())) {
      rep.push_back(v);
      q.add_vertex(g.labels[uz(v)], g.colors[uz(v)]);
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.adjacency[uz(v)]) q.add_edge(block[uz(v)], block[uz(w)]);
  }
  if (!is_weak_covering(block, g, q)) {
    throw Error(ErrorCode::InternalInvariant, "quotient projection is not a weak covering");
  }
  return q;
}

std::optional<std::vector<int>> find_isomorphism(const TwoColoredGraph& g, const TwoColoredGraph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  int n = g.order();
  auto profile = [](const TwoColoredGraph& x, int v) {
    return std::make_tuple(x.colors[uz(v)], x.adjacency[uz(v)].size(), x.has_edge(v, v));
  };
  std::vector<int> map(uz(n), -1);
  std::vector<bool> used(uz(n), false);
  std::function<bool(int)> extend = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[uz(w)] || profile(g, v) != profile(h, w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == h.has_edge(map[uz(u)], w);
      if (!ok) continue;
      map[uz(v)] = w;
      used[uz(w)] = true;
      if (extend(v + 1)) return true;
      used[uz(w)] = false;
    }
    map[uz(v)] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool bisimilar(const TwoColoredGraph& g, const TwoColoredGraph& h) {
  return find_isomorphism(minimal_quotient(g), minimal_quotient(h)).has_value();
}

bool qi_equivalent_A2(const PlanarComplex& a, const PlanarComplex& b) {
  auto ta = tree_or_hypothesis(a, "first input");
  auto tb = tree_or_hypothesis(b, "second input");
  return bisimilar(colored_tree(a.base(), ta), colored_tree(b.base(), tb));
}

bool qi_to_raag(const PlanarComplex& c) {
  auto t = tree_or_hypothesis(c, "input");
  return std::all_of(t.nodes.begin(), t.nodes.end(), [](const VisualNode& n) { return n.color == NodeColor::Black; });
}

}  // namespace racg
