#include "racg/decomp_tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "racg/standing.hpp"

namespace racg {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

struct Leaf {
  PlanarComplex complex;
  VertexSet host;
};

FourCycle lift_cycle(const FourCycle& c, VertexSet host) {
  return FourCycle::canonical(lift(c.v[0], host), lift(c.v[1], host), lift(c.v[2], host), lift(c.v[3], host));
}

FourCycle restrict_cycle(const FourCycle& c, VertexSet host) {
  return FourCycle::canonical(restrict_to(host, c.v[0]), restrict_to(host, c.v[1]), restrict_to(host, c.v[2]),
                              restrict_to(host, c.v[3]));
}

// The leaf in [lo, hi) in which `sigma` bounds a region.
int attach_leaf(const std::vector<Leaf>& leaves, std::size_t lo, std::size_t hi, const FourCycle& sigma,
                const SimplicialGraph& g) {
  int found = -1;
  for (std::size_t i = lo; i < hi; ++i) {
    if (!sigma.vertex_set().subset_of(leaves[i].host)) continue;
    if (!bounds_region(restrict_cycle(sigma, leaves[i].host), leaves[i].complex)) continue;
    if (found >= 0) {
      throw Error(ErrorCode::InternalInvariant, format_cycle(g, sigma) + " bounds a region in two pieces");
    }
    found = static_cast<int>(i);
  }
  if (found < 0) throw Error(ErrorCode::InternalInvariant, format_cycle(g, sigma) + " lost during splitting");
  return found;
}

void split(const PlanarComplex& piece, VertexSet host, SplitOrder order, const SimplicialGraph& g,
           std::vector<Leaf>& leaves, std::vector<TreeEdge>& edges) {
  auto ss = strongly_separating_4cycles(piece);
  if (ss.empty()) {
    leaves.push_back({piece, host});
    return;
  }
  const FourCycle& local = order == SplitOrder::LeastFirst ? ss.front() : ss.back();
  auto d = strong_visual_decomposition(piece, local);
  std::size_t first_lo = leaves.size();
  split(d.first, lift(d.first_vertices, host), order, g, leaves, edges);
  std::size_t second_lo = leaves.size();
  split(d.second, lift(d.second_vertices, host), order, g, leaves, edges);
  FourCycle sigma = lift_cycle(local, host);
  int a = attach_leaf(leaves, first_lo, second_lo, sigma, g);
  int b = attach_leaf(leaves, second_lo, leaves.size(), sigma, g);
  edges.push_back({a, b, sigma});
}

Edge lift_edge(Edge e, VertexSet host) { return {lift(e.first, host), lift(e.second, host)}; }

}  // namespace

int PrimeTree::degree(int node) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [&](const TreeEdge& e) { return e.a == node || e.b == node; }));
}

PrimeTree prime_decomposition_tree(const PlanarComplex& c, SplitOrder order) {
  require_standing_assumptions(c.base());
  std::vector<Leaf> leaves;
  std::vector<TreeEdge> raw;
  split(c, c.base().vertices(), order, c.base(), leaves, raw);

  std::vector<int> perm(leaves.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) { return lex_less(leaves[uz(x)].host, leaves[uz(y)].host); });
  std::vector<int> where(leaves.size());
  PrimeTree t;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    where[uz(perm[i])] = static_cast<int>(i);
    const Leaf& leaf = leaves[uz(perm[i])];
    if (!is_prime(leaf.complex)) {
      throw Error(ErrorCode::InternalInvariant, "piece " + format_set(c.base(), leaf.host) + " is not prime");
    }
    t.nodes.push_back(leaf.complex);
    t.node_vertices.push_back(leaf.host);
  }
  for (TreeEdge e : raw) {
    e.a = where[uz(e.a)];
    e.b = where[uz(e.b)];
    if (e.a > e.b) std::swap(e.a, e.b);
    t.edges.push_back(e);
  }
  std::sort(t.edges.begin(), t.edges.end(),
            [](const TreeEdge& x, const TreeEdge& y) { return std::tie(x.a, x.b, x.cycle) < std::tie(y.a, y.b, y.cycle); });
  return t;
}

std::vector<EdgeColor> color_tree_edges(const PrimeTree& t) {
  std::vector<std::vector<Edge>> poles;
  std::vector<bool> p3;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const SimplicialGraph& g = t.nodes[i].base();
    if (!is_special_shape(g)) {
      throw Error(ErrorCode::NonSpecialVertexComplex,
                  "piece " + format_set(g, g.vertices()) + " is not a special prime");
    }
    std::vector<Edge> lifted;
    bool path = false;
    for (const auto& s : all_suspension_forms(g)) {
      if (s.base.size() != 3 || is_clique(g, s.base)) continue;
      lifted.push_back(lift_edge(s.poles, t.node_vertices[i]));
      path = path || is_path_of_length2(g, s.base);
    }
    poles.push_back(std::move(lifted));
    p3.push_back(path);
  }
  std::vector<EdgeColor> out;
  for (const auto& e : t.edges) {
    bool red = p3[uz(e.a)] || p3[uz(e.b)] || poles[uz(e.a)].front() == poles[uz(e.b)].front();
    out.push_back(red ? EdgeColor::Red : EdgeColor::Blue);
  }
  return out;
}

std::string to_string(NodeColor c) { return c == NodeColor::Black ? "black" : "white"; }

VisualDecompositionTree visual_decomposition_tree(const PlanarComplex& c, SplitOrder order) {
  const SimplicialGraph& g = c.base();
  require_standing_assumptions(g);
  if (is_join(g)) throw Error(ErrorCode::IsJoin, "1-skeleton is a join");
  if (!is_cfs(g)) throw Error(ErrorCode::NotCFS, "1-skeleton is not CFS");
  PrimeTree t = prime_decomposition_tree(c, order);
  auto colors = color_tree_edges(t);

  std::vector<int> parent(t.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[uz(x)] == x ? x : parent[uz(x)] = find(parent[uz(x)]); };
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (colors[i] == EdgeColor::Red) parent[uz(find(t.edges[i].b))] = find(t.edges[i].a);
  }
  std::vector<int> index(t.nodes.size(), -1);
  VisualDecompositionTree out;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    int r = find(static_cast<int>(i));
    if (index[uz(r)] < 0) {
      index[uz(r)] = static_cast<int>(out.nodes.size());
      out.nodes.emplace_back();
    }
    VisualNode& n = out.nodes[uz(index[uz(r)])];
    n.absorbed.push_back(static_cast<int>(i));
    n.vertices |= t.node_vertices[i];
  }
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (colors[i] == EdgeColor::Red) continue;
    TreeEdge e = t.edges[i];
    e.a = index[uz(find(e.a))];
    e.b = index[uz(find(e.b))];
    if (e.a > e.b) std::swap(e.a, e.b);
    out.edges.push_back(e);
  }
  for (std::size_t i = 0; i < out.nodes.size(); ++i) {
    VisualNode& n = out.nodes[i];
    n.complex = subcomplex(c, n.vertices);
    const SimplicialGraph& h = n.complex.base();
    bool found = false;
    for (const auto& s : all_suspension_forms(h)) {
      if (!is_broken_line(h, s.base) || is_path_of_length2(h, s.base)) continue;
      n.poles = lift_edge(s.poles, n.vertices);
      n.line = lift(s.base, n.vertices);
      found = true;
      break;
    }
    if (!found) {
      throw Error(ErrorCode::InternalInvariant,
                  "piece " + format_set(g, n.vertices) + " is not the suspension of a broken line");
    }
    for (const FourCycle& s : enumerate_induced_4cycles(h)) {
      if (bounds_region(s, n.complex)) ++n.weight;
    }
    for (const auto& e : out.edges) {
      if (e.a == static_cast<int>(i) || e.b == static_cast<int>(i)) ++n.degree;
    }
    n.color = n.weight > n.degree ? NodeColor::Black : NodeColor::White;
  }
  return out;
}

bool same_tree(const VisualDecompositionTree& x, const VisualDecompositionTree& y) {
  if (x.nodes.size() != y.nodes.size() || x.edges.size() != y.edges.size()) return false;
  // Node order follows the prime tree, so compare after sorting by vertex set.
  auto order = [](const VisualDecompositionTree& t) {
    std::vector<int> idx(t.nodes.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return lex_less(t.nodes[uz(a)].vertices, t.nodes[uz(b)].vertices); });
    return idx;
  };
  auto ix = order(x), iy = order(y);
  std::vector<int> rank_x(ix.size()), rank_y(iy.size());
  for (std::size_t i = 0; i < ix.size(); ++i) {
    const auto& a = x.nodes[uz(ix[i])];
    const auto& b = y.nodes[uz(iy[i])];
    if (a.vertices != b.vertices || a.poles != b.poles || a.weight != b.weight || a.color != b.color) return false;
    rank_x[uz(ix[i])] = static_cast<int>(i);
    rank_y[uz(iy[i])] = static_cast<int>(i);
  }
  auto edge_keys = [](const VisualDecompositionTree& t, const std::vector<int>& rank) {
    std::vector<std::tuple<int, int, FourCycle>> out;
    for (const auto& e : t.edges) {
      int a = rank[uz(e.a)], b = rank[uz(e.b)];
      out.emplace_back(std::min(a, b), std::max(a, b), e.cycle);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return edge_keys(x, rank_x) == edge_keys(y, rank_y);
}

std::string node_label(const SimplicialGraph& g, const VisualNode& n) {
  return "v:" + format_set(g, n.vertices) + "|w=" + std::to_string(n.weight) + "|deg=" + std::to_string(n.degree) +
         "|" + to_string(n.color);
}

}  // namespace racg
