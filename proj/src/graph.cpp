#include "racg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "racg/kernels.hpp"

namespace racg {

SimplicialGraph SimplicialGraph::build(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::sort(labels.begin(), labels.end());
  if (auto it = std::adjacent_find(labels.begin(), labels.end()); it != labels.end()) {
    throw Error(ErrorCode::DuplicateVertex, "vertex '" + *it + "' declared twice");
  }
  if (static_cast<int>(labels.size()) > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices,
                std::to_string(labels.size()) + " vertices, limit is " +
                    std::to_string(kMaxVertices));
  }
  SimplicialGraph g;
  g.labels_ = std::move(labels);
  g.adjacency_.assign(g.labels_.size(), VertexSet{});
  for (const auto& [a, b] : edges) {
    auto u = g.find(a);
    auto v = g.find(b);
    if (!u) throw Error(ErrorCode::UnknownEndpoint, "edge endpoint '" + a + "' is not a vertex");
    if (!v) throw Error(ErrorCode::UnknownEndpoint, "edge endpoint '" + b + "' is not a vertex");
    if (*u == *v) throw Error(ErrorCode::SelfLoop, "edge (" + a + "," + a + ")");
    g.adjacency_[static_cast<std::size_t>(*u)].insert(*v);
    g.adjacency_[static_cast<std::size_t>(*v)].insert(*u);
  }
  return g;
}

SimplicialGraph SimplicialGraph::from_adjacency(std::vector<std::string> labels,
                                                std::vector<VertexSet> adjacency) {
  SimplicialGraph g;
  g.labels_ = std::move(labels);
  g.adjacency_ = std::move(adjacency);
  return g;
}

int SimplicialGraph::edge_count() const {
  int twice = 0;
  for (VertexSet n : adjacency_) twice += n.size();
  return twice / 2;
}

std::optional<Vertex> SimplicialGraph::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Vertex SimplicialGraph::at(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(label) + "'");
}

VertexSet SimplicialGraph::set_of(std::initializer_list<std::string_view> labels) const {
  VertexSet s;
  for (auto l : labels) s.insert(at(l));
  return s;
}

VertexSet SimplicialGraph::set_of(const std::vector<std::string>& labels) const {
  VertexSet s;
  for (const auto& l : labels) s.insert(at(l));
  return s;
}

std::vector<Edge> SimplicialGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

FourCycle FourCycle::canonical(Vertex a, Vertex b, Vertex c, Vertex d) {
  std::array<Vertex, 4> in{a, b, c, d};
  int m = static_cast<int>(std::min_element(in.begin(), in.end()) - in.begin());
  Vertex next = in[static_cast<std::size_t>((m + 1) % 4)];
  Vertex prev = in[static_cast<std::size_t>((m + 3) % 4)];
  int step = next < prev ? 1 : 3;
  FourCycle c4;
  for (int i = 0; i < 4; ++i) c4.v[static_cast<std::size_t>(i)] = in[static_cast<std::size_t>((m + step * i) % 4)];
  return c4;
}

std::vector<std::vector<int>> SquareGraph::components() const {
  std::vector<int> comp(cycles.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < cycles.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{static_cast<int>(s)};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int t : adjacency[static_cast<std::size_t>(members[i])]) {
        if (comp[static_cast<std::size_t>(t)] < 0) {
          comp[static_cast<std::size_t>(t)] = comp[s];
          members.push_back(t);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

SimplicialGraph build_graph(std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
  return SimplicialGraph::build(std::move(labels), edges);
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw Error(ErrorCode::UnknownVertex, "subset is not contained in the vertex set");
  }
  std::vector<std::string> labels;
  std::vector<VertexSet> adj;
  for (Vertex v : s) {
    labels.push_back(g.label(v));
    adj.push_back(restrict_to(s, g.neighbors(v) & s));
  }
  return SimplicialGraph::from_adjacency(std::move(labels), std::move(adj));
}

VertexSet lift(VertexSet local, VertexSet host) {
  VertexSet out;
  int i = 0;
  for (Vertex v : host) {
    if (local.contains(i)) out.insert(v);
    ++i;
  }
  return out;
}

Vertex lift(Vertex local, VertexSet host) {
  int i = 0;
  for (Vertex v : host) {
    if (i++ == local) return v;
  }
  throw Error(ErrorCode::InternalInvariant, "lift: index outside host set");
}

VertexSet restrict_to(VertexSet host, VertexSet subset) {
  VertexSet out;
  int i = 0;
  for (Vertex v : host) {
    if (subset.contains(v)) out.insert(i);
    ++i;
  }
  return out;
}

Vertex restrict_to(VertexSet host, Vertex v) {
  if (!host.contains(v)) throw Error(ErrorCode::InternalInvariant, "restrict_to: vertex outside host");
  return (host & VertexSet::first_n(v)).size();
}

std::vector<VertexSet> components(const SimplicialGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp{left.front()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next &= left;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const SimplicialGraph& g) { return components(g, g.vertices()); }

bool is_connected(const SimplicialGraph& g) { return components(g).size() == 1; }

bool is_connected(const SimplicialGraph& g, VertexSet within) {
  return components(g, within).size() == 1;
}

bool is_clique(const SimplicialGraph& g, VertexSet s) {
  for (Vertex v : s) {
    if (!(s - VertexSet{v}).subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_complete(const SimplicialGraph& g) { return is_clique(g, g.vertices()); }

bool separates(const SimplicialGraph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw Error(ErrorCode::UnknownVertex, "separator is not contained in the vertex set");
  }
  if (s == g.vertices()) {
    throw Error(ErrorCode::SIsWholeGraph, "separator " + format_set(g, s) + " is the whole graph");
  }
  return components(g, g.vertices() - s).size() >= 2;
}

namespace {

void extend_cliques(const SimplicialGraph& g, VertexSet current, VertexSet candidates,
                    std::vector<VertexSet>& out) {
  out.push_back(current);
  for (Vertex v : candidates) {
    VertexSet later = candidates - VertexSet::first_n(v + 1);
    extend_cliques(g, current | VertexSet{v}, later & g.neighbors(v), out);
  }
}

void require_connected(const SimplicialGraph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

}  // namespace

std::vector<VertexSet> cliques(const SimplicialGraph& g, VertexSet within) {
  std::vector<VertexSet> out;
  extend_cliques(g, VertexSet{}, within, out);
  return out;
}

bool has_separating_clique(const SimplicialGraph& g) {
  require_connected(g);
  if (is_complete(g)) throw Error(ErrorCode::CompleteGraph, "graph is complete");
  for (VertexSet c : cliques(g, g.vertices())) {
    if (!c.empty() && separates(g, c)) return true;
  }
  return false;
}

std::vector<FourCycle> enumerate_induced_4cycles(const SimplicialGraph& g) {
  return kernels::parallel::induced_4cycles(g);
}

bool has_induced_4cycle(const SimplicialGraph& g) {
  return !enumerate_induced_4cycles(g).empty();
}

bool is_induced_4cycle(const SimplicialGraph& g, const FourCycle& c) {
  if (c.vertex_set().size() != 4 || !c.vertex_set().subset_of(g.vertices())) return false;
  for (int i = 0; i < 4; ++i) {
    Vertex a = c.v[static_cast<std::size_t>(i)];
    Vertex b = c.v[static_cast<std::size_t>((i + 1) % 4)];
    if (!g.adjacent(a, b)) return false;
  }
  return !g.adjacent(c.v[0], c.v[2]) && !g.adjacent(c.v[1], c.v[3]);
}

SquareGraph square_graph(const SimplicialGraph& g) {
  SquareGraph sq;
  sq.cycles = enumerate_induced_4cycles(g);
  sq.adjacency.assign(sq.cycles.size(), {});
  std::map<Edge, std::vector<int>> by_diagonal;
  for (std::size_t i = 0; i < sq.cycles.size(); ++i) {
    for (Edge d : sq.cycles[i].diagonals()) {
      if (d.first > d.second) std::swap(d.first, d.second);
      by_diagonal[d].push_back(static_cast<int>(i));
    }
  }
  // Two non-adjacent shared vertices are necessarily a diagonal of both cycles.
  for (const auto& [diag, ids] : by_diagonal) {
    for (int a : ids) {
      for (int b : ids) {
        if (a != b) sq.adjacency[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  }
  for (auto& row : sq.adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return sq;
}

VertexSet universal_vertices(const SimplicialGraph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) out.insert(v);
  }
  return out;
}

bool is_cfs(const SimplicialGraph& g) {
  VertexSet omega = g.vertices() - universal_vertices(g);
  if (omega.empty()) return false;
  SquareGraph sq = square_graph(g);
  for (const auto& comp : sq.components()) {
    VertexSet covered;
    for (int i : comp) covered |= sq.cycles[static_cast<std::size_t>(i)].vertex_set();
    if (omega.subset_of(covered)) return true;
  }
  return false;
}

std::vector<VertexSet> join_factor_sets(const SimplicialGraph& g) {
  std::vector<VertexSet> co(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    co[static_cast<std::size_t>(v)] = g.vertices() - g.neighbors(v) - VertexSet{v};
  }
  return components(SimplicialGraph::from_adjacency(g.labels(), std::move(co)));
}

std::vector<SimplicialGraph> join_factors(const SimplicialGraph& g) {
  std::vector<SimplicialGraph> out;
  for (VertexSet f : join_factor_sets(g)) out.push_back(induced_subgraph(g, f));
  return out;
}

bool is_join(const SimplicialGraph& g) { return join_factor_sets(g).size() >= 2; }

bool is_join_of_two_diam_ge2(const SimplicialGraph& g) {
  // A group of factors has diameter >= 2 exactly when it is not a clique,
  // which needs a factor with two or more vertices.
  int big = 0;
  for (VertexSet f : join_factor_sets(g)) {
    if (f.size() >= 2) ++big;
  }
  return big >= 2;
}

std::vector<Suspension> all_suspension_forms(const SimplicialGraph& g) {
  std::vector<Suspension> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      VertexSet base = g.vertices() - VertexSet{u, v};
      if (base.empty()) continue;
      if (base.subset_of(g.neighbors(u)) && base.subset_of(g.neighbors(v))) {
        out.push_back(Suspension{{u, v}, base});
      }
    }
  }
  return out;
}

std::optional<Suspension> suspension_form(const SimplicialGraph& g) {
  auto all = all_suspension_forms(g);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_broken_line(const SimplicialGraph& g, VertexSet s) {
  if (s.empty()) return false;
  int twice_edges = 0;
  for (Vertex v : s) {
    int d = (g.neighbors(v) & s).size();
    if (d > 2) return false;
    twice_edges += d;
  }
  return twice_edges / 2 == s.size() - static_cast<int>(components(g, s).size());
}

bool is_broken_line(const SimplicialGraph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  return is_broken_line(g, g.vertices());
}

bool is_cycle(const SimplicialGraph& g, VertexSet s) {
  if (s.size() < 3 || !is_connected(g, s)) return false;
  for (Vertex v : s) {
    if ((g.neighbors(v) & s).size() != 2) return false;
  }
  return true;
}

bool is_path_of_length2(const SimplicialGraph& g, VertexSet s) {
  return s.size() == 3 && is_broken_line(g, s) && components(g, s).size() == 1;
}

std::vector<Edge> cut_pairs(const SimplicialGraph& g) {
  require_connected(g);
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      VertexSet s{u, v};
      if (s != g.vertices() && separates(g, s)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::array<Vertex, 3>> separating_induced_paths_len2(const SimplicialGraph& g) {
  require_connected(g);
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex m : g.neighbors(a) & g.neighbors(b)) {
        VertexSet s{a, m, b};
        if (s != g.vertices() && separates(g, s)) out.push_back({a, m, b});
      }
    }
  }
  return out;
}

std::vector<CompleteSubgraphSuspension> separating_complete_subgraph_suspensions(
    const SimplicialGraph& g) {
  require_connected(g);
  return kernels::parallel::separating_suspensions(g);
}

std::vector<FourCycle> separating_induced_4cycles(const SimplicialGraph& g) {
  std::vector<FourCycle> out;
  for (const FourCycle& c : enumerate_induced_4cycles(g)) {
    if (c.vertex_set() != g.vertices() && separates(g, c.vertex_set())) out.push_back(c);
  }
  return out;
}

bool is_three_connected(const SimplicialGraph& g) {
  if (g.order() < 4 || !is_connected(g)) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (separates(g, VertexSet{u})) return false;
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (separates(g, VertexSet{u, v})) return false;
    }
  }
  return true;
}

std::string format_set(const SimplicialGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

std::string format_cycle(const SimplicialGraph& g, const FourCycle& c) {
  return "(" + g.label(c.v[0]) + "," + g.label(c.v[1]) + "," + g.label(c.v[2]) + "," +
         g.label(c.v[3]) + ")";
}

}  // namespace racg
