#include "racg/planar.hpp"

#include <algorithm>
#include <bitset>
#include <cstdio>
#include <functional>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace racg {

namespace {

constexpr std::size_t kMaxFaces = 2 * kMaxVertices + 4;
using FaceBits = std::bitset<kMaxFaces>;

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

int position(const std::vector<Vertex>& row, Vertex x) {
  auto it = std::find(row.begin(), row.end(), x);
  return it == row.end() ? -1 : static_cast<int>(it - row.begin());
}

struct FaceTable {
  // dart_face[x][k]: face of the dart x -> rot[x][k]; the corner in front of
  // rot[x][k] belongs to the same face.
  std::vector<std::vector<int>> dart_face;
  std::vector<int> isolated_face;
  std::vector<std::vector<Vertex>> walks;

  int corner_face(Vertex x, int k) const {
    return dart_face[uz(x)].empty() ? isolated_face[uz(x)] : dart_face[uz(x)][uz(k)];
  }
};

FaceTable trace_faces(const RotationSystem& rot, VertexSet present) {
  FaceTable t;
  t.dart_face.resize(rot.size());
  t.isolated_face.assign(rot.size(), -1);
  for (Vertex x : present) t.dart_face[uz(x)].assign(rot[uz(x)].size(), -1);
  for (Vertex x : present) {
    if (rot[uz(x)].empty()) {
      t.isolated_face[uz(x)] = static_cast<int>(t.walks.size());
      t.walks.push_back({x});
      continue;
    }
    for (int k = 0; k < static_cast<int>(rot[uz(x)].size()); ++k) {
      if (t.dart_face[uz(x)][uz(k)] >= 0) continue;
      const int id = static_cast<int>(t.walks.size());
      std::vector<Vertex> walk;
      Vertex a = x;
      int i = k;
      do {
        t.dart_face[uz(a)][uz(i)] = id;
        walk.push_back(a);
        Vertex b = rot[uz(a)][uz(i)];
        int j = position(rot[uz(b)], a);
        i = (j + 1) % static_cast<int>(rot[uz(b)].size());
        a = b;
      } while (!(a == x && i == k));
      t.walks.push_back(std::move(walk));
    }
  }
  return t;
}

VertexSet walk_set(const std::vector<Vertex>& walk) { return VertexSet::from_range(walk); }

void normalize(RotationSystem& rot) {
  for (auto& row : rot) {
    if (!row.empty()) std::rotate(row.begin(), std::min_element(row.begin(), row.end()), row.end());
  }
}

RotationSystem reflected(RotationSystem rot) {
  for (auto& row : rot) std::reverse(row.begin(), row.end());
  normalize(rot);
  return rot;
}

// Backtracking over connected edge insertions. Vertices join in BFS order
// through a pendant edge to their parent and the remaining back edges are
// chords inside a face.
class EmbeddingSearch {
 public:
  using Visit = std::function<bool(const RotationSystem&)>;

  EmbeddingSearch(const SimplicialGraph& g, VertexSet component, std::vector<VertexSet> enforced,
                  std::int64_t budget)
      : g_(g), component_(component), enforced_(std::move(enforced)), budget_(budget) {
    rot_.assign(uz(g.order()), {});
    std::vector<int> parent(uz(g.order()), -1);
    VertexSet seen{component.front()};
    std::vector<Vertex> queue{component.front()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex v = queue[i];
      for (Vertex w : g.neighbors(v) - seen) {
        seen.insert(w);
        parent[uz(w)] = v;
        queue.push_back(w);
      }
    }
    VertexSet earlier;
    for (Vertex v : queue) {
      Step s{v, parent[uz(v)], {}};
      for (Vertex w : g.neighbors(v) & earlier) {
        if (w != s.parent) s.back.push_back(w);
      }
      steps_.push_back(std::move(s));
      earlier.insert(v);
    }
  }

  /// Returns true if `visit` asked to stop.
  bool run(const Visit& visit) {
    visit_ = &visit;
    return place(0);
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  struct Step {
    Vertex v;
    int parent;
    std::vector<Vertex> back;
  };

  void tick() {
    if (++nodes_ > budget_) {
      throw Error(ErrorCode::EmbeddingSearchExceeded,
                  "embedding search exceeded " + std::to_string(budget_) + " nodes");
    }
  }

  bool is_triangle_face(const FaceTable& t, int f) const {
    const auto& w = t.walks[uz(f)];
    if (w.size() != 3) return false;
    VertexSet s = walk_set(w);
    return std::find(enforced_.begin(), enforced_.end(), s) != enforced_.end();
  }

  // A face bounded by an enforced triangle stays empty unless the triangle
  // also bounds another face (the graph so far is that triangle).
  bool protected_face(const FaceTable& t, int f) const {
    if (!is_triangle_face(t, f)) return false;
    VertexSet s = walk_set(t.walks[uz(f)]);
    int copies = 0;
    for (const auto& w : t.walks) {
      if (w.size() == 3 && walk_set(w) == s) ++copies;
    }
    return copies < 2;
  }

  bool triangle_is_face(const FaceTable& t, VertexSet tri) const {
    for (const auto& w : t.walks) {
      if (w.size() == 3 && walk_set(w) == tri) return true;
    }
    return false;
  }

  // Necessary conditions for completing the current partial embedding.
  bool feasible(const FaceTable& t, std::size_t step, std::size_t next_chord) const {
    std::vector<FaceBits> on(uz(g_.order()));
    for (std::size_t f = 0; f < t.walks.size(); ++f) {
      for (Vertex x : t.walks[f]) on[uz(x)].set(f);
    }
    const Step& s = steps_[step];
    for (std::size_t i = next_chord; i < s.back.size(); ++i) {
      if ((on[uz(s.v)] & on[uz(s.back[i])]).none()) return false;
    }
    for (VertexSet comp : components(g_, component_ - placed_)) {
      FaceBits common;
      common.set();
      for (Vertex x : comp) {
        for (Vertex a : g_.neighbors(x) & placed_) common &= on[uz(a)];
      }
      if (common.none()) return false;
    }
    return true;
  }

  bool place(std::size_t step) {
    if (step == steps_.size()) return (*visit_)(rot_);
    const Step& s = steps_[step];
    if (s.parent < 0) {
      placed_.insert(s.v);
      if (chord(step, 0)) return true;
      placed_.erase(s.v);
      return false;
    }
    const Vertex p = s.parent;
    FaceTable t = trace_faces(rot_, placed_);
    const int corners = std::max<int>(1, static_cast<int>(rot_[uz(p)].size()));
    for (int k = 0; k < corners; ++k) {
      if (protected_face(t, t.corner_face(p, k))) continue;
      tick();
      rot_[uz(p)].insert(rot_[uz(p)].begin() + k, s.v);
      rot_[uz(s.v)] = {p};
      placed_.insert(s.v);
      FaceTable after = trace_faces(rot_, placed_);
      if (feasible(after, step, 0) && chord(step, 0)) return true;
      placed_.erase(s.v);
      rot_[uz(s.v)].clear();
      rot_[uz(p)].erase(rot_[uz(p)].begin() + k);
    }
    return false;
  }

  bool chord(std::size_t step, std::size_t idx) {
    const Step& s = steps_[step];
    if (idx == s.back.size()) return place(step + 1);
    const Vertex v = s.v;
    const Vertex w = s.back[idx];
    FaceTable t = trace_faces(rot_, placed_);
    const int dv = static_cast<int>(rot_[uz(v)].size());
    const int dw = static_cast<int>(rot_[uz(w)].size());
    for (int kv = 0; kv < dv; ++kv) {
      for (int kw = 0; kw < dw; ++kw) {
        if (t.corner_face(v, kv) != t.corner_face(w, kw)) continue;
        tick();
        rot_[uz(v)].insert(rot_[uz(v)].begin() + kv, w);
        rot_[uz(w)].insert(rot_[uz(w)].begin() + kw, v);
        FaceTable after = trace_faces(rot_, placed_);
        bool ok = true;
        for (Vertex z : g_.neighbors(v) & g_.neighbors(w) & placed_) {
          bool present = position(rot_[uz(v)], z) >= 0 && position(rot_[uz(w)], z) >= 0;
          VertexSet tri{v, w, z};
          if (present && std::find(enforced_.begin(), enforced_.end(), tri) != enforced_.end() &&
              !triangle_is_face(after, tri)) {
            ok = false;
            break;
          }
        }
        if (ok && feasible(after, step, idx + 1) && chord(step, idx + 1)) return true;
        rot_[uz(w)].erase(rot_[uz(w)].begin() + kw);
        rot_[uz(v)].erase(rot_[uz(v)].begin() + kv);
      }
    }
    return false;
  }

  const SimplicialGraph& g_;
  VertexSet component_;
  std::vector<VertexSet> enforced_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<Step> steps_;
  RotationSystem rot_;
  VertexSet placed_;
  const Visit* visit_ = nullptr;
};

std::vector<VertexSet> triangle_sets(const std::vector<Triangle>& tris, VertexSet within) {
  std::vector<VertexSet> out;
  for (const auto& t : tris) {
    VertexSet s{t[0], t[1], t[2]};
    if (s.subset_of(within)) out.push_back(s);
  }
  return out;
}

std::optional<RotationSystem> first_embedding(const SimplicialGraph& g, VertexSet comp,
                                              std::vector<VertexSet> enforced, std::int64_t budget) {
  std::optional<RotationSystem> found;
  EmbeddingSearch search(g, comp, std::move(enforced), budget);
  search.run([&](const RotationSystem& rot) {
    found = rot;
    return true;
  });
  return found;
}

bool boost_planar(const SimplicialGraph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(uz(g.order()));
  for (auto [a, b] : g.edges()) boost::add_edge(uz(a), uz(b), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

void precheck(const SimplicialGraph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (!boost_planar(g)) throw Error(ErrorCode::NotPlanar, "graph is not planar");
  if (auto k4 = find_k4(g)) {
    VertexSet s{(*k4)[0], (*k4)[1], (*k4)[2], (*k4)[3]};
    throw Error(ErrorCode::ContainsK4, "4-clique " + format_set(g, s));
  }
}

std::string triangle_text(const SimplicialGraph& g, VertexSet t) { return format_set(g, t); }

}  // namespace

std::vector<Triangle> triangles_of(const SimplicialGraph& g) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex b : g.neighbors(a) - VertexSet::first_n(a + 1)) {
      for (Vertex c : g.neighbors(a) & (g.neighbors(b) - VertexSet::first_n(b + 1))) {
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::optional<std::array<Vertex, 4>> find_k4(const SimplicialGraph& g) {
  for (const auto& t : triangles_of(g)) {
    VertexSet common = g.neighbors(t[0]) & g.neighbors(t[1]) & g.neighbors(t[2]);
    if (!common.empty()) return std::array<Vertex, 4>{t[0], t[1], t[2], common.front()};
  }
  return std::nullopt;
}

PlanarComplex PlanarComplex::from_embedding(SimplicialGraph g, RotationSystem rotation) {
  if (static_cast<int>(rotation.size()) != g.order()) {
    throw Error(ErrorCode::InvalidEmbedding, "rotation system size differs from vertex count");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& row = rotation[uz(v)];
    if (static_cast<int>(row.size()) != g.degree(v) || VertexSet::from_range(row) != g.neighbors(v)) {
      throw Error(ErrorCode::InvalidEmbedding, "rotation at " + g.label(v) + " is not its neighbourhood");
    }
  }
  if (auto k4 = find_k4(g)) {
    VertexSet s{(*k4)[0], (*k4)[1], (*k4)[2], (*k4)[3]};
    throw Error(ErrorCode::ContainsK4, "4-clique " + format_set(g, s));
  }
  normalize(rotation);
  PlanarComplex c;
  c.base_ = std::move(g);
  c.rotation_ = std::move(rotation);
  const SimplicialGraph& base = c.base_;
  FaceTable t = trace_faces(c.rotation_, base.vertices());
  c.faces_ = t.walks;

  for (VertexSet comp : components(base)) {
    int vcount = comp.size();
    int ecount = 0;
    for (Vertex v : comp) ecount += base.degree(v);
    ecount /= 2;
    int fcount = 0;
    for (const auto& w : c.faces_) {
      if (comp.contains(w.front())) ++fcount;
    }
    if (vcount - ecount + fcount != 2) {
      throw Error(ErrorCode::InvalidEmbedding,
                  "Euler characteristic " + std::to_string(vcount - ecount + fcount) +
                      " on component " + format_set(base, comp));
    }
  }

  c.triangles_ = triangles_of(base);
  c.face_fill_.assign(c.faces_.size(), -1);
  for (std::size_t i = 0; i < c.triangles_.size(); ++i) {
    const auto& tr = c.triangles_[i];
    VertexSet s{tr[0], tr[1], tr[2]};
    bool filled = false;
    for (std::size_t f = 0; f < c.faces_.size() && !filled; ++f) {
      if (c.face_fill_[f] < 0 && c.faces_[f].size() == 3 && walk_set(c.faces_[f]) == s) {
        c.face_fill_[f] = static_cast<int>(i);
        filled = true;
      }
    }
    if (!filled) {
      throw Error(ErrorCode::InvalidEmbedding, "triangle " + format_set(base, s) + " bounds no face");
    }
  }
  for (std::size_t f = 0; f < c.faces_.size(); ++f) {
    if (c.face_fill_[f] >= 0) continue;
    Region r;
    r.walk = c.faces_[f];
    r.boundary_len = static_cast<int>(r.walk.size());
    r.boundary_is_cycle = r.walk.size() >= 3 && walk_set(r.walk).size() == r.boundary_len;
    c.regions_.push_back(std::move(r));
  }
  return c;
}

std::string PlanarComplex::embedding_id() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const auto& row : rotation_) {
    mix(0xffff);
    for (Vertex v : row) mix(static_cast<std::uint64_t>(v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

PlanarComplex flag_planar_complex(const SimplicialGraph& g, std::int64_t budget) {
  precheck(g);
  const auto tris = triangles_of(g);
  RotationSystem rot(uz(g.order()));
  for (VertexSet comp : components(g)) {
    auto enforced = triangle_sets(tris, comp);
    auto found = first_embedding(g, comp, enforced, budget);
    if (!found) {
      // Name the first triangle whose constraint cannot be met together with
      // the ones before it.
      std::vector<VertexSet> prefix;
      for (VertexSet t : enforced) {
        prefix.push_back(t);
        if (!first_embedding(g, comp, prefix, budget)) {
          throw Error(ErrorCode::TriangleNotFillable,
                      "3-cycle " + triangle_text(g, t) + " cannot bound a face");
        }
      }
      throw Error(ErrorCode::InternalInvariant, "no embedding although every triangle is fillable");
    }
    for (Vertex v : comp) rot[uz(v)] = (*found)[uz(v)];
  }
  return PlanarComplex::from_embedding(g, std::move(rot));
}

std::vector<PlanarComplex> enumerate_embeddings(const SimplicialGraph& g, std::int64_t budget) {
  precheck(g);
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "embedding enumeration needs a connected graph");
  auto enforced = triangle_sets(triangles_of(g), g.vertices());
  std::set<RotationSystem> seen;
  std::vector<PlanarComplex> out;
  EmbeddingSearch search(g, g.vertices(), enforced, budget);
  search.run([&](const RotationSystem& rot) {
    RotationSystem a = rot;
    normalize(a);
    RotationSystem key = std::min(a, reflected(a));
    if (seen.insert(key).second) out.push_back(PlanarComplex::from_embedding(g, a));
    return false;
  });
  return out;
}

std::vector<Region> regions(const PlanarComplex& c) { return c.regions(); }

std::array<VertexSet, 2> cycle_sides(const PlanarComplex& c, const FourCycle& sigma) {
  const SimplicialGraph& g = c.base();
  if (!is_induced_4cycle(g, sigma)) {
    throw Error(ErrorCode::NotInducedFourCycle, "not an induced 4-cycle of the complex");
  }
  VertexSet cyc = sigma.vertex_set();
  std::array<VertexSet, 2> seeds{};
  for (int i = 0; i < 4; ++i) {
    Vertex x = sigma.v[uz(i)];
    Vertex prev = sigma.v[uz((i + 3) % 4)];
    Vertex next = sigma.v[uz((i + 1) % 4)];
    const auto& row = c.rotation()[uz(x)];
    const int d = static_cast<int>(row.size());
    const int pn = position(row, next);
    // Walking the rotation from `next` until `prev` sweeps one side, the
    // rest sweeps the other.
    int side = 0;
    for (int step = 1; step < d; ++step) {
      Vertex y = row[uz((pn + step) % d)];
      if (y == prev) {
        side = 1;
        continue;
      }
      seeds[uz(side)].insert(y);
    }
  }
  std::array<VertexSet, 2> content{};
  for (VertexSet comp : components(g, g.vertices() - cyc)) {
    bool a = comp.intersects(seeds[0]);
    bool b = comp.intersects(seeds[1]);
    if (a && b) {
      throw Error(ErrorCode::InternalInvariant, "component " + format_set(g, comp) + " on both sides of a 4-cycle");
    }
    if (a) content[0] |= comp;
    if (b) content[1] |= comp;
  }
  return content;
}

bool bounds_region(const FourCycle& sigma, const PlanarComplex& c) {
  auto sides = cycle_sides(c, sigma);
  return sides[0].empty() || sides[1].empty();
}

std::vector<FourCycle> strongly_separating_4cycles(const PlanarComplex& c) {
  std::vector<FourCycle> out;
  for (const FourCycle& s : enumerate_induced_4cycles(c.base())) {
    if (!bounds_region(s, c)) out.push_back(s);
  }
  return out;
}

bool is_prime(const PlanarComplex& c) {
  const SimplicialGraph& g = c.base();
  if (g.empty() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.order() > 1 && separates(g, VertexSet{v})) return false;
  }
  for (auto [a, b] : g.edges()) {
    VertexSet s{a, b};
    if (s != g.vertices() && separates(g, s)) return false;
  }
  if (!has_induced_4cycle(g)) return false;
  if (g.order() == 4 && g.edge_count() == 4) return false;
  return strongly_separating_4cycles(c).empty();
}

bool is_special_shape(const SimplicialGraph& g) {
  if (g.order() != 5) return false;
  for (const auto& s : all_suspension_forms(g)) {
    if (s.base.size() == 3 && !is_clique(g, s.base)) return true;
  }
  return false;
}

bool is_special_prime(const PlanarComplex& c) {
  if (!is_prime(c)) throw Error(ErrorCode::NotPrime, "complex is not prime");
  return is_special_shape(c.base());
}

PlanarComplex subcomplex(const PlanarComplex& c, VertexSet s) {
  SimplicialGraph sub = induced_subgraph(c.base(), s);
  RotationSystem rot;
  for (Vertex v : s) {
    std::vector<Vertex> row;
    for (Vertex w : c.rotation()[uz(v)]) {
      if (s.contains(w)) row.push_back(restrict_to(s, w));
    }
    rot.push_back(std::move(row));
  }
  return PlanarComplex::from_embedding(std::move(sub), std::move(rot));
}

StrongVisualDecomposition strong_visual_decomposition(const PlanarComplex& c, const FourCycle& sigma) {
  auto sides = cycle_sides(c, sigma);
  if (sides[0].empty() || sides[1].empty()) {
    throw Error(ErrorCode::NotStronglySeparating,
                format_cycle(c.base(), sigma) + " does not strongly separate the complex");
  }
  VertexSet cyc = sigma.vertex_set();
  VertexSet rest = c.base().vertices() - cyc;
  int first = sides[0].contains(rest.front()) ? 0 : 1;
  StrongVisualDecomposition d;
  d.first_vertices = cyc | sides[uz(first)];
  d.second_vertices = cyc | sides[uz(1 - first)];
  // Components touching no cycle vertex would belong to neither side; they
  // do not occur in connected complexes.
  d.first = subcomplex(c, d.first_vertices);
  d.second = subcomplex(c, d.second_vertices);
  return d;
}

std::vector<std::string> walk_labels(const SimplicialGraph& g, const std::vector<Vertex>& walk) {
  std::vector<std::string> out;
  for (Vertex v : walk) out.push_back(g.label(v));
  if (!out.empty()) std::rotate(out.begin(), std::min_element(out.begin(), out.end()), out.end());
  return out;
}

EmbeddingSurvey survey_embeddings(const SimplicialGraph& g, int max_vertices) {
  EmbeddingSurvey s;
  if (!is_connected(g)) {
    s.reason = "graph is disconnected";
    return s;
  }
  if (g.order() > max_vertices) {
    s.reason = "more than " + std::to_string(max_vertices) + " vertices";
    return s;
  }
  if (is_three_connected(g)) {
    s.reason = "3-connected: the embedding is unique up to reflection";
    s.embeddings = 1;
    return s;
  }
  auto all = enumerate_embeddings(g);
  s.applicable = true;
  s.embeddings = static_cast<int>(all.size());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (strongly_separating_4cycles(all[i]) != strongly_separating_4cycles(all[0])) {
      s.strongly_separating_invariant = false;
    }
  }
  return s;
}

}  // namespace racg
