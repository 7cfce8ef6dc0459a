#include "racg/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace racg::kernels {

namespace {

// Cycles whose least vertex is `a`: the diagonal through `a` is (a, c) and
// the other diagonal (b, d) comes from the common neighbourhood.
void cycles_from(const SimplicialGraph& g, Vertex a, std::vector<FourCycle>& out) {
  VertexSet above = g.vertices() - VertexSet::first_n(a + 1);
  for (Vertex c : above - g.neighbors(a)) {
    VertexSet common = g.neighbors(a) & g.neighbors(c) & above;
    for (Vertex b : common) {
      for (Vertex d : common - VertexSet::first_n(b + 1)) {
        if (!g.adjacent(b, d)) out.push_back(FourCycle{{a, b, c, d}});
      }
    }
  }
}

void suspensions_from(const SimplicialGraph& g, Vertex u,
                      std::vector<CompleteSubgraphSuspension>& out) {
  for (Vertex v = u + 1; v < g.order(); ++v) {
    if (g.adjacent(u, v)) continue;
    for (VertexSet clique : cliques(g, g.neighbors(u) & g.neighbors(v))) {
      VertexSet s = clique | VertexSet{u, v};
      if (s != g.vertices() && separates(g, s)) {
        out.push_back(CompleteSubgraphSuspension{{u, v}, clique});
      }
    }
  }
}

bool disconnects(const SimplicialGraph& g, VertexSet s) {
  return s != g.vertices() && components(g, g.vertices() - s).size() >= 2;
}

std::uint64_t deposit(std::uint64_t bits, VertexSet pool) {
  std::uint64_t out = 0;
  int i = 0;
  for (Vertex v : pool) {
    if ((bits >> i) & 1u) out |= std::uint64_t{1} << v;
    ++i;
  }
  return out;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

std::vector<FourCycle> induced_4cycles(const SimplicialGraph& g) {
  std::vector<FourCycle> out;
  for (Vertex a = 0; a < g.order(); ++a) cycles_from(g, a, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompleteSubgraphSuspension> separating_suspensions(const SimplicialGraph& g) {
  std::vector<CompleteSubgraphSuspension> out;
  for (Vertex u = 0; u < g.order(); ++u) suspensions_from(g, u, out);
  return out;
}

std::optional<VertexSet> find_separating_subset(const SimplicialGraph& g, VertexSet pool) {
  const int k = pool.size();
  const std::uint64_t count = k >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << k);
  for (std::uint64_t bits = 1; bits < count; ++bits) {
    VertexSet s = VertexSet::from_mask(deposit(bits, pool));
    if (disconnects(g, s)) return s;
  }
  return std::nullopt;
}

}  // namespace serial

namespace parallel {

std::vector<FourCycle> induced_4cycles(const SimplicialGraph& g) {
  const int n = g.order();
  std::vector<std::vector<FourCycle>> per(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int a = 0; a < n; ++a) cycles_from(g, a, per[static_cast<std::size_t>(a)]);
  std::vector<FourCycle> out;
  for (auto& part : per) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CompleteSubgraphSuspension> separating_suspensions(const SimplicialGraph& g) {
  const int n = g.order();
  std::vector<std::vector<CompleteSubgraphSuspension>> per(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int u = 0; u < n; ++u) suspensions_from(g, u, per[static_cast<std::size_t>(u)]);
  std::vector<CompleteSubgraphSuspension> out;
  for (auto& part : per) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::optional<VertexSet> find_separating_subset(const SimplicialGraph& g, VertexSet pool) {
  const int k = pool.size();
  if (k >= 63) return serial::find_separating_subset(g, pool);
  const std::int64_t count = std::int64_t{1} << k;
  std::int64_t best = count;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t bits = 1; bits < count; ++bits) {
    if (bits < best &&
        disconnects(g, VertexSet::from_mask(deposit(static_cast<std::uint64_t>(bits), pool)))) {
      best = bits;
    }
  }
  if (best == count) return std::nullopt;
  return VertexSet::from_mask(deposit(static_cast<std::uint64_t>(best), pool));
}

}  // namespace parallel

}  // namespace racg::kernels
