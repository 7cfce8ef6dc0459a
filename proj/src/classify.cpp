#include "racg/classify.hpp"

#include <algorithm>

#include "racg/bisim.hpp"

namespace racg {

namespace {

bool is_a1(const SimplicialGraph& g) {
  for (const Suspension& s : all_suspension_forms(g)) {
    bool long_cycle = s.base.size() >= 4 && is_cycle(g, s.base);
    if (long_cycle || is_broken_line(g, s.base)) return true;
  }
  return false;
}

// Runs f and records a library error as the skip reason.
template <class T, class F>
Stage<T> attempt(F&& f) {
  Stage<T> out;
  try {
    out.value = f();
  } catch (const Error& e) {
    out.skipped = e.what();
  }
  return out;
}

template <class T>
Stage<T> skip(std::string reason) {
  Stage<T> out;
  out.skipped = std::move(reason);
  return out;
}

}  // namespace

std::string to_string(ManifoldType t) { return t == ManifoldType::A ? "A" : "B"; }

ManifoldType type_AB(const PlanarComplex& c) {
  require_standing_assumptions(c.base());
  if (c.is_sphere()) return ManifoldType::A;
  bool squares = std::all_of(c.regions().begin(), c.regions().end(),
                             [](const Region& r) { return r.boundary_is_cycle && r.boundary_len == 4; });
  return squares ? ManifoldType::A : ManifoldType::B;
}

std::string subtype(const PlanarComplex& c) {
  const SimplicialGraph& g = c.base();
  auto standing = check_standing_assumptions(g);
  if (!standing.pass) {
    throw Error(ErrorCode::TypeUnassigned, "standing assumptions fail, clause (" +
                                               std::to_string(standing.failed_clause) + "): " + standing.reason);
  }
  bool separating_square = !separating_induced_4cycles(g).empty();
  if (type_AB(c) == ManifoldType::A) {
    if (is_a1(g)) return "A.1";
    if (is_cfs(g)) return "A.2";
    return separating_square ? "A.4" : "A.3";
  }
  bool two_ended_cut = !cut_pairs(g).empty() || !separating_induced_paths_len2(g).empty();
  if (two_ended_cut) return "B.2";
  return separating_square ? "B.3" : "B.1";
}

ClassificationReport full_report(const SimplicialGraph& g, const ReportOptions& options) {
  ClassificationReport r;
  r.graph = g;
  r.planar = attempt<PlanarComplex>([&] { return flag_planar_complex(g); });
  r.standing = check_standing_assumptions(g);
  const PlanarComplex* c = r.planar.ran() ? &*r.planar.value : nullptr;

  if (c != nullptr && r.standing.pass) {
    r.type = type_AB(*c);
    r.subtype = subtype(*c);
  }

  r.divergence = attempt<DivergenceClass>([&] { return divergence_class(g, c); });

  r.peripheral = attempt<PeripheralSummary>([&] {
    PeripheralSummary s;
    auto pc = minimal_peripheral_structure(g);
    s.thick = !pc;
    if (pc) s.collection = *pc;
    return s;
  });

  BoundaryFeatures& b = r.boundary;
  b.one_ended = !g.empty() && is_one_ended(g);
  if (!r.peripheral.ran()) {
    std::string why = "no peripheral structure: " + r.peripheral.skipped;
    b.cut_point_peripherals = skip<std::vector<int>>(why);
    b.nonparabolic_cut_pair = skip<CutPairVerdict>(why);
  } else if (r.peripheral.value->thick) {
    b.cut_point_peripherals = skip<std::vector<int>>("group is thick, no proper peripheral structure");
    b.nonparabolic_cut_pair = skip<CutPairVerdict>("group is thick, no proper peripheral structure");
  } else {
    const PeripheralCollection& pc = r.peripheral.value->collection;
    b.cut_point_peripherals = attempt<std::vector<int>>([&] { return parabolic_cut_points(g, pc); });
    b.nonparabolic_cut_pair = attempt<CutPairVerdict>([&] { return nonparabolic_cut_pair(g, pc); });
  }
  if (c != nullptr) {
    b.splits_over_2ended = attempt<bool>([&] { return splits_over_2ended(*c); });
    b.sierpinski_carpet = attempt<bool>([&] { return sierpinski_carpet(*c); });
  } else {
    b.splits_over_2ended = skip<bool>("not a planar flag complex: " + r.planar.skipped);
    b.sierpinski_carpet = skip<bool>("not a planar flag complex: " + r.planar.skipped);
  }

  if (c != nullptr) {
    r.tree = attempt<VisualDecompositionTree>([&] { return visual_decomposition_tree(*c); });
    r.qi_raag = attempt<bool>([&] { return qi_to_raag(*c); });
    r.embedding = attempt<EmbeddingNote>([&] {
      EmbeddingNote note;
      note.embedding_id = c->embedding_id();
      note.three_connected = is_three_connected(g);
      if (options.embedding_check) note.survey = survey_embeddings(g);
      return note;
    });
  } else {
    std::string why = "not a planar flag complex: " + r.planar.skipped;
    r.tree = skip<VisualDecompositionTree>(why);
    r.qi_raag = skip<bool>(why);
    r.embedding = skip<EmbeddingNote>(why);
  }
  return r;
}

}  // namespace racg
