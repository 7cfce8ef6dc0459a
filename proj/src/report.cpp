#include "racg/report.hpp"

#include <sstream>

namespace racg::report {

namespace {

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

template <class T, class F>
Json stage_json(const Stage<T>& s, F&& value) {
  if (!s.ran()) return Json{{"status", "skipped"}, {"reason", s.skipped}};
  Json j{{"status", "ok"}};
  j.update(value(*s.value));
  return j;
}

std::string fill_color(NodeColor c) { return c == NodeColor::Black ? "black" : "white"; }
std::string font_color(NodeColor c) { return c == NodeColor::Black ? "white" : "black"; }

}  // namespace

Json labels_json(const SimplicialGraph& g, VertexSet s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

Json peripheral_json(const SimplicialGraph& g, const Stage<PeripheralSummary>& p) {
  return stage_json(p, [&](const PeripheralSummary& s) {
    Json members = Json::array();
    for (std::size_t i = 0; i < s.collection.members.size(); ++i) {
      members.push_back(Json{{"vertices", labels_json(g, s.collection.members[i])},
                             {"tag", to_string(s.collection.tags[i])}});
    }
    return Json{{"thick", s.thick}, {"certified", s.collection.minimality_certified}, {"members", members}};
  });
}

Json features_json(const SimplicialGraph& g, const BoundaryFeatures& b, const Stage<PeripheralSummary>& p) {
  Json j{{"one_ended", b.one_ended}};
  j["cut_point_peripherals"] = stage_json(b.cut_point_peripherals, [&](const std::vector<int>& idx) {
    Json members = Json::array();
    for (int i : idx) members.push_back(labels_json(g, p.value->collection.members[static_cast<std::size_t>(i)]));
    return Json{{"indices", idx}, {"members", members}};
  });
  j["nonparabolic_cut_pair"] = stage_json(b.nonparabolic_cut_pair, [&](const CutPairVerdict& v) {
    Json out{{"verdict", to_string(v.verdict)}};
    if (v.witness) {
      out["witness"] = Json{{"poles", labels_json(g, VertexSet{v.witness->poles.first, v.witness->poles.second})},
                            {"clique", labels_json(g, v.witness->clique)}};
    }
    return out;
  });
  j["splits_over_2ended"] = stage_json(b.splits_over_2ended, [](bool x) { return Json{{"value", x}}; });
  j["sierpinski_carpet"] = stage_json(b.sierpinski_carpet, [](bool x) { return Json{{"value", x}}; });
  return j;
}

Json tree_json(const SimplicialGraph& g, const VisualDecompositionTree& t) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const VisualNode& n = t.nodes[i];
    nodes.push_back(Json{{"id", i},
                         {"vertices", labels_json(g, n.vertices)},
                         {"poles", labels_json(g, VertexSet{n.poles.first, n.poles.second})},
                         {"line", labels_json(g, n.line)},
                         {"weight", n.weight},
                         {"degree", n.degree},
                         {"color", to_string(n.color)}});
  }
  Json edges = Json::array();
  for (const TreeEdge& e : t.edges) {
    edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"cycle", labels_json(g, e.cycle.vertex_set())}});
  }
  return Json{{"nodes", nodes}, {"edges", edges}};
}

Json quotient_json(const TwoColoredGraph& q) {
  Json vertices = Json::array();
  for (int v = 0; v < q.order(); ++v) {
    vertices.push_back(Json{{"label", q.labels[static_cast<std::size_t>(v)]},
                            {"color", to_string(q.colors[static_cast<std::size_t>(v)])}});
  }
  Json edges = Json::array();
  for (int v = 0; v < q.order(); ++v) {
    for (int w : q.adjacency[static_cast<std::size_t>(v)]) {
      if (v <= w) edges.push_back(Json::array({q.labels[static_cast<std::size_t>(v)], q.labels[static_cast<std::size_t>(w)]}));
    }
  }
  return Json{{"vertices", vertices}, {"edges", edges}};
}

Json report_json(const ClassificationReport& r) {
  const SimplicialGraph& g = r.graph;
  Json j{{"schema", kSchemaVersion}};
  j["name"] = r.name ? Json(*r.name) : Json(nullptr);
  j["graph"] = Json{{"vertices", g.order()}, {"edges", g.edge_count()}};
  j["planar"] = stage_json(r.planar, [&](const PlanarComplex& c) {
    Json regions = Json::array();
    for (const Region& reg : c.regions()) regions.push_back(walk_labels(g, reg.walk));
    return Json{{"sphere", c.is_sphere()}, {"regions", regions}};
  });
  j["standing"] = Json{{"pass", r.standing.pass}};
  if (!r.standing.pass) {
    j["standing"]["failed_clause"] = r.standing.failed_clause;
    j["standing"]["reason"] = r.standing.reason;
  }
  j["type"] = r.type ? to_string(*r.type) : "excluded";
  j["subtype"] = r.subtype ? Json(*r.subtype) : Json(nullptr);
  j["divergence"] = stage_json(r.divergence, [](DivergenceClass d) { return Json{{"class", to_string(d)}}; });
  j["peripheral"] = peripheral_json(g, r.peripheral);
  j["boundary"] = features_json(g, r.boundary, r.peripheral);
  j["tree"] = stage_json(r.tree, [&](const VisualDecompositionTree& t) { return tree_json(g, t); });
  j["qi"] = stage_json(r.qi_raag, [](bool x) { return Json{{"raag", x}}; });
  j["embedding"] = stage_json(r.embedding, [](const EmbeddingNote& e) {
    Json out{{"embedding_id", e.embedding_id}, {"three_connected", e.three_connected}};
    if (e.three_connected) {
      out["invariance"] = "unique embedding";
    } else if (!e.survey) {
      out["invariance"] = "not checked";
    } else if (!e.survey->applicable) {
      out["invariance"] = "not checked: " + e.survey->reason;
    } else {
      out["invariance"] = e.survey->strongly_separating_invariant ? "invariant" : "embedding dependent";
      out["embeddings"] = e.survey->embeddings;
    }
    return out;
  });
  return j;
}

std::string report_text(const ClassificationReport& r) {
  Json j = report_json(r);
  std::ostringstream out;
  auto line = [&](const std::string& key, const Json& stage, const std::string& field) {
    out << key << ": ";
    if (stage["status"] == "skipped") {
      out << "skipped (" << stage["reason"].get<std::string>() << ")\n";
    } else {
      const Json& v = stage[field];
      out << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  };
  if (r.name) out << "name: " << *r.name << "\n";
  out << "vertices: " << r.graph.order() << ", edges: " << r.graph.edge_count() << "\n";
  out << "standing: " << (r.standing.pass ? "pass" : "fail, clause (" + std::to_string(r.standing.failed_clause) +
                                                          "): " + r.standing.reason)
      << "\n";
  out << "type: " << j["type"].get<std::string>() << "\n";
  if (r.subtype) out << "subtype: " << *r.subtype << "\n";
  line("divergence", j["divergence"], "class");
  if (r.peripheral.ran()) {
    const PeripheralSummary& p = *r.peripheral.value;
    if (p.thick) {
      out << "peripheral: thick\n";
    } else {
      out << "peripheral: " << p.collection.members.size() << " members\n";
      for (std::size_t i = 0; i < p.collection.members.size(); ++i) {
        out << "  " << format_set(r.graph, p.collection.members[i]) << " " << to_string(p.collection.tags[i]) << "\n";
      }
    }
  } else {
    out << "peripheral: skipped (" << r.peripheral.skipped << ")\n";
  }
  const Json& b = j["boundary"];
  out << "one-ended: " << (r.boundary.one_ended ? "true" : "false") << "\n";
  if (r.boundary.cut_point_peripherals.ran()) {
    out << "parabolic cut points:";
    for (const Json& m : b["cut_point_peripherals"]["members"]) {
      out << " {";
      for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i].get<std::string>();
      out << "}";
    }
    out << "\n";
  } else {
    out << "parabolic cut points: skipped (" << r.boundary.cut_point_peripherals.skipped << ")\n";
  }
  line("non-parabolic cut pair", b["nonparabolic_cut_pair"], "verdict");
  if (r.boundary.nonparabolic_cut_pair.ran() && r.boundary.nonparabolic_cut_pair.value->witness) {
    const auto& w = *r.boundary.nonparabolic_cut_pair.value->witness;
    out << "  witness: poles " << format_set(r.graph, VertexSet{w.poles.first, w.poles.second}) << ", clique "
        << format_set(r.graph, w.clique) << "\n";
  }
  line("splits over 2-ended", b["splits_over_2ended"], "value");
  line("sierpinski carpet", b["sierpinski_carpet"], "value");
  if (r.tree.ran()) {
    out << "tree:\n";
    for (const VisualNode& n : r.tree.value->nodes) out << "  " << node_label(r.graph, n) << "\n";
  } else {
    out << "tree: skipped (" << r.tree.skipped << ")\n";
  }
  line("qi to raag", j["qi"], "raag");
  line("embedding", j["embedding"], "invariance");
  return out.str();
}

std::string tree_dot(const SimplicialGraph& g, const VisualDecompositionTree& t) {
  std::ostringstream out;
  out << "graph tree {\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    NodeColor c = t.nodes[i].color;
    out << "  n" << i << " [label=" << dot_id(node_label(g, t.nodes[i])) << ", style=filled, fillcolor="
        << fill_color(c) << ", fontcolor=" << font_color(c) << "];\n";
  }
  for (const TreeEdge& e : t.edges) {
    out << "  n" << e.a << " -- n" << e.b << " [label=" << dot_id(format_cycle(g, e.cycle)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string quotient_dot(const TwoColoredGraph& q) {
  std::ostringstream out;
  out << "graph quotient {\n";
  for (int v = 0; v < q.order(); ++v) {
    NodeColor c = q.colors[static_cast<std::size_t>(v)];
    out << "  " << dot_id(q.labels[static_cast<std::size_t>(v)]) << " [style=filled, fillcolor=" << fill_color(c)
        << ", fontcolor=" << font_color(c) << "];\n";
  }
  for (int v = 0; v < q.order(); ++v) {
    for (int w : q.adjacency[static_cast<std::size_t>(v)]) {
      if (v <= w) {
        out << "  " << dot_id(q.labels[static_cast<std::size_t>(v)]) << " -- "
            << dot_id(q.labels[static_cast<std::size_t>(w)]) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace racg::report
