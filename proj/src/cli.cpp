#include "racg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "racg/bisim.hpp"
#include "racg/classify.hpp"
#include "racg/io.hpp"
#include "racg/report.hpp"

namespace racg::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string format;
  bool json = false;
  std::string emit_tree;
  bool embedding_check = false;
  int jobs = 1;
};

/// Failure reading or validating an input file.
struct InputFailure {
  std::string message;
};

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::DuplicateVertex:
    case ErrorCode::UnknownEndpoint:
    case ErrorCode::SelfLoop:
    case ErrorCode::TooManyVertices:
      return true;
    default:
      return false;
  }
}

io::InputDocument load(const std::string& path, const Options& opt) {
  std::optional<io::Format> format;
  if (!opt.format.empty()) format = io::parse_format_name(opt.format);
  std::ifstream probe(path, std::ios::binary);
  if (!probe || fs::is_directory(path)) throw InputFailure{"cannot open " + path};
  try {
    auto doc = io::load_document(path, format);
    io::to_graph(doc);
    return doc;
  } catch (const Error& e) {
    if (is_input_error(e.code())) throw InputFailure{path + ": " + e.what()};
    throw;
  }
}

// Classification of one file into its own buffers.
struct FileResult {
  int code = kExitOk;
  std::string out;
  std::string err;
  report::Json json;
};

FileResult classify_one(const std::string& path, const Options& opt) {
  FileResult r;
  try {
    auto doc = load(path, opt);
    ReportOptions ro;
    ro.embedding_check = opt.embedding_check;
    auto rep = full_report(io::to_graph(doc), ro);
    rep.name = doc.name;
    r.json = report::report_json(rep);
    r.out = opt.json ? report::dump(r.json) : report::report_text(rep);
    if (!rep.planar.ran()) {
      r.code = kExitPrecondition;
      r.err = path + ": " + rep.planar.skipped + "\n";
    } else if (!rep.standing.pass) {
      r.code = kExitPrecondition;
      r.err = path + ": " + std::string(to_string(ErrorCode::StandingAssumptionsViolated)) + ": clause (" +
              std::to_string(rep.standing.failed_clause) + "): " + rep.standing.reason + "\n";
    }
    if (!opt.emit_tree.empty() && rep.tree.ran()) {
      std::ofstream dot(opt.emit_tree, std::ios::binary);
      if (!dot) {
        r.code = kExitInput;
        r.err += "cannot write " + opt.emit_tree + "\n";
      } else {
        dot << report::tree_dot(rep.graph, *rep.tree.value);
      }
    } else if (!opt.emit_tree.empty()) {
      r.err += path + ": no tree to emit: " + rep.tree.skipped + "\n";
    }
  } catch (const InputFailure& f) {
    r.code = kExitInput;
    r.err = f.message + "\n";
  }
  return r;
}

int classify_directory(const std::string& dir, const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<FileResult> results(files.size());
  Options each = opt;
  each.emit_tree.clear();
  const int n = static_cast<int>(files.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, opt.jobs))
  for (int i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = classify_one(files[static_cast<std::size_t>(i)], each);

  int code = kExitOk;
  report::Json batch{{"schema", report::kSchemaVersion}, {"reports", report::Json::array()}};
  for (std::size_t i = 0; i < files.size(); ++i) {
    const FileResult& r = results[i];
    err << r.err;
    if (r.code == kExitInput || code == kExitInput) {
      code = kExitInput;
    } else {
      code = std::max(code, r.code);
    }
    std::string file = fs::path(files[i]).filename().string();
    if (opt.json) {
      batch["reports"].push_back(report::Json{{"file", file}, {"report", r.code == kExitInput ? report::Json(nullptr) : r.json}});
    } else {
      out << "== " << file << " ==\n" << r.out;
    }
  }
  if (opt.json) out << report::dump(batch);
  return code;
}

int cmd_classify(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  if (fs::is_directory(path)) return classify_directory(path, opt, out, err);
  FileResult r = classify_one(path, opt);
  out << r.out;
  err << r.err;
  return r.code;
}

int cmd_tree(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  auto g = io::to_graph(load(path, opt));
  auto c = flag_planar_complex(g);
  auto least = visual_decomposition_tree(c, SplitOrder::LeastFirst);
  auto greatest = visual_decomposition_tree(c, SplitOrder::GreatestFirst);
  if (!same_tree(least, greatest)) {
    err << path << ": tree depends on the split order\n";
    return kExitPrecondition;
  }
  if (opt.json) {
    report::Json j{{"schema", report::kSchemaVersion}};
    j.update(report::tree_json(g, least));
    out << report::dump(j);
  } else {
    out << report::tree_dot(g, least);
  }
  return kExitOk;
}

TwoColoredGraph colored_input(const std::string& path, const Options& opt) {
  auto doc = load(path, opt);
  if (!doc.colors.empty()) return colored_graph(doc);
  auto g = io::to_graph(doc);
  return colored_tree(g, visual_decomposition_tree(flag_planar_complex(g)));
}

int cmd_bisim(const std::string& a, const std::string& b, const Options& opt, std::ostream& out) {
  auto ga = colored_input(a, opt);
  auto gb = colored_input(b, opt);
  bool same = bisimilar(ga, gb);
  auto qa = minimal_quotient(ga);
  auto qb = minimal_quotient(gb);
  if (opt.json) {
    out << report::dump(report::Json{{"schema", report::kSchemaVersion},
                                     {"bisimilar", same},
                                     {"quotients", {report::quotient_json(qa), report::quotient_json(qb)}}});
  } else {
    out << (same ? "bisimilar" : "not bisimilar") << "\n" << report::quotient_dot(qa) << report::quotient_dot(qb);
  }
  return kExitOk;
}

int cmd_peripheral(const std::string& path, const Options& opt, std::ostream& out) {
  auto g = io::to_graph(load(path, opt));
  Stage<PeripheralSummary> s;
  auto pc = minimal_peripheral_structure(g);
  s.value = PeripheralSummary{!pc, pc.value_or(PeripheralCollection{})};
  if (opt.json) {
    report::Json j{{"schema", report::kSchemaVersion}};
    j.update(report::peripheral_json(g, s));
    out << report::dump(j);
  } else if (s.value->thick) {
    out << "thick\n";
  } else {
    for (std::size_t i = 0; i < pc->members.size(); ++i) {
      out << format_set(g, pc->members[i]) << " " << to_string(pc->tags[i]) << "\n";
    }
  }
  return kExitOk;
}

int cmd_features(const std::string& path, const Options& opt, std::ostream& out) {
  auto g = io::to_graph(load(path, opt));
  auto rep = full_report(g);
  report::Json j{{"schema", report::kSchemaVersion}};
  j.update(report::features_json(g, rep.boundary, rep.peripheral));
  if (opt.json) {
    out << report::dump(j);
    return kExitOk;
  }
  out << "one-ended: " << (rep.boundary.one_ended ? "true" : "false") << "\n";
  for (const char* key : {"cut_point_peripherals", "nonparabolic_cut_pair", "splits_over_2ended", "sierpinski_carpet"}) {
    report::Json v = j[key];
    out << key << ": ";
    if (v["status"] == "skipped") {
      out << "skipped (" << v["reason"].get<std::string>() << ")\n";
    } else {
      v.erase("status");
      out << v.dump() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-angled Coxeter group classifier", "racg"};
  app.require_subcommand(1);
  Options opt;
  std::string input, second;

  auto common = [&](CLI::App* sub, bool json) {
    sub->add_option("--format", opt.format, "Input format")->check(CLI::IsMember({"edge-list", "json", "dot"}));
    if (json) sub->add_flag("--json", opt.json, "Machine-readable output");
  };
  auto* classify = app.add_subcommand("classify", "Full report for a file, or every file of a directory");
  classify->add_option("input", input, "Graph file or directory")->required();
  common(classify, true);
  classify->add_option("--emit-tree", opt.emit_tree, "Write the visual decomposition tree as DOT");
  classify->add_flag("--embedding-check", opt.embedding_check, "Enumerate embeddings of small inputs");
  classify->add_option("--jobs", opt.jobs, "Parallel jobs for a directory")->check(CLI::PositiveNumber);

  auto* tree = app.add_subcommand("tree", "Visual decomposition tree (DOT, or JSON with --json)");
  tree->add_option("input", input)->required();
  common(tree, true);

  auto* bisim = app.add_subcommand("bisim", "Bisimilarity of two coloured graphs or of two complexes' trees");
  bisim->add_option("first", input)->required();
  bisim->add_option("second", second)->required();
  common(bisim, true);

  auto* peripheral = app.add_subcommand("peripheral", "Minimal peripheral structure");
  peripheral->add_option("input", input)->required();
  common(peripheral, true);

  auto* features = app.add_subcommand("features", "Boundary features");
  features->add_option("input", input)->required();
  common(features, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (classify->parsed()) return cmd_classify(input, opt, out, err);
    if (tree->parsed()) return cmd_tree(input, opt, out, err);
    if (bisim->parsed()) return cmd_bisim(input, second, opt, out);
    if (peripheral->parsed()) return cmd_peripheral(input, opt, out);
    if (features->parsed()) return cmd_features(input, opt, out);
  } catch (const InputFailure& f) {
    err << f.message << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInput : kExitPrecondition;
  }
  return kExitInput;
}

}  // namespace racg::cli
