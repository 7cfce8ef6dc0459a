#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "racg/cli.hpp"
#include "racg/io.hpp"

using namespace racg;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(RACG_FIXTURE_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("racg_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

ParseError parse_error_of(std::string_view text, io::Format f) {
  try {
    io::parse_input(text, f);
  } catch (const ParseError& e) {
    return e;
  }
  return ParseError(0, 0, "no error");
}

}  // namespace

TEST(ParseInput, Examples) {
  auto path = io::parse_input("a b\nb c", io::Format::EdgeList);
  EXPECT_EQ(path, build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));
  auto k2 = io::parse_input(R"({"vertices":["a","b"],"edges":[["a","b"]]})", io::Format::Json);
  EXPECT_EQ(k2, build_graph({"a", "b"}, {{"a", "b"}}));
  auto delta = io::load_graph(fixture("fig_afifthf_delta.json"));
  EXPECT_EQ(delta.order(), 8);
  EXPECT_EQ(delta.edge_count(), 15);
  auto k4 = io::load_graph(fixture("k4_dot.dot"));
  EXPECT_EQ(k4.order(), 4);
  EXPECT_EQ(k4.edge_count(), 6);
  auto iso = io::parse_input("# comment\nv z\na b  # trailing\n", io::Format::EdgeList);
  EXPECT_EQ(iso, build_graph({"a", "b", "z"}, {{"a", "b"}}));
}

TEST(ParseInput, PositionedErrors) {
  auto e = parse_error_of("a b\nb c d\n", io::Format::EdgeList);
  EXPECT_EQ(e.line(), 2);
  EXPECT_EQ(e.column(), 5);
  auto lone = parse_error_of("a b\n\nq\n", io::Format::EdgeList);
  EXPECT_EQ(lone.line(), 3);
  auto bad_json = parse_error_of("{\"vertices\": [\"a\",\n  }", io::Format::Json);
  EXPECT_EQ(bad_json.line(), 2);
  auto digraph = parse_error_of("digraph g { a -> b }", io::Format::Dot);
  EXPECT_EQ(digraph.line(), 1);
  EXPECT_EQ(digraph.column(), 1);
  auto arrow = parse_error_of("graph g {\n  a -> b\n}", io::Format::Dot);
  EXPECT_EQ(arrow.line(), 2);
  EXPECT_EQ(arrow.column(), 5);
}

TEST(ParseInput, RoundTripAllFormats) {
  std::vector<SimplicialGraph> graphs;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) graphs.push_back(racg::testing::random_graph(1 + static_cast<int>(rng() % 12), 0.3, rng));
  for (const auto& entry : fs::directory_iterator(RACG_FIXTURE_DIR)) graphs.push_back(io::load_graph(entry.path()));
  for (const auto& g : graphs) {
    for (io::Format f : {io::Format::EdgeList, io::Format::Json, io::Format::Dot}) {
      EXPECT_EQ(io::parse_input(io::serialize(g, f), f), g) << io::to_string(f);
    }
  }
}

TEST(Cli, SpecExamples) {
  auto nice = run({"classify", fixture("fig_afifthf_delta.json"), "--json"});
  EXPECT_EQ(nice.code, 0);
  auto j = nlohmann::json::parse(nice.out);
  EXPECT_EQ(j["subtype"], "A.2");
  EXPECT_EQ(j["schema"], 1);

  auto bis = run({"bisim", fixture("tr.json"), fixture("tr_prime.json")});
  EXPECT_EQ(bis.code, 0);
  EXPECT_EQ(bis.out.rfind("not bisimilar\n", 0), 0u);

  auto c5 = run({"classify", fixture("c5.txt")});
  EXPECT_EQ(c5.code, 2);
  EXPECT_NE(c5.err.find("StandingAssumptionsViolated"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"classify", fixture("missing.txt")}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  auto bad = scratch("bad.txt");
  write(bad, "a b c\n");
  auto r = run({"classify", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 1, column 5"), std::string::npos);
  auto loop = scratch("loop.txt");
  write(loop, "a a\n");
  EXPECT_EQ(run({"features", loop.string()}).code, 1);
  EXPECT_EQ(run({"classify", fixture("k5.txt")}).code, 2);
  EXPECT_EQ(run({"tree", fixture("prism.txt")}).code, 2);
  EXPECT_EQ(run({"peripheral", fixture("k5.txt")}).code, 0);
  EXPECT_EQ(run({"classify", fixture("prism.txt"), "--format", "yaml"}).code, 1);
}

TEST(Cli, ForcedFormat) {
  auto p = scratch("delta.data");
  write(p, io::read_file(fixture("fig_afifthf_delta.json")));
  auto r = run({"classify", p.string(), "--format", "json", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["subtype"], "A.2");
}

TEST(Cli, Commands) {
  auto tree = run({"tree", fixture("fig_afifthf_delta.json")});
  EXPECT_EQ(tree.code, 0);
  EXPECT_EQ(tree.out.rfind("graph tree {", 0), 0u);
  auto tree_json = run({"tree", fixture("fig_afifthf_delta.json"), "--json"});
  EXPECT_EQ(nlohmann::json::parse(tree_json.out)["nodes"].size(), 4u);

  auto bis = run({"bisim", fixture("tr.json"), fixture("fig_afifthf_delta.json"), "--json"});
  EXPECT_EQ(bis.code, 0);
  EXPECT_EQ(nlohmann::json::parse(bis.out)["bisimilar"], true);

  auto per = run({"peripheral", fixture("fig1_g2.txt"), "--json"});
  EXPECT_EQ(per.code, 0);
  EXPECT_EQ(nlohmann::json::parse(per.out)["members"].size(), 6u);

  auto feat = run({"features", fixture("ex2_g2.txt"), "--json"});
  auto fj = nlohmann::json::parse(feat.out);
  EXPECT_EQ(fj["nonparabolic_cut_pair"]["verdict"], "yes");
  EXPECT_EQ(fj["nonparabolic_cut_pair"]["witness"]["poles"], nlohmann::json::array({"u", "v"}));
  EXPECT_FALSE(run({"features", fixture("prism.txt")}).out.empty());

  auto dot = scratch("tree.dot");
  auto emit = run({"classify", fixture("fig_afifthf_delta.json"), "--emit-tree", dot.string()});
  EXPECT_EQ(emit.code, 0);
  EXPECT_EQ(io::read_file(dot), tree.out);

  auto check = run({"classify", fixture("ex2_g2.txt"), "--embedding-check", "--json"});
  EXPECT_EQ(check.code, 0);
  EXPECT_NE(nlohmann::json::parse(check.out)["embedding"]["invariance"], "not checked");
}

TEST(Cli, ByteDeterminism) {
  for (const auto& entry : fs::directory_iterator(RACG_FIXTURE_DIR)) {
    for (bool json : {false, true}) {
      std::vector<std::string> args{"classify", entry.path().string()};
      if (json) args.push_back("--json");
      auto a = run(args);
      auto b = run(args);
      EXPECT_EQ(a.code, b.code);
      EXPECT_EQ(a.out, b.out) << entry.path();
      EXPECT_EQ(a.err, b.err);
    }
  }
}

TEST(Cli, BatchJobsMatchSerial) {
  auto serial = run({"classify", RACG_FIXTURE_DIR, "--json", "--jobs", "1"});
  auto parallel = run({"classify", RACG_FIXTURE_DIR, "--json", "--jobs", "4"});
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_EQ(serial.err, parallel.err);
  EXPECT_EQ(serial.code, 2);
  auto j = nlohmann::json::parse(serial.out);
  EXPECT_EQ(j["reports"].size(), static_cast<std::size_t>(std::distance(fs::directory_iterator(RACG_FIXTURE_DIR),
                                                                        fs::directory_iterator())));
  EXPECT_EQ(j["reports"][0]["file"], "a1.txt");
  auto text = run({"classify", RACG_FIXTURE_DIR, "--jobs", "3"});
  EXPECT_NE(text.out.find("== prism.txt ==\n"), std::string::npos);
}
