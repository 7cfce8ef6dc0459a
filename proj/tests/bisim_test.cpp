#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "bisim_oracles.hpp"
#include "oracles.hpp"
#include "racg/bisim.hpp"

using namespace racg;
using racg::testing::load_fixture;
using namespace racg::testing;

namespace {

constexpr NodeColor B = NodeColor::Black;
constexpr NodeColor W = NodeColor::White;

TwoColoredGraph fixture_graph(const std::string& name) {
  return colored_graph(io::load_document(std::string(RACG_FIXTURE_DIR) + "/" + name));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

}  // namespace

TEST(WeakCovering, Examples) {
  auto g = make_colored({B, W, B}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_weak_covering({0, 1, 2}, g, g));
  // Black-black edge folded onto a black vertex with a loop.
  auto edge = make_colored({B, B}, {{0, 1}});
  auto loop = make_colored({B}, {{0, 0}});
  EXPECT_TRUE(is_weak_covering({0, 0}, edge, loop));
  // Without the loop the edge has nowhere to go.
  EXPECT_FALSE(is_weak_covering({0, 0}, edge, make_colored({B}, {})));
  // White vertex sent to a black one.
  EXPECT_FALSE(is_weak_covering({0, 0, 0}, g, make_colored({B}, {{0, 0}})));
  // Homomorphism that misses an edge lift: path b-w onto b-w-b star center.
  auto bw = make_colored({B, W}, {{0, 1}});
  auto bwb = make_colored({B, W, B}, {{0, 1}, {1, 2}});
  EXPECT_FALSE(is_weak_covering({0, 1}, bw, bwb));
  EXPECT_EQ(code_of([&] { is_weak_covering({0, -1}, bw, bw); }), ErrorCode::PartialMap);
  EXPECT_EQ(code_of([&] { is_weak_covering({0}, bw, bw); }), ErrorCode::PartialMap);
}

TEST(MinimalQuotient, Examples) {
  auto tr = minimal_quotient(fixture_graph("tr.json"));
  ASSERT_EQ(tr.order(), 2);
  EXPECT_EQ(tr.labels, (std::vector<std::string>{"u1", "u2"}));
  EXPECT_EQ(tr.colors, (std::vector<NodeColor>{W, B}));
  EXPECT_EQ(tr.edge_count(), 1);
  EXPECT_TRUE(tr.has_edge(0, 1));

  // All-black star: every vertex sees only black vertices, so it folds to a
  // single black vertex with a loop.
  auto trp = minimal_quotient(fixture_graph("tr_prime.json"));
  ASSERT_EQ(trp.order(), 1);
  EXPECT_EQ(trp.colors[0], B);
  EXPECT_TRUE(trp.has_edge(0, 0));

  auto single = make_colored({W}, {});
  EXPECT_EQ(minimal_quotient(single), single);
}

TEST(Bisimilar, Examples) {
  auto tr = fixture_graph("tr.json");
  auto trp = fixture_graph("tr_prime.json");
  EXPECT_FALSE(bisimilar(tr, trp));
  EXPECT_TRUE(bisimilar(tr, tr));
  // Black centres with two and three white leaves.
  EXPECT_TRUE(bisimilar(make_colored({B, W, W}, {{0, 1}, {0, 2}}), make_colored({B, W, W, W}, {{0, 1}, {0, 2}, {0, 3}})));
}

TEST(Bisimilar, AgreesWithCommonCoverSearchOnTrees) {
  auto trees = colored_trees(6);
  EXPECT_EQ(trees.size(), 526u);
  std::vector<std::set<std::string>> covers;
  for (const auto& t : trees) covers.push_back(covered_graphs(to_small(t)));
  std::vector<TwoColoredGraph> quotients;
  for (const auto& t : trees) quotients.push_back(minimal_quotient(t));
  int yes = 0;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i; j < trees.size(); ++j) {
      bool want = oracle_bisimilar(covers[i], covers[j]);
      bool got = find_isomorphism(quotients[i], quotients[j]).has_value();
      EXPECT_EQ(got, want) << i << " " << j;
      yes += want;
    }
  }
  EXPECT_GT(yes, 1000);
}

TEST(Bisimilar, AgreesWithCommonCoverSearchOnGraphs) {
  std::mt19937_64 rng(12);
  std::vector<TwoColoredGraph> pool;
  for (int i = 0; i < 150; ++i) pool.push_back(random_connected_colored(rng));
  std::vector<std::set<std::string>> covers;
  for (const auto& g : pool) covers.push_back(covered_graphs(to_small(g)));
  int yes = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      bool want = oracle_bisimilar(covers[i], covers[j]);
      EXPECT_EQ(bisimilar(pool[i], pool[j]), want) << i << " " << j;
      yes += want;
    }
  }
  EXPECT_GT(yes, 150);
}

TEST(MinimalQuotient, ProjectionIdempotenceAndEquivalence) {
  std::mt19937_64 rng(5);
  std::vector<TwoColoredGraph> pool = colored_trees(5);
  for (int i = 0; i < 100; ++i) pool.push_back(random_connected_colored(rng));
  for (const auto& g : pool) {
    auto q = minimal_quotient(g);
    EXPECT_TRUE(is_weak_covering(bisimulation_blocks(g), g, q));
    EXPECT_TRUE(find_isomorphism(minimal_quotient(q), q).has_value());
    EXPECT_TRUE(bisimilar(g, g));
  }
  for (std::size_t i = 0; i < pool.size(); i += 3) {
    for (std::size_t j = 0; j < pool.size(); j += 3) {
      EXPECT_EQ(bisimilar(pool[i], pool[j]), bisimilar(pool[j], pool[i]));
      for (std::size_t k = 0; k < pool.size(); k += 7) {
        if (bisimilar(pool[i], pool[j]) && bisimilar(pool[j], pool[k])) EXPECT_TRUE(bisimilar(pool[i], pool[k]));
      }
    }
  }
}

TEST(QiVerdicts, NiceExample) {
  auto delta = flag_planar_complex(load_fixture("fig_afifthf_delta.json"));
  auto dp = flag_planar_complex(load_fixture("fig_afifthf_delta_prime.json"));
  EXPECT_FALSE(qi_equivalent_A2(delta, dp));
  EXPECT_TRUE(qi_equivalent_A2(delta, delta));
  EXPECT_FALSE(qi_to_raag(delta));
  EXPECT_TRUE(qi_to_raag(dp));
}

TEST(QiVerdicts, ExtendedBrokenLine) {
  // Delta prime with b10 making the line at the b4 piece a path of length 2.
  auto doc = io::load_document(std::string(RACG_FIXTURE_DIR) + "/fig_afifthf_delta_prime.json");
  doc.vertices.push_back("b10");
  for (const char* x : {"b3", "b4", "b5"}) doc.edges.emplace_back("b10", x);
  auto dp = flag_planar_complex(load_fixture("fig_afifthf_delta_prime.json"));
  auto ext = flag_planar_complex(io::to_graph(doc));
  auto t1 = colored_tree(dp.base(), visual_decomposition_tree(dp));
  auto t2 = colored_tree(ext.base(), visual_decomposition_tree(ext));
  ASSERT_LE(t1.order(), 6);
  ASSERT_LE(t2.order(), 6);
  bool want = oracle_bisimilar(covered_graphs(to_small(t1)), covered_graphs(to_small(t2)));
  EXPECT_EQ(qi_equivalent_A2(dp, ext), want);
  EXPECT_TRUE(want);
}

TEST(QiVerdicts, HypothesisViolations) {
  auto prism = flag_planar_complex(load_fixture("prism.txt"));
  auto delta = flag_planar_complex(load_fixture("fig_afifthf_delta.json"));
  try {
    qi_equivalent_A2(delta, prism);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HypothesisViolated);
    EXPECT_NE(std::string(e.what()).find("second input"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("CFS"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { qi_to_raag(flag_planar_complex(load_fixture("octahedron.txt"))); }),
            ErrorCode::HypothesisViolated);
}

TEST(ColoredGraph, RequiresColours) {
  auto doc = io::parse_document(R"({"vertices":["a","b"],"edges":[["a","b"]],"colors":{"a":"black"}})", io::Format::Json);
  EXPECT_EQ(code_of([&] { colored_graph(doc); }), ErrorCode::ParseError);
}
