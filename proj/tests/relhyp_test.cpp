#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "oracles.hpp"
#include "racg/relhyp.hpp"
#include "racg/standing.hpp"

using namespace racg;
using racg::testing::load_fixture;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

std::set<std::string> member_names(const SimplicialGraph& g, const std::vector<VertexSet>& members) {
  std::set<std::string> out;
  for (VertexSet m : members) out.insert(format_set(g, m));
  return out;
}

// Vertex sets of induced 4-cycles not inside any of `big`, by brute force.
std::set<std::string> squares_outside(const SimplicialGraph& g, const std::vector<VertexSet>& big) {
  std::set<std::string> out;
  for (const FourCycle& c : racg::testing::brute_force_4cycles(g)) {
    VertexSet s = c.vertex_set();
    if (std::none_of(big.begin(), big.end(), [&](VertexSet b) { return s.subset_of(b); })) out.insert(format_set(g, s));
  }
  return out;
}

}  // namespace

TEST(Caprace, ThreeGraphExample) {
  auto g = load_fixture("fig1_g1.txt");
  VertexSet k1 = g.set_of({"a1", "a2", "a3", "a4", "a5"});
  VertexSet k2 = g.set_of({"a6", "a7", "a8", "a9", "a10"});
  std::vector<VertexSet> members{k1, k2};
  auto cross = squares_outside(g, members);
  ASSERT_EQ(cross.size(), 6u);
  auto partial = verify_caprace(g, members);
  ASSERT_FALSE(partial.empty());
  EXPECT_EQ(partial.front().condition, 1);
  EXPECT_EQ(cross.count(format_set(g, partial.front().witnesses.front())), 1u);
  for (const FourCycle& c : enumerate_induced_4cycles(g)) {
    if (!c.vertex_set().subset_of(k1) && !c.vertex_set().subset_of(k2)) members.push_back(c.vertex_set());
  }
  EXPECT_TRUE(verify_caprace(g, members).empty());
}

TEST(Caprace, Conditions) {
  auto c4 = load_fixture("c4.txt");
  auto v = verify_caprace(c4, {});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].condition, 1);
  // Two members meeting in a non-adjacent pair.
  auto oct = load_fixture("octahedron.txt");
  auto two = verify_caprace(oct, {oct.set_of({"a", "b", "c", "d", "n"}), oct.set_of({"a", "c", "n", "s", "b"})});
  EXPECT_TRUE(std::any_of(two.begin(), two.end(), [](const CapraceViolation& x) { return x.condition == 2; }));
  // A vertex adjacent to opposite corners of a square member.
  auto a2 = load_fixture("a2.txt");
  auto three = verify_caprace(a2, {a2.set_of({"n", "x", "s", "y"})});
  EXPECT_TRUE(std::any_of(three.begin(), three.end(), [](const CapraceViolation& x) { return x.condition == 3; }));
  EXPECT_EQ(code_of([&] { verify_caprace(c4, {VertexSet{}}); }), ErrorCode::NotInducedMember);
  EXPECT_EQ(code_of([&] { verify_caprace(c4, {VertexSet{0, 9}}); }), ErrorCode::NotInducedMember);
}

TEST(MinimalStructure, ThreeGraphExample) {
  auto g1 = load_fixture("fig1_g1.txt");
  auto p1 = minimal_peripheral_structure(g1);
  ASSERT_TRUE(p1);
  VertexSet k1 = g1.set_of({"a1", "a2", "a3", "a4", "a5"});
  VertexSet k2 = g1.set_of({"a6", "a7", "a8", "a9", "a10"});
  auto want1 = squares_outside(g1, {k1, k2});
  want1.insert(format_set(g1, k1));
  want1.insert(format_set(g1, k2));
  EXPECT_EQ(member_names(g1, p1->members), want1);
  EXPECT_EQ(p1->members.size(), 8u);
  EXPECT_TRUE(p1->minimality_certified);

  auto g2 = load_fixture("fig1_g2.txt");
  auto p2 = minimal_peripheral_structure(g2);
  ASSERT_TRUE(p2);
  VertexSet l1 = g2.set_of({"b1", "b2", "b3", "b4", "b5"});
  VertexSet l2 = g2.set_of({"b6", "b7", "b8", "b9", "b10"});
  auto want2 = squares_outside(g2, {l1, l2});
  EXPECT_EQ(want2.size(), 4u);
  want2.insert(format_set(g2, l1));
  want2.insert(format_set(g2, l2));
  EXPECT_EQ(member_names(g2, p2->members), want2);

  auto g3 = load_fixture("fig1_g3.txt");
  auto p3 = minimal_peripheral_structure(g3);
  ASSERT_TRUE(p3);
  VertexSet k3 = g3.set_of({"c6", "c7", "c8", "c9", "c10"});
  auto want3 = squares_outside(g3, {k3});
  EXPECT_EQ(want3.size(), 3u);
  EXPECT_EQ(want3.count("{c1,c2,c4,c5}"), 1u);
  want3.insert(format_set(g3, k3));
  EXPECT_EQ(member_names(g3, p3->members), want3);
  for (std::size_t i = 0; i < p3->members.size(); ++i) {
    EXPECT_EQ(p3->tags[i], p3->members[i] == k3 ? MemberTag::Cfs : MemberTag::Square);
  }
}

TEST(MinimalStructure, ThickAndSquares) {
  EXPECT_FALSE(minimal_peripheral_structure(load_fixture("fig_afifthf_delta_prime.json")));
  EXPECT_FALSE(minimal_peripheral_structure(load_fixture("fig_afifthf_delta.json")));
  auto prism = load_fixture("prism.txt");
  auto p = minimal_peripheral_structure(prism);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->members.size(), 5u);
  for (MemberTag t : p->tags) EXPECT_EQ(t, MemberTag::Square);
  // No squares: hyperbolic, empty structure.
  auto c5 = minimal_peripheral_structure(load_fixture("c5.txt"));
  ASSERT_TRUE(c5);
  EXPECT_TRUE(c5->members.empty());
}

TEST(PlanarStructure, Examples) {
  auto prism = flag_planar_complex(load_fixture("prism.txt"));
  auto p = planar_peripheral_structure(prism);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->members.size(), 5u);
  EXPECT_FALSE(planar_peripheral_structure(flag_planar_complex(load_fixture("fig_afifthf_delta.json"))));
  auto cube = flag_planar_complex(load_fixture("a3.txt"));
  auto q = planar_peripheral_structure(cube);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->members.size(), 6u);
  for (MemberTag t : q->tags) EXPECT_EQ(t, MemberTag::Square);
}

TEST(Divergence, Examples) {
  EXPECT_EQ(divergence_class(load_fixture("octahedron.txt")), DivergenceClass::Linear);
  EXPECT_EQ(divergence_class(load_fixture("fig_afifthf_delta.json")), DivergenceClass::Quadratic);
  EXPECT_EQ(divergence_class(load_fixture("prism.txt")), DivergenceClass::Exponential);
  auto path = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(code_of([&] { divergence_class(path); }), ErrorCode::HypothesisViolated);
  auto tri = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  EXPECT_EQ(code_of([&] { divergence_class(tri); }), ErrorCode::HypothesisViolated);
  auto split = build_graph({"a", "b"}, {});
  EXPECT_EQ(code_of([&] { divergence_class(split); }), ErrorCode::HypothesisViolated);
}

TEST(MinimalStructure, RandomGraphsCertifyAndCloseMonotonically) {
  std::mt19937_64 rng(3);
  int certified = 0, not_thick = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 5 + static_cast<int>(rng() % 6);
    auto g = racg::testing::random_graph(n, 0.35, rng);
    auto squares = enumerate_induced_4cycles(g);
    std::vector<VertexSet> seeds;
    for (const auto& c : squares) seeds.push_back(c.vertex_set());
    auto full = square_closure(g, seeds);
    for (VertexSet s : seeds) {
      auto single = square_closure(g, {s});
      ASSERT_EQ(single.size(), 1u);
      EXPECT_TRUE(std::any_of(full.begin(), full.end(), [&](VertexSet m) { return single.front().subset_of(m); }));
    }
    try {
      auto p = minimal_peripheral_structure(g);
      if (p) {
        EXPECT_TRUE(verify_caprace(g, p->members).empty());
        ++certified;
      }
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ClosureNotThick);
      ++not_thick;
    }
  }
  EXPECT_GT(certified, 100);
  RecordProperty("closure_not_thick", not_thick);
}

TEST(PlanarStructure, AgreesWithClosure) {
  std::vector<PlanarComplex> pool = racg::testing::standing_fixture_complexes();
  for (const auto& g : racg::testing::flag_planar_corpus(8)) {
    if (check_standing_assumptions(g).pass) pool.push_back(flag_planar_complex(g));
  }
  auto more = racg::testing::random_standing_complexes(150, 21);
  pool.insert(pool.end(), more.begin(), more.end());
  int compared = 0;
  for (const auto& c : pool) {
    auto a = minimal_peripheral_structure(c.base());
    auto b = planar_peripheral_structure(c);
    ASSERT_EQ(a.has_value(), b.has_value()) << format_set(c.base(), c.base().vertices());
    if (a) {
      EXPECT_EQ(a->members, b->members) << format_set(c.base(), c.base().vertices());
      ++compared;
    }
    auto d = divergence_class(c.base(), &c);
    EXPECT_NE(d, DivergenceClass::UnknownPolynomial);
    if (!is_join_of_two_diam_ge2(c.base()) && !is_cfs(c.base())) {
      EXPECT_EQ(d == DivergenceClass::Exponential, a.has_value());
    }
  }
  EXPECT_GT(compared, 50);
}
