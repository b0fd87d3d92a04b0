#include "eigendeg/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "eigendeg/error.hpp"
#include "eigendeg/generators.hpp"
#include "support/oracles.hpp"

namespace eigendeg {
namespace {

Graph path3() {
  const std::vector<Edge> e{{1, 2}, {2, 3}};
  return build_graph(3, e);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

TEST(BuildGraph, CompleteTriangle) {
  const std::vector<Edge> e{{1, 2}, {2, 3}, {1, 3}};
  const Graph g = build_graph(3, e);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g, gen_named(NamedKind::kComplete, 3));
}

TEST(BuildGraph, EmptyEdgeList) {
  const Graph g = build_graph(3, {});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(BuildGraph, NormalizesAndDeduplicates) {
  const std::vector<Edge> e{{2, 1}, {1, 2}, {3, 4}};
  const Graph g = build_graph(4, e);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {3, 4}}));
}

TEST(BuildGraph, Errors) {
  const std::vector<Edge> out_of_range{{1, 4}};
  const std::vector<Edge> zero{{0, 1}};
  const std::vector<Edge> loop{{2, 2}};
  EXPECT_EQ(code_of([&] { build_graph(3, out_of_range); }), ErrorCode::kInvalidVertex);
  EXPECT_EQ(code_of([&] { build_graph(3, zero); }), ErrorCode::kInvalidVertex);
  EXPECT_EQ(code_of([&] { build_graph(3, loop); }), ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of([] { Graph g(0); }), ErrorCode::kInvalidArgument);
}

TEST(Graph, BitLayoutFollowsGraph6Order) {
  // (1,2) -> bit 0, (1,3) -> bit 1, (2,3) -> bit 2, (1,4) -> bit 3.
  const std::vector<Edge> e{{1, 4}};
  EXPECT_EQ(build_graph(4, e).mask(), 0b1000u);
  const std::vector<Edge> f{{2, 3}};
  EXPECT_EQ(build_graph(4, f).mask(), 0b100u);
  EXPECT_EQ(Graph::from_mask(3, 0b111), gen_named(NamedKind::kComplete, 3));
  EXPECT_THROW(Graph::from_mask(3, 0b1000), Error);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(gen_named(NamedKind::kComplete, 3)), Graph(3));
  EXPECT_EQ(complement(Graph(5)), gen_named(NamedKind::kComplete, 5));
  const Graph co = complement(path3());
  EXPECT_EQ(co.edges(), (std::vector<Edge>{{1, 3}}));
}

TEST(Complement, WideGraphsMaskTail) {
  // 12 vertices = 66 pairs, spanning two words.
  const Graph g = gen_gnp(12, 0.3, 5);
  const Graph co = complement(g);
  EXPECT_EQ(g.edge_count() + co.edge_count(), 66);
  EXPECT_EQ(complement(co), g);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      if (i != j) EXPECT_NE(g.has_edge(i, j), co.has_edge(i, j));
}

TEST(DegreeStats, Examples) {
  const DegreeStats p = degree_stats(path3());
  EXPECT_EQ(p.degrees, (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(p.min_degree, 1);
  EXPECT_EQ(p.max_degree, 2);
  EXPECT_EQ(p.edge_count, 2);

  const DegreeStats k4 = degree_stats(gen_named(NamedKind::kComplete, 4));
  EXPECT_EQ(k4.degrees, (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(k4.edge_count, 6);

  const DegreeStats star = degree_stats(gen_named(NamedKind::kStar, 4));
  EXPECT_EQ(star.degrees, (std::vector<int>{3, 1, 1, 1}));
  EXPECT_EQ(star.min_degree, 1);
  EXPECT_EQ(star.max_degree, 3);
  EXPECT_EQ(star.edge_count, 3);
  EXPECT_DOUBLE_EQ(star.mean_degree, 1.5);
}

TEST(Irregularity, Examples) {
  EXPECT_EQ(irregularity(gen_named(NamedKind::kCycle, 5)), 0.0);
  const Graph star = gen_named(NamedKind::kStar, 4);
  // n*s = |4*3-6| + 3*|4*1-6| = 12.
  ASSERT_EQ(oracle::scaled_irregularity(star), 12);
  EXPECT_DOUBLE_EQ(irregularity(star), 3.0);
  EXPECT_EQ(irregularity(gen_named(NamedKind::kComplete, 2)), 0.0);
}

// Invariants over every labeled graph with n <= 6.
TEST(GraphProperties, ExhaustiveSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    enumerate_labeled(n, [n](const Graph& g) {
      const Graph co = complement(g);
      ASSERT_EQ(complement(co), g);
      ASSERT_EQ(g.edge_count() + co.edge_count(), std::int64_t{n} * (n - 1) / 2);

      const DegreeStats s = degree_stats(g);
      const DegreeStats cs = degree_stats(co);
      std::int64_t sum = 0;
      for (int u = 0; u < n; ++u) {
        sum += s.degrees[u];
        ASSERT_EQ(cs.degrees[u], n - 1 - s.degrees[u]);
      }
      ASSERT_EQ(sum, 2 * s.edge_count);
      ASSERT_LE(s.min_degree, s.mean_degree);
      ASSERT_LE(s.mean_degree, s.max_degree);
      ASSERT_EQ(cs.min_degree, n - 1 - s.max_degree);
      ASSERT_EQ(cs.max_degree, n - 1 - s.min_degree);

      const double irr = irregularity(s);
      ASSERT_EQ(irr == 0.0, s.min_degree == s.max_degree);
      ASSERT_NEAR(irr, oracle::scaled_irregularity(g) / double(n), 1e-12);
      ASSERT_EQ(oracle::scaled_irregularity(co), oracle::scaled_irregularity(g));
      ASSERT_NEAR(irregularity(cs), irr, 1e-12);
    });
  }
}

TEST(DisjointUnion, RelabelsSecondOperand) {
  const Graph u = disjoint_union(gen_named(NamedKind::kComplete, 2),
                                 gen_named(NamedKind::kComplete, 2));
  EXPECT_EQ(u, gen_named(NamedKind::kTwoCliques, 4));
}

}  // namespace
}  // namespace eigendeg
