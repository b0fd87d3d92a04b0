#include "eigendeg/bounds.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eigendeg/error.hpp"
#include "eigendeg/generators.hpp"
#include "eigendeg/graph_io.hpp"

namespace eigendeg {
namespace {

const double kSqrt3 = std::sqrt(3.0);

Graph k4() { return gen_named(NamedKind::kComplete, 4); }
Graph c4() { return gen_named(NamedKind::kCycle, 4); }
Graph c5() { return gen_named(NamedKind::kCycle, 5); }
Graph p3() { return gen_named(NamedKind::kPath, 3); }
Graph star() { return gen_named(NamedKind::kStar, 4); }

TEST(In1, RegularPinchesToEquality) {
  const CheckOutcome o = check_in1(c4());
  EXPECT_TRUE(o.holds);
  EXPECT_NEAR(o.worst_slack, 0.0, 1e-12);
  for (const CheckDetail& d : o.details) EXPECT_NEAR(d.lhs, 2.0, 1e-12);
}

TEST(In1, Star) {
  const CheckOutcome o = check_in1(star());
  ASSERT_EQ(o.details.size(), 4u);
  const double expected[] = {kSqrt3, 1.0, 1.0, 4.0 - kSqrt3};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(o.details[k].lhs, expected[k], 1e-12);
  EXPECT_TRUE(o.holds);
  EXPECT_NEAR(o.worst_slack, 0.0, 1e-12);
  // k = 2 and k = 3 tie at the lower bound.
  ASSERT_TRUE(o.witness_k.has_value());
  EXPECT_TRUE(*o.witness_k == 2 || *o.witness_k == 3);
}

TEST(In1, SingleVertex) {
  const CheckOutcome o = check_in1(Graph(1));
  EXPECT_TRUE(o.holds);
  EXPECT_EQ(o.worst_slack, 0.0);
  EXPECT_EQ(o.witness_k, 1);
}

TEST(In2, K4Equality) {
  const CheckOutcome o = check_in2(k4());
  EXPECT_TRUE(o.holds);
  EXPECT_NEAR(o.worst_slack, 0.0, 1e-12);
  for (const CheckDetail& d : o.details) {
    EXPECT_NEAR(d.lhs, -1.0, 1e-12);
    EXPECT_EQ(d.rhs, -1.0);
  }
}

TEST(In2, Star) {
  // mu(G) = {r3, 0, 0, -r3}; complement K3 + K1 has mu = {2, 0, -1, -1}.
  const CheckOutcome o = check_in2(star());
  ASSERT_EQ(o.details.size(), 3u);
  EXPECT_NEAR(o.details[0].lhs, -1.0, 1e-12);     // k=2: 0 + (-1)
  EXPECT_NEAR(o.details[1].lhs, -1.0, 1e-12);     // k=3: 0 + (-1)
  EXPECT_NEAR(o.details[2].lhs, -kSqrt3, 1e-12);  // k=4: -r3 + 0
  EXPECT_EQ(o.details[0].rhs, -3.0);
  EXPECT_TRUE(o.holds);
  EXPECT_NEAR(o.worst_slack, 3.0 - kSqrt3, 1e-12);
  EXPECT_EQ(o.witness_k, 4);
}

TEST(In2, SingleVertexIsVacuous) {
  const CheckOutcome o = check_in2(Graph(1));
  EXPECT_TRUE(o.holds);
  EXPECT_TRUE(o.vacuous());
  EXPECT_TRUE(std::isinf(o.worst_slack) && o.worst_slack > 0);
}

TEST(ClassicUpper, Examples) {
  const CheckOutcome k = check_classic_upper(k4());
  EXPECT_NEAR(k.worst_slack, 0.0, 1e-12);

  const CheckOutcome s = check_classic_upper(star());
  EXPECT_NEAR(s.details[0].lhs, -1.0, 1e-12);  // mu_2(G) + mu_4(co) = 0 - 1
  EXPECT_NEAR(s.worst_slack, 0.0, 1e-12);

  // C5 is self-complementary: mu = {2, 2cos(2pi/5) x2, 2cos(4pi/5) x2}, so
  // every pair sum 2cos(2pi/5) + 2cos(4pi/5) is exactly -1.
  const double a = 2 * std::cos(2 * std::numbers::pi / 5);
  const double b = 2 * std::cos(4 * std::numbers::pi / 5);
  ASSERT_NEAR(a + b, -1.0, 1e-15);
  const CheckOutcome c = check_classic_upper(c5());
  EXPECT_TRUE(c.holds);
  for (const CheckDetail& d : c.details) EXPECT_NEAR(d.lhs, -1.0, 1e-12);
}

TEST(LaplacianComplement, Examples) {
  const CheckOutcome p = check_laplacian_complement(p3());
  ASSERT_EQ(p.details.size(), 2u);
  EXPECT_NEAR(p.details[0].lhs, 3.0, 1e-12);
  EXPECT_NEAR(p.details[1].lhs, 3.0, 1e-12);
  EXPECT_TRUE(p.holds);

  const CheckOutcome k2 = check_laplacian_complement(gen_named(NamedKind::kComplete, 2));
  EXPECT_NEAR(k2.details[0].lhs, 2.0, 1e-12);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CheckOutcome r = check_laplacian_complement(gen_gnp(20, 0.5, seed));
    EXPECT_GE(r.worst_slack, -1e-8);
  }
}

TEST(LaplacianComplement, SymmetricInComplement) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_gnp(15, 0.3, seed);
    EXPECT_NEAR(check_laplacian_complement(g).worst_slack,
                check_laplacian_complement(complement(g)).worst_slack, 1e-12);
  }
}

TEST(GroneMerris, Examples) {
  const CheckOutcome p = check_grone_merris(p3());
  EXPECT_NEAR(p.details[0].lhs, 3.0, 1e-12);
  EXPECT_EQ(p.details[0].rhs, 2.0);
  EXPECT_NEAR(check_grone_merris(k4()).worst_slack, 1.0, 1e-12);
  const CheckOutcome e = check_grone_merris(Graph(5));
  EXPECT_EQ(e.worst_slack, 0.0);
  EXPECT_TRUE(e.holds);
}

TEST(DegreeSpread, Examples) {
  const CheckOutcome p = check_degree_spread(p3());
  EXPECT_EQ(p.details[0].lhs, 3.0);
  EXPECT_NEAR(p.details[0].rhs, 5.0, 1e-12);
  const CheckOutcome k = check_degree_spread(k4());
  EXPECT_EQ(k.details[0].lhs, 3.0);
  EXPECT_NEAR(k.details[0].rhs, 4.0, 1e-12);
  const CheckOutcome c = check_degree_spread(c4());
  EXPECT_EQ(c.details[0].lhs, 3.0);
  EXPECT_NEAR(c.details[0].rhs, 6.0, 1e-12);
}

TEST(I1, Examples) {
  for (const Graph& g : {c4(), c5(), k4(), gen_paley(13)}) {
    const CheckOutcome o = check_i1(g);
    EXPECT_NEAR(o.details[0].lhs, 0.0, 1e-12);
    EXPECT_NEAR(o.worst_slack, 0.0, 1e-12);
  }
  // s = 3, m = 3, n = 4: lower = 9 / (32 sqrt 6), value = r3 - 3/2, upper = r3.
  const CheckOutcome s = check_i1(star());
  const double lower = 9.0 / (32.0 * std::sqrt(6.0));
  EXPECT_NEAR(lower, 0.11482, 1e-5);
  EXPECT_NEAR(s.details[0].lhs, kSqrt3 - 1.5, 1e-12);
  EXPECT_NEAR(s.details[0].lhs, 0.23205, 1e-5);
  EXPECT_NEAR(s.details[0].rhs, lower, 1e-12);
  EXPECT_NEAR(s.worst_slack, kSqrt3 - 1.5 - lower, 1e-12);
  const CheckOutcome e = check_i1(Graph(4));
  EXPECT_EQ(e.worst_slack, 0.0);
  EXPECT_TRUE(e.holds);
}

TEST(I2, Examples) {
  EXPECT_NEAR(check_i2(k4()).worst_slack, 0.0, 1e-12);
  const CheckOutcome s = check_i2(star());
  EXPECT_NEAR(s.details[0].rhs, -1.0 - 2.0 * std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(s.details[0].rhs, -5.899, 1e-3);
  EXPECT_NEAR(s.details[2].lhs, -kSqrt3, 1e-12);
  EXPECT_EQ(s.witness_k, 4);
  EXPECT_TRUE(s.holds);
  EXPECT_TRUE(check_i2(Graph(1)).vacuous());
}

TEST(I3, Examples) {
  const CheckOutcome k = check_i3(k4());
  EXPECT_NEAR(k.details[0].lhs, -1.0, 1e-12);
  EXPECT_NEAR(k.worst_slack, 0.0, 1e-12);

  const CheckOutcome s = check_i3(star());
  EXPECT_NEAR(s.details[0].lhs, -kSqrt3 - 1.0, 1e-12);
  EXPECT_NEAR(s.details[0].rhs, -1.0 - 9.0 / 128.0, 1e-15);
  EXPECT_TRUE(s.holds);

  const CheckOutcome c = check_i3(c5());
  EXPECT_NEAR(c.details[0].lhs, 4 * std::cos(4 * std::numbers::pi / 5), 1e-12);
  EXPECT_NEAR(c.details[0].lhs, -3.236, 1e-3);

  const CheckOutcome one = check_i3(Graph(1));
  EXPECT_TRUE(one.vacuous());
  EXPECT_TRUE(one.holds);
}

TEST(CheckAll, K4EqualityLedger) {
  const BoundSet set = check_all(k4());
  ASSERT_EQ(set.outcomes.size(), 9u);
  EXPECT_TRUE(set.all_hold());
  EXPECT_EQ(set.graph_id, graph6_encode(k4()));
  EXPECT_EQ(set.n, 4);
  EXPECT_EQ(set.m, 6);
  for (CheckId id : {CheckId::kIn1, CheckId::kIn2, CheckId::kClassicUpper,
                     CheckId::kLaplacianComplement, CheckId::kI1, CheckId::kI2,
                     CheckId::kI3}) {
    EXPECT_LE(std::abs(set.outcome(id).worst_slack), 1e-9) << to_string(id);
  }
  EXPECT_NEAR(set.outcome(CheckId::kGroneMerris).worst_slack, 1.0, 1e-12);
  EXPECT_NEAR(set.outcome(CheckId::kDegreeSpread).worst_slack, 1.0, 1e-12);
  for (std::size_t i = 0; i < kAllChecks.size(); ++i) {
    EXPECT_EQ(set.outcomes[i].id, kAllChecks[i]);
  }
}

TEST(CheckAll, ExhaustiveUpToFive) {
  std::size_t graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    enumerate_labeled(n, [&](const Graph& g) {
      ++graphs;
      const BoundSet set = check_all(g);
      for (const CheckOutcome& o : set.outcomes) {
        ASSERT_TRUE(o.holds) << graph6_encode(g) << " " << o.name();
        if (o.witness_k) {
          const int lo = o.details.front().k;
          const int hi = o.details.back().k;
          ASSERT_GE(*o.witness_k, lo);
          ASSERT_LE(*o.witness_k, hi);
        }
      }
    });
  }
  EXPECT_EQ(graphs, 1u + 2 + 8 + 64 + 1024);
}

TEST(CheckAll, ConsistencyProperties) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 15);
    const Graph g = gen_gnp(n, 0.1 + 0.02 * seed, seed);
    const SpectralContext ctx = make_spectral_context(g);
    const BoundSet set = check_all(ctx, kDefaultCompareTol);
    ASSERT_TRUE(set.all_hold());

    // delta(G) + delta(co G) - n bounds every pair sum from below.
    const double floor =
        ctx.stats.min_degree + ctx.complement_stats.min_degree - static_cast<double>(n);
    for (const CheckDetail& d : set.outcome(CheckId::kIn2).details) {
      EXPECT_GE(d.lhs, floor - 1e-9);
    }

    if (ctx.irregularity == 0.0) {
      const CheckDetail& i1 = set.outcome(CheckId::kI1).details[0];
      EXPECT_NEAR(i1.lhs, 0.0, 1e-9);
      EXPECT_EQ(set.outcome(CheckId::kI2).details[0].rhs, -1.0);
    }
  }
}

TEST(CheckAll, SharesContextWithStandaloneChecks) {
  const Graph g = gen_gnp(12, 0.45, 77);
  const BoundSet set = check_all(g);
  EXPECT_EQ(set.outcome(CheckId::kI3).worst_slack, check_i3(g).worst_slack);
  EXPECT_EQ(set.outcome(CheckId::kIn1).witness_k, check_in1(g).witness_k);
}

TEST(CheckAll, RejectsNonPositiveTolerance) {
  EXPECT_THROW(check_all(k4(), 0.0), Error);
}

TEST(ScanLabeled, MatchesDirectLoopAndIsThreadIndependent) {
  const ScanSummary one = scan_labeled(5, kDefaultCompareTol, 1);
  const ScanSummary four = scan_labeled(5, kDefaultCompareTol, 4);
  EXPECT_EQ(one.graphs, 1024u);
  EXPECT_EQ(one.violations(), 0u);
  ASSERT_EQ(one.checks.size(), four.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    EXPECT_EQ(one.checks[i].min_slack, four.checks[i].min_slack);
    EXPECT_EQ(one.checks[i].argmin_mask, four.checks[i].argmin_mask);
    EXPECT_EQ(one.checks[i].witness_k, four.checks[i].witness_k);
  }

  std::vector<double> direct(kAllChecks.size(), INFINITY);
  enumerate_labeled(5, [&](const Graph& g) {
    const BoundSet set = check_all(g);
    for (std::size_t i = 0; i < direct.size(); ++i)
      direct[i] = std::min(direct[i], set.outcomes[i].worst_slack);
  });
  for (std::size_t i = 0; i < direct.size(); ++i) {
    EXPECT_EQ(one.checks[i].min_slack, direct[i]);
  }
}

TEST(ScanLabeled, SingleVertexIsVacuousWhereExpected) {
  const ScanSummary s = scan_labeled(1);
  EXPECT_EQ(s.graphs, 1u);
  for (const ScanCheckSummary& c : s.checks) {
    const bool vacuous = c.id == CheckId::kIn2 || c.id == CheckId::kClassicUpper ||
                         c.id == CheckId::kLaplacianComplement || c.id == CheckId::kI2 ||
                         c.id == CheckId::kI3;
    EXPECT_EQ(!c.witness_k.has_value(), vacuous) << to_string(c.id);
  }
  EXPECT_THROW(scan_labeled(9), Error);
}

}  // namespace
}  // namespace eigendeg
