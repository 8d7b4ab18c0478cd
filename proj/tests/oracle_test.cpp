#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "test_util.hpp"

namespace bcmcf {
namespace {

using testing::I0;
using testing::I1;
using testing::Values;
using testing::WithBudget;

TEST(EnumerateIntegralFlowsTest, SingleEdge) {
  const auto flows = EnumerateIntegralFlows(I0());
  ASSERT_EQ(flows.size(), 2u);
  EXPECT_EQ(flows[0].values, Values({0}));
  EXPECT_EQ(flows[1].values, Values({1}));
}

TEST(EnumerateIntegralFlowsTest, ParallelEdgesAreUncoupled) {
  const auto flows = EnumerateIntegralFlows(I1());
  EXPECT_EQ(flows.size(), 9u);
  std::set<std::pair<Rational, Rational>> seen;
  for (const Flow& x : flows) seen.emplace(x.values[0], x.values[1]);
  EXPECT_EQ(seen.size(), 9u);
}

TEST(EnumerateIntegralFlowsTest, CirculationFormConservesAtTerminals) {
  const auto flows = EnumerateIntegralFlows(AddReturnArc(I1()));
  EXPECT_EQ(flows.size(), 9u);
  for (const Flow& x : flows) EXPECT_EQ(x.values[2], x.values[0] + x.values[1]);
}

TEST(EnumerateIntegralFlowsTest, PrunesByConservation) {
  // s -> a (u 3), a -> t (u 1): only x = (k, k) with k <= 1 survive.
  const Instance inst = ParseInstance("p bcmcf 3 2 0\nn 1 s\nn 3 t\na 1 2 3 0 0\na 2 3 1 0 0\n");
  EXPECT_EQ(EnumerateIntegralFlows(inst).size(), 2u);
}

TEST(EnumerateIntegralFlowsTest, ExcludesNegativeFlowValue) {
  // t -> s (u 1, c -5) and s -> t (u 2): value t->s alone would be -1.
  const Instance inst = ParseInstance("p bcmcf 2 2 0\nn 1 s\nn 2 t\na 2 1 1 -5 0\na 1 2 2 0 0\n");
  EXPECT_EQ(EnumerateIntegralFlows(inst).size(), 5u);
  EXPECT_EQ(OracleOptimum(inst).objective, -5);
  EXPECT_EQ(SolveExact(inst).objective, -5);
}

TEST(EnumerateIntegralFlowsTest, GuardIsEnforced) {
  std::string text = "p bcmcf 2 8 0\nn 1 s\nn 2 t\n";
  for (int i = 0; i < 8; ++i) text += "a 1 2 9 0 0\n";
  const Instance inst = ParseInstance(text);
  EXPECT_THROW(EnumerateIntegralFlows(inst), GuardExceeded);
  EXPECT_THROW(OracleOptimum(inst), GuardExceeded);
  EXPECT_THROW(OracleFrontier(inst, 100), GuardExceeded);
  const Instance two = ParseInstance("p bcmcf 2 2 0\nn 1 s\nn 2 t\na 1 2 9 0 0\na 1 2 9 0 0\n");
  EXPECT_THROW(ForEachIntegralFlow(two, [](auto) {}, 99), GuardExceeded);
  EXPECT_EQ(ForEachIntegralFlow(two, [](auto) {}, 100), 100);
}

TEST(OracleOptimumTest, Examples) {
  const Solution i1 = OracleOptimum(I1());
  EXPECT_EQ(i1.objective, -6);
  EXPECT_EQ(i1.flow.values, Values({1, 2}));
  EXPECT_EQ(i1.algorithm, Algorithm::kOracle);
  EXPECT_EQ(i1.iterations, 9);
  EXPECT_EQ(OracleOptimum(I0()).objective, 0);
  const Solution zero = OracleOptimum(WithBudget(I1(), 0));
  EXPECT_EQ(zero.objective, -2);
  EXPECT_EQ(zero.flow.values, Values({0, 2}));
}

TEST(OracleFrontierTest, Examples) {
  const auto f = OracleFrontier(I1());
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].cost, -2);
  EXPECT_EQ(f[0].fee, 0);
  EXPECT_EQ(f[1].cost, -10);
  EXPECT_EQ(f[1].fee, 4);
  ASSERT_EQ(OracleFrontier(I0()).size(), 1u);
  Instance negated = I1();
  for (EdgeData& d : negated.edges) d.cost = -d.cost;
  const auto g = OracleFrontier(negated);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].cost, 0);
  EXPECT_EQ(g[0].fee, 0);
}

// Properties of the hull against its own point cloud: convexity, nothing
// strictly below any hull edge, and the oracle value lower-bounding every
// budget-feasible integral flow.
TEST(OracleFrontierTest, HullProperties) {
  testing::CorpusSpec spec;
  spec.count = 80;
  spec.seed = 5;
  for (const Instance& inst : testing::Corpus(spec)) {
    const auto hull = OracleFrontier(inst);
    const PointCloud cloud = BuildPointCloud(inst);
    EXPECT_TRUE(std::any_of(cloud.points.begin(), cloud.points.end(),
                            [](const auto& p) { return p.cost == 0 && p.fee == 0; }));
    for (std::size_t i = 1; i < hull.size(); ++i) {
      EXPECT_GT(hull[i].fee, hull[i - 1].fee);
      EXPECT_LT(hull[i].cost, hull[i - 1].cost);
      if (i >= 2) {
        EXPECT_LT(FrontierSlope(hull[i - 1], hull[i]), FrontierSlope(hull[i - 2], hull[i - 1]));
      }
    }
    for (const auto& p : cloud.points) {
      const Rational c = p.cost, b = p.fee;
      for (std::size_t i = 1; i < hull.size(); ++i) {
        if (b < hull[i - 1].fee || b > hull[i].fee) continue;
        const Rational t = (b - hull[i - 1].fee) / (hull[i].fee - hull[i - 1].fee);
        EXPECT_GE(c, hull[i - 1].cost + t * (hull[i].cost - hull[i - 1].cost));
      }
      if (!hull.empty() && b >= hull.back().fee) {
        EXPECT_GE(c, hull.back().cost);
      }
    }
    const Solution opt = OracleOptimum(inst);
    EXPECT_TRUE(ValidateFlow(inst, opt.flow).feasible());
    for (const auto& p : cloud.points) {
      if (p.fee <= inst.budget) {
        EXPECT_LE(opt.objective, p.cost);
      }
    }
  }
}

}  // namespace
}  // namespace bcmcf
