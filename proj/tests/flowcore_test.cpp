#include <gtest/gtest.h>

#include "test_util.hpp"

namespace bcmcf {
namespace {

using testing::I0;
using testing::I1;
using testing::Values;

TEST(RationalTest, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(ParseRational("-6"), ToRational(-6));
  EXPECT_EQ(ParseRational("4/6"), MakeRational(2, 3));
  EXPECT_EQ(ParseRational("-0.125"), MakeRational(-1, 8));
  EXPECT_EQ(ParseRational("1.5e2"), ToRational(150));
  EXPECT_EQ(ParseRational("25e-2"), MakeRational(1, 4));
  EXPECT_EQ(ParseRational("010/012"), MakeRational(5, 6));  // decimal, not octal
  EXPECT_EQ(ParseRational("007.50"), MakeRational(15, 2));
  EXPECT_THROW(ParseRational("0x10"), std::invalid_argument);
  EXPECT_THROW(ParseRational("1/0"), std::invalid_argument);
  EXPECT_THROW(ParseRational("abc"), std::invalid_argument);
  EXPECT_THROW(ParseRational(""), std::invalid_argument);
}

TEST(RationalTest, StaysInLowestTerms) {
  const Rational q = MakeRational(10, -4);
  EXPECT_EQ(q.get_num(), -5);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(ToString(q), "-5/2");
  EXPECT_EQ(ToString(ToRational(7)), "7");
}

TEST(RationalTest, DecimalRenderingTruncates) {
  EXPECT_EQ(ToDecimal(MakeRational(-19, 2)), "-9.500000000");
  EXPECT_EQ(ToDecimal(MakeRational(2, 3), 3), "0.666");
  EXPECT_EQ(ToDecimal(MakeRational(-1, 3), 2), "-0.33");
}

TEST(RationalTest, RoundingHelpers) {
  EXPECT_EQ(Ceil(MakeRational(7, 2)), 4);
  EXPECT_EQ(Floor(MakeRational(-7, 2)), -4);
  EXPECT_EQ(FromDouble(0.375), MakeRational(3, 8));
  EXPECT_EQ(SnapDown(0.1234567891, 1000), MakeRational(123, 1000));
  EXPECT_EQ(SnapDown(-0.5, 10), MakeRational(-5, 10));
}

TEST(ParseInstanceTest, TranscribesI1) {
  const Instance inst = I1();
  EXPECT_EQ(inst.node_count, 2);
  EXPECT_EQ(inst.source, 0);
  EXPECT_EQ(inst.sink, 1);
  EXPECT_EQ(inst.budget, 2);
  ASSERT_EQ(inst.edges.size(), 2u);
  EXPECT_EQ(inst.edges[0], (EdgeData{0, 1, 2, -4, 2}));
  EXPECT_EQ(inst.edges[1], (EdgeData{0, 1, 2, -1, 0}));
  EXPECT_FALSE(inst.is_circulation());
}

TEST(ParseInstanceTest, TranscribesI0) {
  const Instance inst = I0();
  EXPECT_EQ(inst.budget, 0);
  ASSERT_EQ(inst.edges.size(), 1u);
  EXPECT_EQ(inst.edges[0], (EdgeData{0, 1, 1, 1, 0}));
}

TEST(ParseInstanceTest, SkipsCommentsAndBlankLines) {
  const Instance inst = ParseInstance(
      "c a comment\n# another\n\np bcmcf 3 1 5\nn 3 t\nn 2 s\n  a 2 3 4 -1 1  \n");
  EXPECT_EQ(inst.source, 1);
  EXPECT_EQ(inst.sink, 2);
  EXPECT_EQ(inst.edges[0], (EdgeData{1, 2, 4, -1, 1}));
}

int ErrorLine(const std::string& text) {
  try {
    ParseInstance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseInstanceTest, ReportsLineOfNegativeCapacity) {
  EXPECT_EQ(ErrorLine("p bcmcf 2 1 0\nn 1 s\nn 2 t\na 1 2 -1 0 0\n"), 4);
}

TEST(ParseInstanceTest, ReportsMalformedInput) {
  EXPECT_EQ(ErrorLine("p bcmcf 2 1 0\nn 1 s\nn 2 t\na 1 3 1 0 0\n"), 4);   // unknown node
  EXPECT_EQ(ErrorLine("p bcmcf 2 1 0\nn 1 s\nn 2 t\na 1 2 1 0 -2\n"), 4);  // negative fee
  EXPECT_EQ(ErrorLine("p bcmcf 2 1 -1\n"), 1);                             // negative budget
  EXPECT_EQ(ErrorLine("p bcmcf 2 1 0\nn 1 s\nn 2 t\na 1 2 x 0 0\n"), 4);   // not a number
  EXPECT_EQ(ErrorLine("p bcmcf 2 1 0\nn 1 s\nn 2 t\nq\n"), 4);             // unknown record
  EXPECT_EQ(ErrorLine("p bcmcf 2 1 0\nn 1 s\nn 2 t\na 1 2 1 0\n"), 4);     // short arc line
  EXPECT_NE(ErrorLine("p bcmcf 2 1 0\nn 2 t\na 1 2 1 0 0\n"), -1);          // missing source
  EXPECT_NE(ErrorLine("p bcmcf 2 1 0\nn 1 s\na 1 2 1 0 0\n"), -1);          // missing sink
  EXPECT_NE(ErrorLine("p bcmcf 2 2 0\nn 1 s\nn 2 t\na 1 2 1 0 0\n"), -1);   // too few arcs
  EXPECT_NE(ErrorLine("p bcmcf 2 1 0\nn 1 s\nn 1 t\na 1 2 1 0 0\n"), -1);   // s = t
  EXPECT_NE(ErrorLine("a 1 2 1 0 0\n"), -1);                                // no header
}

TEST(SerializeInstanceTest, RoundTripsGeneratedInstances) {
  testing::CorpusSpec spec;
  spec.count = 60;
  spec.max_nodes = 9;
  spec.max_edges = 20;
  spec.max_cost = 1000000;
  for (const Instance& inst : testing::Corpus(spec)) {
    const std::string text = SerializeInstance(inst);
    const Instance back = ParseInstance(text);
    EXPECT_EQ(back, inst);
    EXPECT_EQ(SerializeInstance(back), text);
  }
}

TEST(SerializeInstanceTest, RejectsCirculationInstances) {
  EXPECT_THROW(SerializeInstance(AddReturnArc(I1())), std::invalid_argument);
}

TEST(PreprocessTest, KeepsI1Unchanged) {
  const PreprocessResult pre = Preprocess(I1());
  EXPECT_EQ(pre.instance, I1());
  EXPECT_EQ(pre.original_edge, (std::vector<EdgeId>{0, 1}));
}

TEST(PreprocessTest, RemovesIsolatedNode) {
  Instance inst = I1();
  inst.node_count = 3;
  const PreprocessResult pre = Preprocess(inst);
  EXPECT_EQ(pre.instance, I1());
  EXPECT_EQ(pre.original_node, (std::vector<NodeId>{0, 1}));
}

TEST(PreprocessTest, RemovesDeadEndChainToFixedPoint) {
  // s -> a -> b with b a dead end (b != t); t is 4, reached by s -> t.
  const Instance inst = ParseInstance(
      "p bcmcf 4 3 1\nn 1 s\nn 4 t\na 1 2 1 -1 0\na 2 3 1 -1 0\na 1 4 1 -1 0\n");
  const PreprocessResult pre = Preprocess(inst);
  EXPECT_EQ(pre.instance.node_count, 2);
  ASSERT_EQ(pre.instance.edges.size(), 1u);
  EXPECT_EQ(pre.instance.edges[0], (EdgeData{0, 1, 1, -1, 0}));
  EXPECT_EQ(pre.original_edge, (std::vector<EdgeId>{2}));
  EXPECT_EQ(pre.original_node, (std::vector<NodeId>{0, 3}));
  // Re-scan: no surviving non-terminal node may lack in- or out-edges.
  const Instance& out = pre.instance;
  for (NodeId v = 0; v < out.node_count; ++v) {
    if (v == out.source || v == out.sink) continue;
    bool in = false, outgoing = false;
    for (const EdgeData& d : out.edges) {
      in |= d.head == v;
      outgoing |= d.tail == v;
    }
    EXPECT_TRUE(in && outgoing) << "node " << v;
  }
}

TEST(PreprocessTest, IsIdempotentAndLiftsFlows) {
  testing::CorpusSpec spec;
  spec.count = 100;
  spec.max_nodes = 8;
  for (const Instance& inst : testing::Corpus(spec)) {
    const PreprocessResult once = Preprocess(inst);
    const PreprocessResult twice = Preprocess(once.instance);
    EXPECT_EQ(twice.instance, once.instance);
    const Flow lifted = LiftFlow(inst, once, ZeroFlow(once.instance));
    EXPECT_EQ(lifted, ZeroFlow(inst));
  }
}

TEST(ValidateFlowTest, AcceptsBudgetTightFlow) {
  const ValidationReport r = ValidateFlow(I1(), Values({1, 2}));
  EXPECT_TRUE(r.feasible());
  EXPECT_EQ(r.cost, -6);
  EXPECT_EQ(r.fee, 2);
}

TEST(ValidateFlowTest, AcceptsZeroFlow) {
  const ValidationReport r = ValidateFlow(I1(), Values({0, 0}));
  EXPECT_TRUE(r.feasible());
  EXPECT_EQ(r.cost, 0);
  EXPECT_EQ(r.fee, 0);
}

TEST(ValidateFlowTest, ReportsBudgetViolation) {
  const ValidationReport r = ValidateFlow(I1(), Values({2, 2}));
  EXPECT_FALSE(r.feasible());
  EXPECT_TRUE(r.feasible_ignoring_budget());
  ASSERT_TRUE(r.budget_excess.has_value());
  EXPECT_EQ(*r.budget_excess, 2);
  EXPECT_EQ(r.fee, 4);
}

TEST(ValidateFlowTest, ReportsCapacityAndConservation) {
  const Instance inst = ParseInstance("p bcmcf 3 2 0\nn 1 s\nn 3 t\na 1 2 1 0 0\na 2 3 1 0 0\n");
  const std::vector<Rational> x{MakeRational(3, 2), MakeRational(1, 2)};
  const ValidationReport r = ValidateFlow(inst, x);
  ASSERT_EQ(r.capacity_violations.size(), 1u);
  EXPECT_EQ(r.capacity_violations[0].edge, 0u);
  ASSERT_EQ(r.conservation_violations.size(), 1u);
  EXPECT_EQ(r.conservation_violations[0].node, 1);
  EXPECT_EQ(r.conservation_violations[0].residual, 1);
  EXPECT_THROW(ValidateFlow(inst, Values({0})), std::invalid_argument);
}

TEST(ValidateFlowTest, ReportsNegativeFlowValue) {
  const Instance inst = ParseInstance("p bcmcf 2 2 0\nn 1 s\nn 2 t\na 2 1 1 -5 0\na 1 2 2 0 0\n");
  const ValidationReport back = ValidateFlow(inst, Values({1, 0}));
  EXPECT_FALSE(back.feasible_ignoring_budget());
  ASSERT_TRUE(back.negative_value.has_value());
  EXPECT_EQ(*back.negative_value, -1);
  EXPECT_TRUE(ValidateFlow(inst, Values({1, 1})).feasible());
}

TEST(ValidateFlowTest, CirculationsConserveAtTerminals) {
  const Instance circ = AddReturnArc(I1());
  EXPECT_TRUE(ValidateFlow(circ, Values({1, 2, 3})).feasible_ignoring_budget());
  EXPECT_FALSE(ValidateFlow(circ, Values({1, 2, 0})).feasible_ignoring_budget());
}

TEST(ValidateFlowTest, ZeroFlowAlwaysValidates) {
  testing::CorpusSpec spec;
  spec.count = 50;
  for (const Instance& inst : testing::Corpus(spec)) {
    const ValidationReport r = ValidateFlow(inst, ZeroFlow(inst));
    EXPECT_TRUE(r.feasible());
    EXPECT_EQ(r.cost, 0);
    EXPECT_EQ(r.fee, 0);
  }
}

TEST(InstanceStatsTest, MatchesDefinitions) {
  const Stats s1 = InstanceStats(I1());
  EXPECT_EQ(s1.cbar, 10);
  EXPECT_EQ(s1.bbar, 4);
  EXPECT_EQ(s1.largest_cost, 4);
  EXPECT_EQ(s1.largest_capacity, 2);
  EXPECT_EQ(s1.largest_number, 4);
  const Stats s0 = InstanceStats(I0());
  EXPECT_EQ(s0.cbar, 1);
  EXPECT_EQ(s0.bbar, 0);
  Instance empty = I0();
  empty.edges.clear();
  EXPECT_EQ(InstanceStats(empty).cbar, 0);
  EXPECT_EQ(InstanceStats(empty).bbar, 0);
}

TEST(InstanceStatsTest, BoundedBySizeTimesExtremes) {
  testing::CorpusSpec spec;
  spec.count = 200;
  for (const Instance& inst : testing::Corpus(spec)) {
    const Stats s = InstanceStats(inst);
    const auto m = static_cast<std::int64_t>(inst.edges.size());
    EXPECT_LE(s.cbar, ToRational(m * s.largest_capacity * s.largest_cost));
    EXPECT_LE(s.bbar, ToRational(m * s.largest_capacity * s.largest_number));
    EXPECT_GE(s.cbar, 0);
    EXPECT_GE(s.bbar, 0);
  }
}

TEST(AddReturnArcTest, AppendsTerminalArcWithTotalCapacity) {
  const Instance c1 = AddReturnArc(I1());
  ASSERT_EQ(c1.edges.size(), 3u);
  EXPECT_EQ(c1.edges[2], (EdgeData{1, 0, 4, 0, 0}));
  EXPECT_EQ(c1.return_arc, EdgeId{2});
  EXPECT_EQ(AddReturnArc(I0()).edges[1].capacity, 1);
}

TEST(AddReturnArcTest, ZeroCapacityInstanceAdmitsOnlyZeroCirculation) {
  const Instance inst =
      ParseInstance("p bcmcf 2 2 0\nn 1 s\nn 2 t\na 1 2 0 -3 0\na 2 1 0 -1 0\n");
  const Instance circ = AddReturnArc(inst);
  EXPECT_EQ(circ.edges.back().capacity, 0);
  EXPECT_EQ(EnumerateIntegralFlows(circ).size(), 1u);
}

TEST(FlowTest, CombineAndScaleAreExact) {
  const Instance inst = I1();
  const Flow x1 = MakeFlow(inst, Values({0, 2}));
  const Flow x2 = MakeFlow(inst, Values({2, 2}));
  const Flow mid = CombineFlows(x1, x2, MakeRational(1, 2));
  EXPECT_EQ(mid, MakeFlow(inst, Values({1, 2})));
  EXPECT_EQ(ScaleFlow(x2, MakeRational(1, 2)), MakeFlow(inst, Values({1, 1})));
  EXPECT_THROW(MakeFlow(inst, Values({1})), std::invalid_argument);
}

TEST(FlowTest, ReturnArcRoundTrip) {
  const Instance circ = AddReturnArc(I1());
  const Flow st = MakeFlow(I1(), Values({1, 2}));
  const Flow with = AttachReturnArc(circ, st);
  EXPECT_EQ(with.values.back(), 3);
  EXPECT_EQ(StripReturnArc(circ, with), st);
}

}  // namespace
}  // namespace bcmcf
