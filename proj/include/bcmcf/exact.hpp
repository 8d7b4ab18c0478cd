#pragma once

// Exact solver. For a multiplier lambda >= 0 the two lexicographic
// min-cost circulations under c + lambda * b (min-fee and max-fee tie-break)
// tell whether lambda lies below, inside or above the interval of optimal
// multipliers. A binary search over a grid fine enough to separate any two
// frontier slopes then either hits that interval or brackets the efficient
// edge crossing b = B, whose corners are interpolated.

#include <algorithm>
#include <functional>

#include "bcmcf/min_cost_circulation.hpp"

namespace bcmcf {

enum class Verdict { kBelow, kInside, kAbove };

inline const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kBelow: return "below";
    case Verdict::kInside: return "inside";
    case Verdict::kAbove: return "above";
  }
  return "?";
}

// Both flows are circulations on the instance passed to LambdaCallback and
// are optimal for c + lambda * b.
struct CallbackVerdict {
  Verdict kind;
  Flow min_fee;
  Flow max_fee;
};

inline CallbackVerdict LambdaCallback(const Instance& circulation, const Rational& lambda,
                                      const MccOptions& mcc = {}) {
  if (!circulation.return_arc) throw std::invalid_argument("LambdaCallback needs a return arc");
  if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
  CallbackVerdict v{Verdict::kInside,
                    MinCostCirculation(circulation,
                                       LambdaCost(circulation, lambda, FeeDirection::kMin), mcc),
                    MinCostCirculation(circulation,
                                       LambdaCost(circulation, lambda, FeeDirection::kMax), mcc)};
  const Rational budget = ToRational(circulation.budget);
  if (v.min_fee.fee > budget) {
    v.kind = Verdict::kBelow;
  } else if (v.max_fee.fee < budget && lambda > 0) {
    v.kind = Verdict::kAbove;
  }
  // lambda = 0 with slack budget: the budget row is inactive and min_fee is
  // optimal, so it stays Inside.
  return v;
}

// alpha * x1 + (1 - alpha) * x2 with fee exactly B, for b(x1) <= B <= b(x2).
inline Flow BudgetCombination(const Flow& x1, const Flow& x2, const Rational& budget) {
  if (x1.values.size() != x2.values.size()) throw std::invalid_argument("flow size mismatch");
  if (x1.fee > budget || x2.fee < budget) {
    throw std::invalid_argument("BudgetCombination requires b(x1) <= B <= b(x2), got b(x1) = " +
                                ToString(x1.fee) + ", B = " + ToString(budget) +
                                ", b(x2) = " + ToString(x2.fee));
  }
  if (x2.fee == x1.fee) return x1;
  const Rational alpha = (x2.fee - budget) / (x2.fee - x1.fee);
  return CombineFlows(x1, x2, alpha);
}

struct ExactOptions {
  MccOptions mcc;
  // Called after every callback evaluation, in probe order.
  std::function<void(const Rational& lambda, const CallbackVerdict&)> on_probe;
};

namespace detail {

inline Solution FinishExact(const Instance& inst, const Instance& circ, const Flow& x,
                            std::int64_t probes, Rational lambda) {
  Solution sol;
  sol.flow = MakeFlow(inst, StripReturnArc(circ, x).values);
  sol.objective = sol.flow.cost;
  sol.algorithm = Algorithm::kExact;
  sol.iterations = probes;
  sol.lambda = std::move(lambda);
  return sol;
}

inline Flow InsideWitness(const CallbackVerdict& v, const Rational& budget) {
  if (v.max_fee.fee <= budget) return v.min_fee;
  return BudgetCombination(v.min_fee, v.max_fee, budget);
}

}  // namespace detail

// Grid of reciprocal multipliers nu = 1/lambda = k / (2 cbar^2),
// k = 0..ceil(bbar * 2 cbar^2). Frontier slopes db/dc are fractions with
// denominators at most cbar, so distinct slopes are >= 1/cbar^2 apart and two
// adjacent grid points bracket at most one of them.
inline Solution SolveExact(const Instance& inst, const ExactOptions& options = {}) {
  CheckInstance(inst);
  if (inst.return_arc) throw std::invalid_argument("SolveExact expects an s-t instance");
  const Instance circ = AddReturnArc(inst);
  const Rational budget = ToRational(inst.budget);
  std::int64_t probes = 0;
  auto probe = [&](const Rational& lambda) {
    ++probes;
    CallbackVerdict v = LambdaCallback(circ, lambda, options.mcc);
    if (options.on_probe) options.on_probe(lambda, v);
    return v;
  };

  const CallbackVerdict at_zero = probe(Rational(0));
  if (at_zero.kind == Verdict::kInside) {
    return detail::FinishExact(inst, circ, detail::InsideWitness(at_zero, budget), probes,
                               Rational(0));
  }
  if (at_zero.kind == Verdict::kAbove) throw InternalError("lambda = 0 cannot be above");

  const Stats stats = InstanceStats(inst);
  const Rational scale = 2 * stats.cbar * stats.cbar;
  const BigInt top = Ceil(stats.bbar * scale);
  // Invariant: lo is Above (k = 0 means lambda = infinity, never probed),
  // hi is Below (k = top + 1 stands for lambda = 0).
  BigInt lo = 0, hi = top + 1;
  std::optional<Flow> above_corner;  // max-fee optimum at lo
  Flow below_corner = at_zero.min_fee;  // min-fee optimum at hi
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    const Rational lambda = scale / Rational(mid);
    CallbackVerdict v = probe(lambda);
    switch (v.kind) {
      case Verdict::kInside:
        return detail::FinishExact(inst, circ, detail::InsideWitness(v, budget), probes, lambda);
      case Verdict::kBelow:
        hi = mid;
        below_corner = std::move(v.min_fee);
        break;
      case Verdict::kAbove:
        lo = mid;
        above_corner = std::move(v.max_fee);
        break;
    }
  }
  if (!above_corner) throw InternalError("binary search never saw an Above verdict");

  const Flow x = BudgetCombination(*above_corner, below_corner, budget);
  const Rational slope =
      (above_corner->cost - below_corner.cost) / (below_corner.fee - above_corner->fee);
  Solution sol = detail::FinishExact(inst, circ, x, probes, slope);
  sol.frontier_edge = {{above_corner->cost, above_corner->fee},
                       {below_corner.cost, below_corner.fee}};
  return sol;
}

struct FrontierPoint {
  Rational cost;
  Rational fee;
  Flow witness;  // on the s-t instance
  // Multipliers for which the point minimizes c + lambda * b; an empty upper
  // end means unbounded.
  std::optional<Rational> lambda_low;
  std::optional<Rational> lambda_high;
};

// Slope db/dc of the segment between two frontier points.
inline Rational FrontierSlope(const FrontierPoint& a, const FrontierPoint& b) {
  return (b.fee - a.fee) / (b.cost - a.cost);
}

inline void AssignLambdaIntervals(std::vector<FrontierPoint>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].lambda_high.reset();
    points[i].lambda_low = Rational(0);
    if (i > 0) {
      points[i].lambda_high =
          (points[i - 1].cost - points[i].cost) / (points[i].fee - points[i - 1].fee);
    }
    if (i + 1 < points.size()) {
      points[i].lambda_low =
          (points[i].cost - points[i + 1].cost) / (points[i + 1].fee - points[i].fee);
    }
  }
}

// Extreme points of the lower-left Pareto frontier of {(c(x), b(x))}, by
// increasing fee. Dichotomic subdivision: the multiplier of the segment
// between two known points either exposes a point below it or proves the
// segment efficient. The number of extreme points is not polynomially
// bounded; meant for small instances.
inline std::vector<FrontierPoint> EnumerateFrontier(const Instance& inst,
                                                    const MccOptions& mcc = {}) {
  CheckInstance(inst);
  const Instance circ = AddReturnArc(inst);
  auto solve = [&](const Rational& lambda) {
    const Flow x = MinCostCirculation(circ, LambdaCost(circ, lambda, FeeDirection::kMin), mcc);
    FrontierPoint p;
    p.witness = MakeFlow(inst, StripReturnArc(circ, x).values);
    p.cost = p.witness.cost;
    p.fee = p.witness.fee;
    return p;
  };
  const Stats stats = InstanceStats(inst);
  std::vector<FrontierPoint> done;
  std::vector<FrontierPoint> pending{solve(Rational(0))};  // highest fee on top
  FrontierPoint left = solve(stats.cbar * stats.bbar + 1);
  if (left.cost == pending.back().cost && left.fee == pending.back().fee) {
    done.push_back(std::move(left));
  } else {
    // Walk segments left to right; `left` is final, pending.back() is the
    // next known point.
    for (;;) {
      const FrontierPoint& right = pending.back();
      const Rational lambda = (left.cost - right.cost) / (right.fee - left.fee);
      FrontierPoint mid = solve(lambda);
      if (mid.cost + lambda * mid.fee < left.cost + lambda * left.fee) {
        pending.push_back(std::move(mid));
        continue;
      }
      done.push_back(std::move(left));
      left = std::move(pending.back());
      pending.pop_back();
      if (pending.empty()) {
        done.push_back(std::move(left));
        break;
      }
    }
  }
  AssignLambdaIntervals(done);
  return done;
}

}  // namespace bcmcf
