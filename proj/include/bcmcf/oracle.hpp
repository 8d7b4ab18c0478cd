#pragma once

// Brute-force ground truth for small instances. Enumerates every integral
// flow; since the flow polytope without the budget row has integral
// vertices, the budget-constrained optimum is a convex combination of at most
// two integral flows and the Pareto frontier is the lower-left hull of their
// (cost, fee) points. Used by tests and the CLI only, never by the solvers.

#include <functional>
#include <map>

#include "bcmcf/exact.hpp"

namespace bcmcf {

inline constexpr double kDefaultEnumerationGuard = 1e7;

class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(double size, double guard)
      : std::runtime_error("enumeration space " + std::to_string(size) + " exceeds guard " +
                           std::to_string(guard)) {}
};

inline double EnumerationSpace(const Instance& inst) {
  double size = 1;
  for (const EdgeData& d : inst.edges) size *= static_cast<double>(d.capacity) + 1;
  return size;
}

// Calls visit once per integral x with 0 <= x <= u satisfying conservation
// (at every node for circulation instances, else away from s and t with a
// nonnegative s-t value).
inline std::int64_t ForEachIntegralFlow(
    const Instance& inst, const std::function<void(std::span<const std::int64_t>)>& visit,
    double guard = kDefaultEnumerationGuard) {
  CheckInstance(inst);
  if (const double size = EnumerationSpace(inst); size > guard) throw GuardExceeded(size, guard);
  const auto n = static_cast<std::size_t>(inst.node_count);
  const std::size_t m = inst.edges.size();
  std::vector<bool> conserve(n, true);
  if (!inst.is_circulation()) {
    conserve[static_cast<std::size_t>(inst.source)] = false;
    conserve[static_cast<std::size_t>(inst.sink)] = false;
  }
  std::vector<std::int64_t> balance(n), rem_in(n), rem_out(n), x(m);
  for (const EdgeData& d : inst.edges) {
    if (d.tail == d.head) continue;
    rem_out[static_cast<std::size_t>(d.tail)] += d.capacity;
    rem_in[static_cast<std::size_t>(d.head)] += d.capacity;
  }
  auto can_close = [&](std::size_t v) {
    return !conserve[v] || (balance[v] + rem_in[v] >= 0 && balance[v] - rem_out[v] <= 0);
  };
  std::int64_t count = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t e) {
    if (e == m) {
      if (!inst.is_circulation() && balance[static_cast<std::size_t>(inst.sink)] < 0) return;
      ++count;
      visit(x);
      return;
    }
    const EdgeData& d = inst.edges[e];
    const auto tail = static_cast<std::size_t>(d.tail);
    const auto head = static_cast<std::size_t>(d.head);
    const bool loop = tail == head;
    if (!loop) {
      rem_out[tail] -= d.capacity;
      rem_in[head] -= d.capacity;
    }
    for (std::int64_t k = 0; k <= d.capacity; ++k) {
      x[e] = k;
      if (!loop) {
        balance[tail] -= k;
        balance[head] += k;
      }
      if (loop || (can_close(tail) && can_close(head))) assign(e + 1);
      if (!loop) {
        balance[tail] += k;
        balance[head] -= k;
      }
    }
    x[e] = 0;
    if (!loop) {
      rem_out[tail] += d.capacity;
      rem_in[head] += d.capacity;
    }
  };
  assign(0);
  return count;
}

inline std::vector<Flow> EnumerateIntegralFlows(const Instance& inst,
                                                double guard = kDefaultEnumerationGuard) {
  std::vector<Flow> flows;
  ForEachIntegralFlow(
      inst,
      [&](std::span<const std::int64_t> x) {
        std::vector<Rational> values;
        values.reserve(x.size());
        for (std::int64_t v : x) values.push_back(ToRational(v));
        flows.push_back(MakeFlow(inst, std::move(values)));
      },
      guard);
  return flows;
}

// Distinct (cost, fee) pairs of all integral flows, each with one witness.
struct PointCloud {
  struct Point {
    std::int64_t cost;
    std::int64_t fee;
    std::vector<std::int64_t> witness;
  };
  std::vector<Point> points;  // sorted by (fee, cost)
  std::int64_t flows_enumerated = 0;
};

inline PointCloud BuildPointCloud(const Instance& inst, double guard = kDefaultEnumerationGuard) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int64_t>> seen;
  PointCloud cloud;
  cloud.flows_enumerated = ForEachIntegralFlow(
      inst,
      [&](std::span<const std::int64_t> x) {
        std::int64_t cost = 0, fee = 0;
        for (std::size_t e = 0; e < x.size(); ++e) {
          cost += inst.edges[e].cost * x[e];
          fee += inst.edges[e].fee * x[e];
        }
        seen.try_emplace({fee, cost}, x.begin(), x.end());
      },
      guard);
  for (auto& [key, witness] : seen) cloud.points.push_back({key.second, key.first, witness});
  return cloud;
}

namespace detail {

inline Flow WitnessFlow(const Instance& inst, const std::vector<std::int64_t>& x) {
  std::vector<Rational> values;
  values.reserve(x.size());
  for (std::int64_t v : x) values.push_back(ToRational(v));
  return MakeFlow(inst, std::move(values));
}

// Cheapest point per fee level, by increasing fee.
inline std::vector<const PointCloud::Point*> CheapestPerFee(const PointCloud& cloud) {
  std::vector<const PointCloud::Point*> out;
  for (const auto& p : cloud.points) {
    if (out.empty() || out.back()->fee != p.fee) out.push_back(&p);  // sorted by (fee, cost)
  }
  return out;
}

}  // namespace detail

inline Solution OracleOptimum(const Instance& inst, double guard = kDefaultEnumerationGuard) {
  const PointCloud cloud = BuildPointCloud(inst, guard);
  const auto levels = detail::CheapestPerFee(cloud);
  const Rational budget = ToRational(inst.budget);
  const PointCloud::Point* best_single = nullptr;
  for (const auto* p : levels) {
    if (p->fee <= inst.budget && (!best_single || p->cost < best_single->cost)) best_single = p;
  }
  Rational best = ToRational(best_single->cost);  // fee 0 always exists
  const PointCloud::Point* pair_low = nullptr;
  const PointCloud::Point* pair_high = nullptr;
  for (const auto* p : levels) {
    if (p->fee > inst.budget) continue;
    for (const auto* q : levels) {
      if (q->fee <= inst.budget) continue;
      const Rational t = (budget - p->fee) / Rational(q->fee - p->fee);
      const Rational value = ToRational(p->cost) + t * Rational(q->cost - p->cost);
      if (value < best) {
        best = value;
        pair_low = p;
        pair_high = q;
      }
    }
  }
  Solution sol;
  sol.algorithm = Algorithm::kOracle;
  sol.iterations = cloud.flows_enumerated;
  if (pair_low) {
    sol.flow = BudgetCombination(detail::WitnessFlow(inst, pair_low->witness),
                                 detail::WitnessFlow(inst, pair_high->witness), budget);
    sol.frontier_edge = {{ToRational(pair_low->cost), ToRational(pair_low->fee)},
                         {ToRational(pair_high->cost), ToRational(pair_high->fee)}};
  } else {
    sol.flow = detail::WitnessFlow(inst, best_single->witness);
  }
  sol.objective = sol.flow.cost;
  if (sol.objective != best) throw InternalError("oracle witness disagrees with its value");
  return sol;
}

inline std::vector<FrontierPoint> OracleFrontier(const Instance& inst,
                                                 double guard = kDefaultEnumerationGuard) {
  const PointCloud cloud = BuildPointCloud(inst, guard);
  const auto levels = detail::CheapestPerFee(cloud);
  // Lower convex hull of (fee, cost); collinear points are dropped.
  std::vector<const PointCloud::Point*> hull;
  auto cross = [](const PointCloud::Point* o, const PointCloud::Point* a,
                  const PointCloud::Point* b) {
    return (a->fee - o->fee) * (b->cost - o->cost) - (a->cost - o->cost) * (b->fee - o->fee);
  };
  for (const auto* p : levels) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  // Keep the decreasing-cost part, up to the first cheapest point.
  std::size_t end = 1;
  while (end < hull.size() && hull[end]->cost < hull[end - 1]->cost) ++end;
  std::vector<FrontierPoint> out;
  for (std::size_t i = 0; i < end; ++i) {
    FrontierPoint fp;
    fp.witness = detail::WitnessFlow(inst, hull[i]->witness);
    fp.cost = fp.witness.cost;
    fp.fee = fp.witness.fee;
    out.push_back(std::move(fp));
  }
  AssignLambdaIntervals(out);
  return out;
}

}  // namespace bcmcf
