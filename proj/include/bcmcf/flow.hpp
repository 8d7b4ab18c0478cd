#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcmcf/instance.hpp"

namespace bcmcf {

// Per-edge flow values with exact aggregates c(x) = sum c_e x_e and
// b(x) = sum b_e x_e.
struct Flow {
  std::vector<Rational> values;
  Rational cost;
  Rational fee;

  friend bool operator==(const Flow&, const Flow&) = default;
};

inline Flow MakeFlow(const Instance& inst, std::vector<Rational> values) {
  if (values.size() != inst.edges.size()) {
    throw std::invalid_argument("flow has " + std::to_string(values.size()) +
                                " values, instance has " + std::to_string(inst.edges.size()) +
                                " edges");
  }
  Flow x;
  for (std::size_t e = 0; e < values.size(); ++e) {
    x.cost += ToRational(inst.edges[e].cost) * values[e];
    x.fee += ToRational(inst.edges[e].fee) * values[e];
  }
  x.values = std::move(values);
  return x;
}

inline Flow ZeroFlow(const Instance& inst) {
  return MakeFlow(inst, std::vector<Rational>(inst.edges.size()));
}

inline Flow ScaleFlow(const Flow& x, const Rational& factor) {
  Flow out = x;
  for (Rational& v : out.values) v *= factor;
  out.cost *= factor;
  out.fee *= factor;
  return out;
}

// alpha * x1 + (1 - alpha) * x2.
inline Flow CombineFlows(const Flow& x1, const Flow& x2, const Rational& alpha) {
  if (x1.values.size() != x2.values.size()) throw std::invalid_argument("flow size mismatch");
  const Rational beta = 1 - alpha;
  Flow out;
  out.values.resize(x1.values.size());
  for (std::size_t e = 0; e < out.values.size(); ++e) {
    out.values[e] = alpha * x1.values[e] + beta * x2.values[e];
  }
  out.cost = alpha * x1.cost + beta * x2.cost;
  out.fee = alpha * x1.fee + beta * x2.fee;
  return out;
}

// Drops the return arc's value so the flow lives on the original edges.
inline Flow StripReturnArc(const Instance& circulation, const Flow& x) {
  if (!circulation.return_arc) return x;
  Flow out = x;
  out.values.erase(out.values.begin() + static_cast<std::ptrdiff_t>(*circulation.return_arc));
  return out;
}

// Inverse of StripReturnArc: the return arc carries the s-t value.
inline Flow AttachReturnArc(const Instance& circulation, const Flow& x) {
  if (!circulation.return_arc) return x;
  Flow out = x;
  const EdgeId r = *circulation.return_arc;
  Rational value;
  for (EdgeId e = 0; e < x.values.size(); ++e) {
    const EdgeId id = e < r ? e : e + 1;
    if (circulation.edges[id].tail == circulation.source) value += x.values[e];
    if (circulation.edges[id].head == circulation.source) value -= x.values[e];
  }
  out.values.insert(out.values.begin() + static_cast<std::ptrdiff_t>(r), value);
  return out;
}

struct CapacityViolation {
  EdgeId edge;
  Rational value;  // offending x_e, either < 0 or > u_e
};

struct ConservationViolation {
  NodeId node;
  Rational residual;  // inflow - outflow
};

struct ValidationReport {
  std::vector<CapacityViolation> capacity_violations;
  std::vector<ConservationViolation> conservation_violations;
  std::optional<Rational> budget_excess;   // b(x) - B when positive
  std::optional<Rational> negative_value;  // net s-t value when below zero
  Rational cost;
  Rational fee;

  bool feasible() const { return feasible_ignoring_budget() && !budget_excess; }
  bool feasible_ignoring_budget() const {
    return capacity_violations.empty() && conservation_violations.empty() && !negative_value;
  }
};

// Checks 0 <= x_e <= u_e, conservation at every node except s and t (every
// node for circulation instances), a nonnegative s-t value, and b(x) <= B. Cost and fee are recomputed
// from the values, not taken from x.
inline ValidationReport ValidateFlow(const Instance& inst, std::span<const Rational> x) {
  if (x.size() != inst.edges.size()) {
    throw std::invalid_argument("flow arity " + std::to_string(x.size()) + " does not match " +
                                std::to_string(inst.edges.size()) + " edges");
  }
  ValidationReport report;
  std::vector<Rational> balance(static_cast<std::size_t>(inst.node_count));
  for (EdgeId e = 0; e < x.size(); ++e) {
    const EdgeData& d = inst.edges[e];
    if (x[e] < 0 || x[e] > d.capacity) report.capacity_violations.push_back({e, x[e]});
    balance[static_cast<std::size_t>(d.head)] += x[e];
    balance[static_cast<std::size_t>(d.tail)] -= x[e];
    report.cost += ToRational(d.cost) * x[e];
    report.fee += ToRational(d.fee) * x[e];
  }
  for (NodeId v = 0; v < inst.node_count; ++v) {
    if (!inst.is_circulation() && (v == inst.source || v == inst.sink)) continue;
    if (balance[static_cast<std::size_t>(v)] != 0) {
      report.conservation_violations.push_back({v, balance[static_cast<std::size_t>(v)]});
    }
  }
  if (!inst.is_circulation()) {
    const Rational& value = balance[static_cast<std::size_t>(inst.sink)];
    if (value < 0 && report.conservation_violations.empty()) report.negative_value = value;
  }
  if (report.fee > inst.budget) report.budget_excess = report.fee - inst.budget;
  return report;
}

inline ValidationReport ValidateFlow(const Instance& inst, const Flow& x) {
  return ValidateFlow(inst, std::span<const Rational>(x.values));
}

enum class Algorithm { kExact, kGk, kGkAcyclic, kOracle };

inline std::string AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kExact: return "exact";
    case Algorithm::kGk: return "gk";
    case Algorithm::kGkAcyclic: return "gk-acyclic";
    case Algorithm::kOracle: return "oracle";
  }
  return "unknown";
}

inline std::optional<Algorithm> AlgorithmFromName(const std::string& name) {
  for (Algorithm a : {Algorithm::kExact, Algorithm::kGk, Algorithm::kGkAcyclic, Algorithm::kOracle}) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

struct ObjectivePoint {
  Rational cost;
  Rational fee;
  friend bool operator==(const ObjectivePoint&, const ObjectivePoint&) = default;
};

struct Solution {
  Flow flow;
  Rational objective;
  Algorithm algorithm = Algorithm::kExact;
  std::int64_t iterations = 0;
  std::optional<Rational> lambda;
  // Corners of the efficient edge the optimum was interpolated on.
  std::optional<std::pair<ObjectivePoint, ObjectivePoint>> frontier_edge;
};

}  // namespace bcmcf
