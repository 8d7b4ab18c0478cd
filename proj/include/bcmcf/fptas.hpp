#pragma once

// Packing-LP approximation (Garg-Koenemann) on the cycle formulation of the
// circulation form: columns are negative-cost cycles C with profit -c(C),
// rows are the edge capacities and the budget. The dual keeps a length y_e
// per edge and mu for the budget; the most violated dual constraint is the
// cycle minimizing sum_{e in C} (b_e mu + y_e) / sum_{e in C} (-c_e).
//
// Dual lengths live in binary64; the primal is accumulated exactly from the
// routed cycles, so conservation holds exactly, and is then scaled into
// exact feasibility.

#include <functional>

#include "bcmcf/flow.hpp"
#include "bcmcf/ratio.hpp"

namespace bcmcf {

enum class GkOracle { kCycle, kDagPath };

struct DualState {
  std::vector<double> y;  // per row edge of the reduced graph, in scaled units
  double mu = 0;          // budget length, same units; 0 without a budget row
  double log_scale = 0;   // true lengths are exp(log_scale) times y and mu
  double log_dual_objective = 0;  // log(B mu + sum_e u_e y_e), true units
};

// Passed to GkOptions::on_iteration after each oracle call that routes flow.
struct GkIteration {
  const Instance& graph;  // reduced instance the oracle ran on
  const DualState& dual;
  std::span<const double> num;  // oracle lengths per reduced edge
  std::span<const double> den;
  const RatioResult<double>& chosen;  // arcs index reduced edges
  double routed;
};

struct GkOptions {
  GkOracle oracle = GkOracle::kCycle;
  std::optional<std::int64_t> max_iterations;
  std::function<void(const GkIteration&)> on_iteration;
};

namespace detail {

inline constexpr long kFlowResolution = 1'000'000'000;       // routed amounts
inline constexpr long kScaleResolution = 1'000'000'000'000;  // final scaling

inline Solution RunGk(const Instance& inst, double epsilon, const GkOptions& options) {
  CheckInstance(inst);
  if (inst.return_arc) throw std::invalid_argument("expected an s-t instance");
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const bool dag = options.oracle == GkOracle::kDagPath;
  if (dag && !IsAcyclic(inst.node_count, InstanceArcs(inst))) {
    throw std::invalid_argument("graph contains a directed cycle; use the cycle oracle (gk)");
  }
  const bool budget_row = inst.budget > 0;
  // Zero-capacity edges carry nothing; without budget, fee edges are closed.
  std::vector<EdgeId> kept;
  Instance graph = FilterEdges(
      inst, [&](EdgeId, const EdgeData& d) { return d.capacity > 0 && (budget_row || d.fee == 0); },
      &kept);
  const std::size_t m = graph.edges.size();
  const double eps = epsilon / (dag ? 3.0 : 4.0);
  const double rows = static_cast<double>(m + (budget_row ? 1 : 0));
  const double budget = static_cast<double>(inst.budget);

  Solution sol;
  sol.algorithm = dag ? Algorithm::kGkAcyclic : Algorithm::kGk;
  sol.flow = ZeroFlow(inst);
  sol.objective = 0;
  if (m == 0) return sol;

  const double log_delta = std::log1p(eps) - std::log((1 + eps) * rows) / eps;
  const double phase_length = (std::log1p(eps) - log_delta) / std::log1p(eps);
  const std::int64_t cap = options.max_iterations.value_or(
      static_cast<std::int64_t>(rows) * static_cast<std::int64_t>(std::ceil(phase_length)) * 4);

  DualState dual;
  dual.y.resize(m);
  double scaled_objective = 0;
  for (std::size_t e = 0; e < m; ++e) {
    dual.y[e] = 1.0 / static_cast<double>(graph.edges[e].capacity);
    scaled_objective += 1;
  }
  if (budget_row) {
    dual.mu = 1.0 / budget;
    scaled_objective += 1;
  }
  dual.log_scale = log_delta;
  dual.log_dual_objective = std::log(scaled_objective) + dual.log_scale;

  // Oracle graph: reduced edges, plus the return arc for the cycle oracle.
  std::vector<Arc> arcs = InstanceArcs(graph);
  if (!dag) arcs.push_back({graph.sink, graph.source});
  std::vector<double> num(arcs.size(), 0), den(arcs.size(), 0);
  for (std::size_t e = 0; e < m; ++e) den[e] = -static_cast<double>(graph.edges[e].cost);

  std::vector<Rational> routed(m);
  RatioHint hint;
  std::int64_t iterations = 0;
  while (dual.log_dual_objective < 0) {
    for (std::size_t e = 0; e < m; ++e) {
      num[e] = static_cast<double>(graph.edges[e].fee) * dual.mu + dual.y[e];
    }
    std::optional<RatioResult<double>> found;
    if (dag) {
      found = MinRatioPathDagExact(graph.node_count, arcs, num, den, graph.source, graph.sink);
    } else {
      found = MinRatioCycle(graph.node_count, arcs, num, den, eps, &hint);
    }
    if (!found) break;
    if (++iterations > cap) throw InternalError("packing iteration cap exceeded");

    std::vector<std::size_t> edges;
    for (std::size_t a : found->arcs) {
      if (a < m) edges.push_back(a);
    }
    double fee = 0, f = std::numeric_limits<double>::infinity();
    for (std::size_t e : edges) {
      f = std::min(f, static_cast<double>(graph.edges[e].capacity));
      fee += static_cast<double>(graph.edges[e].fee);
    }
    if (budget_row && fee > 0) f = std::min(f, budget / fee);

    const Rational amount = SnapDown(f, kFlowResolution);
    for (std::size_t e : edges) routed[e] += amount;
    double objective = 0;
    for (std::size_t e : edges) {
      dual.y[e] *= 1 + eps * f / static_cast<double>(graph.edges[e].capacity);
    }
    if (budget_row) dual.mu *= 1 + eps * f * fee / budget;
    for (std::size_t e = 0; e < m; ++e) {
      objective += static_cast<double>(graph.edges[e].capacity) * dual.y[e];
    }
    if (budget_row) objective += budget * dual.mu;
    hint.lower_bound = found->lower_bound;
    hint.candidate = found->arcs;
    if (objective > 1e100) {
      // Renormalize scaled lengths; ratios and the hint scale along.
      for (double& y : dual.y) y /= objective;
      dual.mu /= objective;
      hint.lower_bound /= objective;
      dual.log_scale += std::log(objective);
      objective = 1;
    }
    dual.log_dual_objective = std::log(objective) + dual.log_scale;
    if (options.on_iteration) {
      options.on_iteration(GkIteration{graph, dual, std::span<const double>(num.data(), m),
                                       std::span<const double>(den.data(), m), *found, f});
    }
  }
  sol.iterations = iterations;
  if (iterations == 0) return sol;

  // Scale by 1 / log_{1+eps}((1+eps)/delta), then shrink into exact
  // feasibility if rounding left any constraint marginally violated.
  const Rational inv_scale = SnapDown(1.0 / phase_length, kScaleResolution);
  std::vector<Rational> values(inst.edges.size());
  for (std::size_t e = 0; e < m; ++e) values[kept[e]] = routed[e] * inv_scale;
  Flow x = MakeFlow(inst, std::move(values));
  Rational worst = 1;
  for (EdgeId e = 0; e < inst.edges.size(); ++e) {
    if (inst.edges[e].capacity > 0) {
      worst = std::max(worst, Rational(x.values[e] / inst.edges[e].capacity));
    }
  }
  if (budget_row) worst = std::max(worst, Rational(x.fee / ToRational(inst.budget)));
  if (worst > 1) x = ScaleFlow(x, 1 / worst);
  sol.flow = std::move(x);
  sol.objective = sol.flow.cost;
  return sol;
}

}  // namespace detail

// (1 - epsilon)-approximation with the minimum ratio cycle oracle.
inline Solution SolveGk(const Instance& inst, double epsilon, GkOptions options = {}) {
  options.oracle = GkOracle::kCycle;
  return detail::RunGk(inst, epsilon, options);
}

// Same guarantee on acyclic graphs, where every cycle of the circulation
// form is an s-t path plus the return arc and the exact path oracle applies.
inline Solution SolveGkAcyclic(const Instance& inst, double epsilon, GkOptions options = {}) {
  options.oracle = GkOracle::kDagPath;
  return detail::RunGk(inst, epsilon, options);
}

// Turns a (1 - eps, 1 + eps) bicriteria answer into a budget-feasible one:
// x' = x / (1 + eps) keeps capacities and conservation, b(x') <= B, and
// c(x') = c(x) / (1 + eps) <= (1 - 2 eps) c(x*) whenever c(x) <= (1 - eps) c(x*).
inline Flow RescaleBicriteria(const Instance& inst, const Flow& x, const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");
  const ValidationReport report = ValidateFlow(inst, x);
  if (!report.feasible_ignoring_budget()) {
    throw std::invalid_argument("flow violates capacities or conservation");
  }
  if (report.fee > (1 + epsilon) * ToRational(inst.budget)) {
    throw std::invalid_argument("flow exceeds (1 + eps) * B");
  }
  return ScaleFlow(MakeFlow(inst, x.values), 1 / (1 + epsilon));
}

}  // namespace bcmcf
