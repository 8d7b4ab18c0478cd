#pragma once

// Minimum ratio cycles and s-t paths: minimize sum num_e / sum den_e over
// cycles (paths) with positive denominator, given num_e >= 0.
//
// Both searches use that, for lambda >= 0, some qualifying cycle (path) has
// ratio < lambda iff the minimum of sum (num_e - lambda * den_e) is negative;
// objects with den <= 0 never make that sum negative because num >= 0.

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "bcmcf/negative_cycle.hpp"

namespace bcmcf {

template <typename Scalar>
struct RatioResult {
  std::vector<std::size_t> arcs;  // cycle in traversal order, or s-t path
  Scalar numerator{};
  Scalar denominator{};
  Scalar ratio{};
  // Certified lower bound on the minimum ratio (equal to ratio when exact).
  Scalar lower_bound{};
  int evaluations = 0;  // negative-cycle or shortest-path solves
};

// Warm start for repeated calls whose lengths only grow between calls: the
// previous lower bound stays valid and the previous cycle is a candidate.
struct RatioHint {
  double lower_bound = 0;
  std::vector<std::size_t> candidate;
};

namespace detail {

inline void CheckRatioInput(std::size_t arcs, std::span<const double> num,
                            std::span<const double> den) {
  if (num.size() != arcs || den.size() != arcs) throw std::invalid_argument("length arity mismatch");
  for (double v : num) {
    if (!(v >= 0) || !std::isfinite(v)) throw std::invalid_argument("numerators must be >= 0");
  }
}

inline std::pair<double, double> Sums(const std::vector<std::size_t>& arcs,
                                      std::span<const double> num, std::span<const double> den) {
  double a = 0, d = 0;
  for (std::size_t e : arcs) {
    a += num[e];
    d += den[e];
  }
  return {a, d};
}

}  // namespace detail

// Returns a cycle whose ratio is at most (1 + rel_tol) times the minimum over
// all cycles with positive denominator, or nothing if there is none. Geometric
// bisection on lambda with a negative-cycle test per step; every cycle found
// along the way tightens the upper end.
inline std::optional<RatioResult<double>> MinRatioCycle(int node_count, std::span<const Arc> arcs,
                                                        std::span<const double> num,
                                                        std::span<const double> den,
                                                        double rel_tol,
                                                        const RatioHint* hint = nullptr) {
  detail::CheckRatioInput(arcs.size(), num, den);
  if (!(rel_tol > 0 && rel_tol < 1)) throw std::invalid_argument("rel_tol must lie in (0, 1)");
  RatioResult<double> out;
  auto accept = [&](std::vector<std::size_t> cycle, double lower) {
    const auto [a, d] = detail::Sums(cycle, num, den);
    out.arcs = std::move(cycle);
    out.numerator = a;
    out.denominator = d;
    out.ratio = a / d;
    out.lower_bound = std::min(lower, out.ratio);
    return out;
  };
  auto negative_cycle = [&](std::span<const Arc> sub_arcs, const std::vector<double>& lengths)
      -> std::optional<ArcCycle> {
    ++out.evaluations;
    return FindNegativeCycle<double>(node_count, sub_arcs, lengths);
  };

  std::vector<double> lengths(arcs.size());
  std::optional<std::vector<std::size_t>> best;
  double hi = std::numeric_limits<double>::infinity();
  auto offer = [&](const std::vector<std::size_t>& cycle) {
    const auto [a, d] = detail::Sums(cycle, num, den);
    if (d > 0 && a / d < hi) {
      hi = a / d;
      best = cycle;
    }
  };
  if (hint && !hint->candidate.empty()) offer(hint->candidate);
  double lo = hint ? hint->lower_bound : 0;
  if (best && hi <= (1 + rel_tol) * lo) return accept(*best, lo);

  // A qualifying cycle of zero numerator has ratio 0.
  {
    std::vector<Arc> zero_arcs;
    std::vector<std::size_t> zero_ids;
    std::vector<double> zero_len;
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      if (num[e] != 0) continue;
      zero_arcs.push_back(arcs[e]);
      zero_ids.push_back(e);
      zero_len.push_back(-den[e]);
    }
    if (!zero_arcs.empty()) {
      if (auto c = negative_cycle(zero_arcs, zero_len)) {
        std::vector<std::size_t> cycle;
        for (std::size_t a : *c) cycle.push_back(zero_ids[a]);
        if (detail::Sums(cycle, num, den).second > 0) return accept(std::move(cycle), 0);
      }
    }
  }
  if (!best) {
    for (std::size_t e = 0; e < arcs.size(); ++e) lengths[e] = -den[e];
    auto c = negative_cycle(arcs, lengths);
    if (!c) return std::nullopt;
    offer(*c);
    if (!best) return std::nullopt;
  }
  if (lo <= 0) {
    // Any qualifying cycle has some positive numerator and bounded
    // denominator.
    double min_num = std::numeric_limits<double>::infinity(), den_sum = 0;
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      if (num[e] > 0) min_num = std::min(min_num, num[e]);
      if (den[e] > 0) den_sum += den[e];
    }
    lo = den_sum > 0 ? min_num / den_sum : hi;
  }
  for (int step = 0; step < 256 && hi > (1 + rel_tol) * lo; ++step) {
    const double mid = std::sqrt(lo * hi);
    for (std::size_t e = 0; e < arcs.size(); ++e) lengths[e] = num[e] - mid * den[e];
    const double before = hi;
    if (auto c = negative_cycle(arcs, lengths)) offer(*c);
    if (hi >= before) lo = mid;  // no cycle below mid (up to rounding)
  }
  return accept(*best, lo);
}

inline std::vector<Arc> InstanceArcs(const Instance& inst) {
  std::vector<Arc> arcs;
  arcs.reserve(inst.edges.size());
  for (const EdgeData& d : inst.edges) arcs.push_back({d.tail, d.head});
  return arcs;
}

// Topological order of the nodes; throws if the graph has a directed cycle.
inline std::vector<NodeId> TopologicalOrder(int node_count, std::span<const Arc> arcs) {
  const auto n = static_cast<std::size_t>(node_count);
  std::vector<int> indegree(n);
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    ++indegree[static_cast<std::size_t>(arcs[a].head)];
    out[static_cast<std::size_t>(arcs[a].tail)].push_back(a);
  }
  std::deque<NodeId> ready;
  for (NodeId v = 0; v < node_count; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  std::vector<NodeId> order;
  while (!ready.empty()) {
    const NodeId v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (std::size_t a : out[static_cast<std::size_t>(v)]) {
      const NodeId w = arcs[a].head;
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  if (order.size() != n) throw std::invalid_argument("graph contains a directed cycle");
  return order;
}

inline bool IsAcyclic(int node_count, std::span<const Arc> arcs) {
  try {
    TopologicalOrder(node_count, arcs);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace detail {

// Path label num - lambda * den, kept symbolic in lambda.
template <typename Scalar>
struct Line {
  Scalar num{};
  Scalar den{};
  Scalar At(const Scalar& lambda) const { return num - lambda * den; }
};

// Where a candidate lambda lies relative to the optimal ratio.
enum class Side { kBelowOptimum, kOptimum, kAboveOptimum };

}  // namespace detail

// Exact minimum ratio s-t path on a DAG by sequential parametric search: the
// topological-order shortest-path DP runs on labels linear in lambda, and each
// comparison whose outcome depends on lambda is settled by one concrete
// shortest-path solve at the breakpoint. With Scalar = Rational the result is
// exact.
template <typename Scalar>
std::optional<RatioResult<Scalar>> MinRatioPathDag(int node_count, std::span<const Arc> arcs,
                                                   std::span<const Scalar> num,
                                                   std::span<const Scalar> den, NodeId source,
                                                   NodeId sink) {
  using detail::Line;
  using detail::Side;
  if (num.size() != arcs.size() || den.size() != arcs.size()) {
    throw std::invalid_argument("length arity mismatch");
  }
  for (const Scalar& v : num) {
    if (v < 0) throw std::invalid_argument("numerators must be >= 0");
  }
  const std::vector<NodeId> order = TopologicalOrder(node_count, arcs);
  const auto n = static_cast<std::size_t>(node_count);
  std::vector<std::vector<std::size_t>> out_arcs(n);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    out_arcs[static_cast<std::size_t>(arcs[a].tail)].push_back(a);
  }

  RatioResult<Scalar> result;

  // Longest-denominator path decides whether any path qualifies.
  {
    std::vector<std::optional<Scalar>> best(n);
    best[static_cast<std::size_t>(source)] = Scalar(0);
    for (NodeId u : order) {
      const auto& bu = best[static_cast<std::size_t>(u)];
      if (!bu) continue;
      for (std::size_t a : out_arcs[static_cast<std::size_t>(u)]) {
        auto& bw = best[static_cast<std::size_t>(arcs[a].head)];
        Scalar cand = *bu + den[a];
        if (!bw || *bw < cand) bw = cand;
      }
    }
    const auto& bt = best[static_cast<std::size_t>(sink)];
    if (!bt || !(*bt > 0)) return std::nullopt;
  }

  // Lexicographic (value, -den) shortest path at a concrete lambda.
  auto side_of = [&](const Scalar& lambda) {
    ++result.evaluations;
    std::vector<std::optional<std::pair<Scalar, Scalar>>> dist(n);
    dist[static_cast<std::size_t>(source)] = std::pair<Scalar, Scalar>(Scalar(0), Scalar(0));
    for (NodeId u : order) {
      const auto& du = dist[static_cast<std::size_t>(u)];
      if (!du) continue;
      for (std::size_t a : out_arcs[static_cast<std::size_t>(u)]) {
        std::pair<Scalar, Scalar> cand(du->first + num[a] - lambda * den[a], du->second + den[a]);
        auto& dw = dist[static_cast<std::size_t>(arcs[a].head)];
        if (!dw || cand.first < dw->first ||
            (cand.first == dw->first && cand.second > dw->second)) {
          dw = std::move(cand);
        }
      }
    }
    const auto& dt = *dist[static_cast<std::size_t>(sink)];
    if (dt.first < 0) return Side::kAboveOptimum;
    if (dt.first > 0) return Side::kBelowOptimum;
    return dt.second > 0 ? Side::kOptimum : Side::kBelowOptimum;
  };

  // Knowledge about the optimum: exactly `exact`, or inside (lo, hi) with
  // hi = nullopt meaning unbounded.
  std::optional<Scalar> exact;
  Scalar lo(0);
  std::optional<Scalar> hi;
  if (side_of(Scalar(0)) == Side::kOptimum) exact = Scalar(0);

  auto interior = [&]() -> Scalar { return hi ? Scalar((lo + *hi) / 2) : Scalar(lo + 1); };

  // True when line a beats line b at the optimum; ties prefer the larger
  // denominator.
  auto better = [&](const Line<Scalar>& a, const Line<Scalar>& b) -> bool {
    const Scalar dn = a.num - b.num;
    const Scalar dd = a.den - b.den;
    if (!exact && dd != 0) {
      const Scalar cross = dn / dd;
      if (cross > lo && (!hi || cross < *hi)) {
        switch (side_of(cross)) {
          case Side::kOptimum: exact = cross; break;
          case Side::kBelowOptimum: lo = cross; break;
          case Side::kAboveOptimum: hi = cross; break;
        }
      }
    }
    const Scalar at = exact ? Scalar(dn - *exact * dd) : Scalar(dn - interior() * dd);
    if (at != 0) return at < 0;
    return dd > 0;
  };

  std::vector<std::optional<Line<Scalar>>> label(n);
  std::vector<std::size_t> pred(n, static_cast<std::size_t>(-1));
  label[static_cast<std::size_t>(source)] = Line<Scalar>{};
  for (NodeId u : order) {
    const auto& lu = label[static_cast<std::size_t>(u)];
    if (!lu) continue;
    for (std::size_t a : out_arcs[static_cast<std::size_t>(u)]) {
      Line<Scalar> cand{lu->num + num[a], lu->den + den[a]};
      const auto w = static_cast<std::size_t>(arcs[a].head);
      if (!label[w] || better(cand, *label[w])) {
        label[w] = std::move(cand);
        pred[w] = a;
      }
    }
  }

  for (NodeId v = sink; v != source;) {
    const std::size_t a = pred[static_cast<std::size_t>(v)];
    result.arcs.push_back(a);
    v = arcs[a].tail;
  }
  std::reverse(result.arcs.begin(), result.arcs.end());
  const Line<Scalar>& lt = *label[static_cast<std::size_t>(sink)];
  if (!(lt.den > 0)) {
    throw InternalError("parametric path search returned a non-qualifying path");
  }
  result.numerator = lt.num;
  result.denominator = lt.den;
  result.ratio = lt.num / lt.den;
  result.lower_bound = result.ratio;
  return result;
}

// Minimum ratio s-t path for double lengths, computed exactly: doubles are
// binary fractions, so the rational search on the same values is exact and
// the reported path is a true minimizer (no rounding at breakpoints).
inline std::optional<RatioResult<double>> MinRatioPathDagExact(int node_count,
                                                               std::span<const Arc> arcs,
                                                               std::span<const double> num,
                                                               std::span<const double> den,
                                                               NodeId source, NodeId sink) {
  std::vector<Rational> exact_num, exact_den;
  exact_num.reserve(num.size());
  exact_den.reserve(den.size());
  for (double v : num) exact_num.push_back(FromDouble(v));
  for (double v : den) exact_den.push_back(FromDouble(v));
  const auto exact =
      MinRatioPathDag<Rational>(node_count, arcs, exact_num, exact_den, source, sink);
  if (!exact) return std::nullopt;
  RatioResult<double> out;
  out.arcs = exact->arcs;
  out.numerator = exact->numerator.get_d();
  out.denominator = exact->denominator.get_d();
  out.ratio = Rational(exact->ratio).get_d();
  out.lower_bound = out.ratio;
  out.evaluations = exact->evaluations;
  return out;
}

}  // namespace bcmcf
