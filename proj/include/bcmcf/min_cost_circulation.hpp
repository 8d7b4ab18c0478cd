#pragma once

// Exact minimum cost circulation by negative-cycle canceling (Klein) under a
// two-level lexicographic cost. The secondary level picks one optimum among
// the primary optima, e.g. the min-fee or max-fee one.

#include <numeric>

#include "bcmcf/flow.hpp"
#include "bcmcf/negative_cycle.hpp"

namespace bcmcf {

struct LexCost {
  Rational primary;
  Rational secondary;

  friend bool operator==(const LexCost&, const LexCost&) = default;
  friend bool operator<(const LexCost& a, const LexCost& b) {
    if (a.primary != b.primary) return a.primary < b.primary;
    return a.secondary < b.secondary;
  }
  friend LexCost operator+(const LexCost& a, const LexCost& b) {
    return {a.primary + b.primary, a.secondary + b.secondary};
  }
  friend LexCost operator-(const LexCost& a, const LexCost& b) {
    return {a.primary - b.primary, a.secondary - b.secondary};
  }
  friend LexCost operator-(const LexCost& a) { return {-a.primary, -a.secondary}; }
  friend LexCost operator*(const LexCost& a, const Rational& k) {
    return {a.primary * k, a.secondary * k};
  }
  // Positive scaling keeps lexicographic order, as Karp's mean needs.
  friend LexCost operator/(const LexCost& a, long k) {
    return {a.primary / Rational(k), a.secondary / Rational(k)};
  }
};

struct ResidualArc {
  EdgeId edge;
  bool forward;
  friend bool operator==(const ResidualArc&, const ResidualArc&) = default;
};

struct Cycle {
  std::vector<ResidualArc> arcs;
};

// Residual network of a flow: per edge a forward arc with capacity u_e - x_e
// and a backward arc with capacity x_e. Only arcs with positive capacity are
// open.
class ResidualGraph {
 public:
  ResidualGraph(const Instance& inst, std::span<const Rational> x) : inst_(&inst) {
    if (x.size() != inst.edges.size()) throw std::invalid_argument("flow arity mismatch");
    for (EdgeId e = 0; e < x.size(); ++e) {
      const EdgeData& d = inst.edges[e];
      const Rational forward_cap = ToRational(d.capacity) - x[e];
      if (forward_cap < 0 || x[e] < 0) throw std::invalid_argument("flow violates capacities");
      if (forward_cap > 0) Open({e, true}, {d.tail, d.head}, forward_cap);
      if (x[e] > 0) Open({e, false}, {d.head, d.tail}, x[e]);
    }
  }

  const Instance& instance() const { return *inst_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const ResidualArc> refs() const { return refs_; }
  const Rational& capacity(std::size_t arc) const { return capacities_[arc]; }

  // Residual length of each open arc: +cost forward, -cost backward.
  std::vector<LexCost> Lengths(std::span<const LexCost> edge_costs) const {
    std::vector<LexCost> out;
    out.reserve(refs_.size());
    for (const ResidualArc& r : refs_) {
      out.push_back(r.forward ? edge_costs[r.edge] : -edge_costs[r.edge]);
    }
    return out;
  }

  Cycle ToCycle(const ArcCycle& arc_ids) const {
    Cycle c;
    for (std::size_t a : arc_ids) c.arcs.push_back(refs_[a]);
    return c;
  }

 private:
  void Open(ResidualArc ref, Arc arc, Rational cap) {
    refs_.push_back(ref);
    arcs_.push_back(arc);
    capacities_.push_back(std::move(cap));
  }

  const Instance* inst_;
  std::vector<Arc> arcs_;
  std::vector<ResidualArc> refs_;
  std::vector<Rational> capacities_;
};

inline LexCost CycleCost(const Cycle& cycle, std::span<const LexCost> edge_costs) {
  LexCost total;
  for (const ResidualArc& r : cycle.arcs) {
    total = total + (r.forward ? edge_costs[r.edge] : -edge_costs[r.edge]);
  }
  return total;
}

inline std::optional<Cycle> FindNegativeCycle(const ResidualGraph& rg,
                                              std::span<const LexCost> edge_costs) {
  const std::vector<LexCost> lengths = rg.Lengths(edge_costs);
  auto found = FindNegativeCycle<LexCost>(rg.instance().node_count, rg.arcs(), lengths);
  if (!found) return std::nullopt;
  return rg.ToCycle(*found);
}

enum class CycleSelection {
  kFirstFound,  // Bellman-Ford predecessor cycle
  kMinMean,     // Karp minimum mean cycle
};

struct MccOptions {
  CycleSelection selection = CycleSelection::kFirstFound;
  // Overrides the default cancellation cap when set.
  std::optional<std::int64_t> max_cancellations;
  std::int64_t* cancellations = nullptr;  // out: number of cycles canceled
};

namespace detail {

// Each cancellation moves an integral amount and lowers the lexicographic
// objective by at least one unit of the common denominator in one level, so
// this bounds the number of cancellations from zero.
inline BigInt CancellationBound(const Instance& inst, std::span<const LexCost> costs) {
  BigInt den_primary = 1, den_secondary = 1;
  Rational spread_primary, spread_secondary;
  for (EdgeId e = 0; e < costs.size(); ++e) {
    mpz_lcm(den_primary.get_mpz_t(), den_primary.get_mpz_t(), costs[e].primary.get_den_mpz_t());
    mpz_lcm(den_secondary.get_mpz_t(), den_secondary.get_mpz_t(),
            costs[e].secondary.get_den_mpz_t());
    const Rational u = ToRational(inst.edges[e].capacity);
    spread_primary += u * abs(costs[e].primary);
    spread_secondary += u * abs(costs[e].secondary);
  }
  const BigInt a = Ceil(spread_primary * den_primary) * 2 + 1;
  const BigInt b = Ceil(spread_secondary * den_secondary) * 2 + 1;
  return a * b + 1;
}

}  // namespace detail

// Minimizes sum_e cost_e * x_e over circulations 0 <= x <= u, starting from
// the zero circulation. On return no negative residual cycle remains.
// Integral capacities give an integral result.
inline Flow MinCostCirculation(const Instance& inst, std::span<const LexCost> costs,
                               const MccOptions& options = {}) {
  if (costs.size() != inst.edges.size()) throw std::invalid_argument("cost arity mismatch");
  const BigInt cap = options.max_cancellations
                         ? BigInt(static_cast<long>(*options.max_cancellations))
                         : detail::CancellationBound(inst, costs);
  std::vector<Rational> x(inst.edges.size());
  std::int64_t canceled = 0;
  for (;;) {
    ResidualGraph rg(inst, x);
    const std::vector<LexCost> lengths = rg.Lengths(costs);
    std::optional<ArcCycle> cycle;
    if (options.selection == CycleSelection::kMinMean) {
      auto mean = MinMeanCycle<LexCost>(inst.node_count, rg.arcs(), lengths);
      if (mean && mean->mean < LexCost{}) cycle = std::move(mean->cycle);
    } else {
      cycle = FindNegativeCycle<LexCost>(inst.node_count, rg.arcs(), lengths);
    }
    if (!cycle) break;
    if (BigInt(static_cast<long>(canceled)) >= cap) {
      throw InternalError("cycle canceling exceeded its cancellation cap");
    }
    Rational push = rg.capacity(cycle->front());
    for (std::size_t a : *cycle) push = std::min(push, rg.capacity(a));
    for (std::size_t a : *cycle) {
      const ResidualArc& r = rg.refs()[a];
      if (r.forward) {
        x[r.edge] += push;
      } else {
        x[r.edge] -= push;
      }
    }
    ++canceled;
  }
  if (options.cancellations) *options.cancellations = canceled;
  return MakeFlow(inst, std::move(x));
}

enum class FeeDirection { kMin, kMax };

// Edge costs (c_e + lambda * b_e, +-b_e): the min-fee or max-fee optimum
// among the minimizers of c + lambda * b.
inline std::vector<LexCost> LambdaCost(const Instance& inst, const Rational& lambda,
                                       FeeDirection direction) {
  if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
  std::vector<LexCost> costs;
  costs.reserve(inst.edges.size());
  for (const EdgeData& d : inst.edges) {
    const Rational fee = ToRational(d.fee);
    costs.push_back({ToRational(d.cost) + lambda * fee,
                     direction == FeeDirection::kMin ? fee : Rational(-fee)});
  }
  return costs;
}

}  // namespace bcmcf
