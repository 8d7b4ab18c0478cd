#pragma once

// Reproducible random instances. The bit stream is std::mt19937_64 seeded with
// the given seed (its output sequence is fixed by the C++ standard) and every
// draw in [lo, hi] is lo + next() % (hi - lo + 1), so the same configuration
// yields the same instance on every platform. Per edge the draws are: tail,
// head, capacity, cost, fee; the budget is drawn last.

#include <random>

#include "bcmcf/instance.hpp"

namespace bcmcf {

enum class BudgetMode { kTight, kSlack, kZero };

inline const char* BudgetModeName(BudgetMode m) {
  switch (m) {
    case BudgetMode::kTight: return "tight";
    case BudgetMode::kSlack: return "slack";
    case BudgetMode::kZero: return "zero";
  }
  return "?";
}

inline std::optional<BudgetMode> BudgetModeFromName(const std::string& name) {
  for (BudgetMode m : {BudgetMode::kTight, BudgetMode::kSlack, BudgetMode::kZero}) {
    if (name == BudgetModeName(m)) return m;
  }
  return std::nullopt;
}

struct GeneratorConfig {
  int nodes = 4;
  int edges = 6;
  std::int64_t max_capacity = 3;
  std::int64_t max_cost = 5;
  std::int64_t max_fee = 5;
  BudgetMode budget_mode = BudgetMode::kTight;
  std::uint64_t seed = 1;
  // Every edge goes from a lower to a higher node id (s = 1 and t = n).
  bool acyclic = false;
};

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : engine_(seed) {}

  std::int64_t Uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

inline Instance GenerateInstance(const GeneratorConfig& cfg) {
  if (cfg.nodes < 2) throw std::invalid_argument("generator needs at least 2 nodes");
  if (cfg.edges < 1) throw std::invalid_argument("generator needs at least 1 edge");
  if (cfg.max_capacity < 0 || cfg.max_cost < 0 || cfg.max_fee < 0) {
    throw std::invalid_argument("generator bounds must be nonnegative");
  }
  Generator rng(cfg.seed);
  Instance inst;
  inst.node_count = cfg.nodes;
  inst.source = 0;
  inst.sink = cfg.nodes - 1;
  std::int64_t fee_bound = 0;
  for (int i = 0; i < cfg.edges; ++i) {
    EdgeData d;
    if (cfg.acyclic) {
      const auto a = rng.Uniform(0, cfg.nodes - 1);
      auto b = rng.Uniform(0, cfg.nodes - 2);
      if (b >= a) ++b;
      d.tail = static_cast<NodeId>(std::min(a, b));
      d.head = static_cast<NodeId>(std::max(a, b));
    } else {
      d.tail = static_cast<NodeId>(rng.Uniform(0, cfg.nodes - 1));
      d.head = static_cast<NodeId>(rng.Uniform(0, cfg.nodes - 1));
    }
    d.capacity = rng.Uniform(0, cfg.max_capacity);
    d.cost = rng.Uniform(-cfg.max_cost, cfg.max_cost);
    d.fee = rng.Uniform(0, cfg.max_fee);
    fee_bound += d.capacity * d.fee;
    inst.edges.push_back(d);
  }
  switch (cfg.budget_mode) {
    case BudgetMode::kTight: inst.budget = rng.Uniform(0, fee_bound); break;
    case BudgetMode::kSlack: inst.budget = fee_bound + 1; break;
    case BudgetMode::kZero: inst.budget = 0; break;
  }
  return inst;
}

}  // namespace bcmcf
