#pragma once

// Negative-cycle detection (Bellman-Ford with predecessor-graph cycle checks)
// and minimum mean cycle (Karp), generic over the arc length type. A Length
// needs a value-initialized zero, operator+, operator<, and for Karp also
// operator- and division by a positive integer.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bcmcf/instance.hpp"

namespace bcmcf {

struct Arc {
  NodeId tail;
  NodeId head;
};

// Arc indices of a closed walk, in traversal order.
using ArcCycle = std::vector<std::size_t>;

namespace detail {

constexpr std::size_t kNoArc = static_cast<std::size_t>(-1);

// Finds a cycle in the graph formed by pred[v] -> v, if any.
inline std::optional<ArcCycle> PredecessorCycle(std::span<const Arc> arcs,
                                                std::span<const std::size_t> pred) {
  const std::size_t n = pred.size();
  std::vector<std::size_t> stamp(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t v = start;
    while (stamp[v] == 0) {
      stamp[v] = start + 1;
      if (pred[v] == kNoArc) break;
      v = static_cast<std::size_t>(arcs[pred[v]].tail);
    }
    if (stamp[v] != start + 1 || pred[v] == kNoArc) continue;
    // v lies on a cycle of the current walk.
    ArcCycle cycle;
    std::size_t u = v;
    do {
      cycle.push_back(pred[u]);
      u = static_cast<std::size_t>(arcs[pred[u]].tail);
    } while (u != v);
    return ArcCycle(cycle.rbegin(), cycle.rend());
  }
  return std::nullopt;
}

}  // namespace detail

template <typename Length>
Length CycleLength(const ArcCycle& cycle, std::span<const Length> lengths) {
  Length total{};
  for (std::size_t a : cycle) total = total + lengths[a];
  return total;
}

// Returns a simple cycle whose total length is strictly negative, or nothing
// if none exists. Arcs are scanned in index order, so the result is a
// deterministic function of the input.
template <typename Length>
std::optional<ArcCycle> FindNegativeCycle(int node_count, std::span<const Arc> arcs,
                                          std::span<const Length> lengths) {
  if (arcs.size() != lengths.size()) throw std::invalid_argument("arc/length size mismatch");
  const auto n = static_cast<std::size_t>(node_count);
  std::vector<Length> dist(n);
  std::vector<std::size_t> pred(n, detail::kNoArc);
  // Every pass that still relaxes an arc leaves a candidate in the
  // predecessor graph; with a negative cycle present the predecessor graph
  // eventually contains one, and any predecessor cycle is negative.
  const std::size_t max_passes = n * n + n + 2;
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    bool changed = false;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const auto u = static_cast<std::size_t>(arcs[a].tail);
      const auto v = static_cast<std::size_t>(arcs[a].head);
      Length candidate = dist[u] + lengths[a];
      if (candidate < dist[v]) {
        dist[v] = std::move(candidate);
        pred[v] = a;
        changed = true;
      }
    }
    if (!changed) return std::nullopt;
    if (auto cycle = detail::PredecessorCycle(arcs, pred)) {
      if (CycleLength(*cycle, lengths) < Length{}) return cycle;
    }
  }
  return std::nullopt;
}

template <typename Length>
struct MeanCycle {
  ArcCycle cycle;
  Length mean;
};

// Karp's minimum mean cycle. Returns nothing on acyclic graphs.
template <typename Length>
std::optional<MeanCycle<Length>> MinMeanCycle(int node_count, std::span<const Arc> arcs,
                                              std::span<const Length> lengths) {
  const auto n = static_cast<std::size_t>(node_count);
  if (n == 0) return std::nullopt;
  // walk[k][v]: least length of a k-arc walk ending in v (from anywhere).
  std::vector<std::vector<std::optional<Length>>> walk(n + 1,
                                                       std::vector<std::optional<Length>>(n));
  std::vector<std::vector<std::size_t>> parent(n + 1, std::vector<std::size_t>(n, detail::kNoArc));
  for (auto& d : walk[0]) d = Length{};
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const auto u = static_cast<std::size_t>(arcs[a].tail);
      const auto v = static_cast<std::size_t>(arcs[a].head);
      if (!walk[k - 1][u]) continue;
      Length candidate = *walk[k - 1][u] + lengths[a];
      if (!walk[k][v] || candidate < *walk[k][v]) {
        walk[k][v] = std::move(candidate);
        parent[k][v] = a;
      }
    }
  }
  std::optional<Length> best;
  std::size_t best_node = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!walk[n][v]) continue;
    std::optional<Length> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (!walk[k][v]) continue;
      Length mean = (*walk[n][v] - *walk[k][v]) / static_cast<long>(n - k);
      if (!worst || *worst < mean) worst = std::move(mean);
    }
    if (worst && (!best || *worst < *best)) {
      best = std::move(worst);
      best_node = v;
    }
  }
  if (!best) return std::nullopt;

  // The n-arc walk realizing walk[n][best_node] repeats a node; every cycle
  // on it has mean exactly *best.
  std::vector<std::size_t> nodes(n + 1), via(n + 1);
  nodes[n] = best_node;
  for (std::size_t k = n; k >= 1; --k) {
    via[k] = parent[k][nodes[k]];
    nodes[k - 1] = static_cast<std::size_t>(arcs[via[k]].tail);
  }
  std::vector<std::size_t> last_seen(n, detail::kNoArc);
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t v = nodes[k];
    if (last_seen[v] != detail::kNoArc) {
      MeanCycle<Length> result{{}, *best};
      for (std::size_t j = last_seen[v] + 1; j <= k; ++j) result.cycle.push_back(via[j]);
      return result;
    }
    last_seen[v] = k;
  }
  throw std::logic_error("Karp walk without a repeated node");
}

}  // namespace bcmcf
