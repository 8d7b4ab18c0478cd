#pragma once

// Removes nodes other than s and t that lack incoming or outgoing edges (no
// flow can pass them), repeatedly, until none are left. Surviving nodes are
// renumbered in their original order.

#include <deque>

#include "bcmcf/flow.hpp"

namespace bcmcf {

struct PreprocessResult {
  Instance instance;
  std::vector<NodeId> original_node;  // new id -> original id
  std::vector<EdgeId> original_edge;  // new edge -> original edge
};

inline PreprocessResult Preprocess(const Instance& inst) {
  CheckInstance(inst);
  const auto n = static_cast<std::size_t>(inst.node_count);
  std::vector<int> in_degree(n), out_degree(n);
  std::vector<std::vector<EdgeId>> incident(n);
  for (EdgeId e = 0; e < inst.edges.size(); ++e) {
    const EdgeData& d = inst.edges[e];
    ++out_degree[static_cast<std::size_t>(d.tail)];
    ++in_degree[static_cast<std::size_t>(d.head)];
    incident[static_cast<std::size_t>(d.tail)].push_back(e);
    if (d.head != d.tail) incident[static_cast<std::size_t>(d.head)].push_back(e);
  }

  std::vector<bool> node_dead(n, false), edge_dead(inst.edges.size(), false);
  std::deque<NodeId> queue;
  auto dead_end = [&](NodeId v) {
    const auto i = static_cast<std::size_t>(v);
    return v != inst.source && v != inst.sink && !node_dead[i] &&
           (in_degree[i] == 0 || out_degree[i] == 0);
  };
  for (NodeId v = 0; v < inst.node_count; ++v) {
    if (dead_end(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    if (!dead_end(v)) continue;
    node_dead[static_cast<std::size_t>(v)] = true;
    for (EdgeId e : incident[static_cast<std::size_t>(v)]) {
      if (edge_dead[e]) continue;
      edge_dead[e] = true;
      const EdgeData& d = inst.edges[e];
      --out_degree[static_cast<std::size_t>(d.tail)];
      --in_degree[static_cast<std::size_t>(d.head)];
      const NodeId other = d.tail == v ? d.head : d.tail;
      if (dead_end(other)) queue.push_back(other);
    }
  }

  PreprocessResult result;
  std::vector<NodeId> renumber(n, -1);
  for (NodeId v = 0; v < inst.node_count; ++v) {
    if (node_dead[static_cast<std::size_t>(v)]) continue;
    renumber[static_cast<std::size_t>(v)] = static_cast<NodeId>(result.original_node.size());
    result.original_node.push_back(v);
  }
  Instance& out = result.instance;
  out.node_count = static_cast<int>(result.original_node.size());
  out.source = renumber[static_cast<std::size_t>(inst.source)];
  out.sink = renumber[static_cast<std::size_t>(inst.sink)];
  out.budget = inst.budget;
  for (EdgeId e = 0; e < inst.edges.size(); ++e) {
    if (edge_dead[e]) continue;
    EdgeData d = inst.edges[e];
    d.tail = renumber[static_cast<std::size_t>(d.tail)];
    d.head = renumber[static_cast<std::size_t>(d.head)];
    if (inst.return_arc == e) out.return_arc = out.edges.size();
    out.edges.push_back(d);
    result.original_edge.push_back(e);
  }
  return result;
}

// Maps a flow on the preprocessed instance back to the original edge set;
// removed edges carry zero flow.
inline Flow LiftFlow(const Instance& original, const PreprocessResult& pre, const Flow& x) {
  std::vector<Rational> values(original.edges.size());
  for (EdgeId e = 0; e < x.values.size(); ++e) values[pre.original_edge.at(e)] = x.values[e];
  return MakeFlow(original, std::move(values));
}

}  // namespace bcmcf
