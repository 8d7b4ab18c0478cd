#pragma once

// Budget-constrained minimum cost flow instances: a directed multigraph with
// per-edge capacity u_e >= 0, cost c_e (any sign) and usage fee b_e >= 0, a
// budget B >= 0 on sum_e b_e * x_e, and distinguished nodes s != t.
//
// Nodes are 0-based internally; the text format is 1-based.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcmcf/rational.hpp"

namespace bcmcf {

using NodeId = int;
using EdgeId = std::size_t;

struct EdgeData {
  NodeId tail = 0;
  NodeId head = 0;
  std::int64_t capacity = 0;
  std::int64_t cost = 0;
  std::int64_t fee = 0;

  friend bool operator==(const EdgeData&, const EdgeData&) = default;
};

struct Instance {
  int node_count = 0;
  std::vector<EdgeData> edges;
  NodeId source = 0;
  NodeId sink = 1;
  std::int64_t budget = 0;
  // Set once AddReturnArc() has appended the t->s arc. Flows on such an
  // instance are circulations: conservation also holds at s and t.
  std::optional<EdgeId> return_arc;

  std::size_t edge_count() const { return edges.size(); }
  bool is_circulation() const { return return_arc.has_value(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solver reached a state its invariants rule out (iteration caps, broken
// certificates). Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void CheckInstance(const Instance& inst) {
  if (inst.node_count < 2) throw InstanceError("instance needs at least two nodes");
  auto valid = [&](NodeId v) { return v >= 0 && v < inst.node_count; };
  if (!valid(inst.source) || !valid(inst.sink)) throw InstanceError("source/sink out of range");
  if (inst.source == inst.sink) throw InstanceError("source and sink coincide");
  if (inst.budget < 0) throw InstanceError("negative budget");
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    const EdgeData& d = inst.edges[e];
    const std::string where = " on edge " + std::to_string(e + 1);
    if (!valid(d.tail) || !valid(d.head)) throw InstanceError("unknown node" + where);
    if (d.capacity < 0) throw InstanceError("negative capacity" + where);
    if (d.fee < 0) throw InstanceError("negative fee" + where);
  }
  if (inst.return_arc && *inst.return_arc >= inst.edges.size()) {
    throw InstanceError("return arc index out of range");
  }
}

struct Stats {
  Rational cbar;  // sum_e |u_e * c_e|
  Rational bbar;  // sum_e u_e * b_e
  std::int64_t largest_number = 0;  // M
  std::int64_t largest_cost = 0;    // C
  std::int64_t largest_capacity = 0;  // U
};

inline Stats InstanceStats(const Instance& inst) {
  Stats st;
  st.largest_number = inst.budget;
  for (const EdgeData& d : inst.edges) {
    const Rational u = ToRational(d.capacity);
    st.cbar += abs(u * ToRational(d.cost));
    st.bbar += u * ToRational(d.fee);
    const std::int64_t c = std::llabs(d.cost);
    st.largest_cost = std::max(st.largest_cost, c);
    st.largest_capacity = std::max(st.largest_capacity, d.capacity);
    st.largest_number = std::max({st.largest_number, c, d.capacity, d.fee});
  }
  return st;
}

// Appends the zero-cost, zero-fee arc (t, s). Its capacity sum_e u_e stands in
// for infinity: no s-t flow can carry more.
inline Instance AddReturnArc(const Instance& inst) {
  if (inst.return_arc) throw InstanceError("instance already has a return arc");
  Instance out = inst;
  std::int64_t total = 0;
  for (const EdgeData& d : inst.edges) total += d.capacity;
  out.edges.push_back({inst.sink, inst.source, total, 0, 0});
  out.return_arc = out.edges.size() - 1;
  return out;
}

// Copy of inst with the edges selected by keep; returns the kept original ids.
template <typename Predicate>
Instance FilterEdges(const Instance& inst, Predicate keep, std::vector<EdgeId>* kept = nullptr) {
  Instance out = inst;
  out.edges.clear();
  out.return_arc.reset();
  if (kept) kept->clear();
  for (EdgeId e = 0; e < inst.edges.size(); ++e) {
    if (!keep(e, inst.edges[e])) continue;
    if (inst.return_arc == e) out.return_arc = out.edges.size();
    out.edges.push_back(inst.edges[e]);
    if (kept) kept->push_back(e);
  }
  return out;
}

}  // namespace bcmcf
