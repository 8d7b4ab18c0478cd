#pragma once

// Line-oriented instance format:
//
//   p bcmcf <n> <m> <B>
//   n <id> s
//   n <id> t
//   a <tail> <head> <capacity> <cost> <fee>     (m lines, in edge order)
//
// Node ids are 1-based. Lines starting with '#' or 'c' are comments.

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "bcmcf/instance.hpp"

namespace bcmcf {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::int64_t ParseInteger(const std::string& token, int line, const char* field) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw ParseError(line, std::string("malformed ") + field + " '" + token + "'");
  }
  return v;
}

}  // namespace detail

inline Instance ParseInstance(std::istream& in) {
  Instance inst;
  std::optional<std::size_t> declared_edges;
  std::optional<NodeId> source, sink;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string kind;
    if (!(fields >> kind) || kind[0] == '#' || kind == "c") continue;
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);

    if (kind == "p") {
      if (declared_edges) throw ParseError(line, "duplicate problem line");
      if (tok.size() != 4 || tok[0] != "bcmcf") {
        throw ParseError(line, "expected 'p bcmcf <n> <m> <B>'");
      }
      const auto n = detail::ParseInteger(tok[1], line, "node count");
      const auto m = detail::ParseInteger(tok[2], line, "edge count");
      inst.budget = detail::ParseInteger(tok[3], line, "budget");
      if (n < 2) throw ParseError(line, "node count must be at least 2");
      if (m < 0) throw ParseError(line, "negative edge count");
      if (inst.budget < 0) throw ParseError(line, "negative budget");
      inst.node_count = static_cast<int>(n);
      declared_edges = static_cast<std::size_t>(m);
      inst.edges.reserve(*declared_edges);
      continue;
    }
    if (!declared_edges) throw ParseError(line, "'" + kind + "' line before problem line");

    auto node = [&](const std::string& t) {
      const auto id = detail::ParseInteger(t, line, "node id");
      if (id < 1 || id > inst.node_count) throw ParseError(line, "unknown node id " + t);
      return static_cast<NodeId>(id - 1);
    };

    if (kind == "n") {
      if (tok.size() != 2 || (tok[1] != "s" && tok[1] != "t")) {
        throw ParseError(line, "expected 'n <id> s' or 'n <id> t'");
      }
      auto& slot = tok[1] == "s" ? source : sink;
      if (slot) throw ParseError(line, "duplicate " + tok[1] + " designation");
      slot = node(tok[0]);
    } else if (kind == "a") {
      if (tok.size() != 5) throw ParseError(line, "expected 'a <tail> <head> <capacity> <cost> <fee>'");
      if (inst.edges.size() == *declared_edges) throw ParseError(line, "more arcs than declared");
      EdgeData d;
      d.tail = node(tok[0]);
      d.head = node(tok[1]);
      d.capacity = detail::ParseInteger(tok[2], line, "capacity");
      d.cost = detail::ParseInteger(tok[3], line, "cost");
      d.fee = detail::ParseInteger(tok[4], line, "fee");
      if (d.capacity < 0) throw ParseError(line, "negative capacity");
      if (d.fee < 0) throw ParseError(line, "negative fee");
      inst.edges.push_back(d);
    } else {
      throw ParseError(line, "unknown line type '" + kind + "'");
    }
  }
  if (!declared_edges) throw ParseError(line, "missing problem line");
  if (!source) throw ParseError(line, "missing source designation");
  if (!sink) throw ParseError(line, "missing sink designation");
  if (*source == *sink) throw ParseError(line, "source and sink coincide");
  if (inst.edges.size() != *declared_edges) {
    throw ParseError(line, "declared " + std::to_string(*declared_edges) + " arcs, found " +
                               std::to_string(inst.edges.size()));
  }
  inst.source = *source;
  inst.sink = *sink;
  return inst;
}

inline Instance ParseInstance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseInstance(in);
}

inline std::string SerializeInstance(const Instance& inst) {
  if (inst.return_arc) throw InstanceError("cannot serialize an instance with a return arc");
  std::ostringstream out;
  out << "p bcmcf " << inst.node_count << ' ' << inst.edges.size() << ' ' << inst.budget << '\n';
  out << "n " << inst.source + 1 << " s\n";
  out << "n " << inst.sink + 1 << " t\n";
  for (const EdgeData& d : inst.edges) {
    out << "a " << d.tail + 1 << ' ' << d.head + 1 << ' ' << d.capacity << ' ' << d.cost << ' '
        << d.fee << '\n';
  }
  return out.str();
}

}  // namespace bcmcf
