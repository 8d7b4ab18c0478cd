#pragma once

// Solution documents. The text form is one "key value..." pair per line and
// one "x <edge> <value>" line per edge (1-based edge ids); the structured
// form is the same content as JSON. Exact values are written as "num/den".

#include <json.hpp>

#include <sstream>

#include "bcmcf/exact.hpp"
#include "bcmcf/instance_io.hpp"

namespace bcmcf {

struct SolutionDocument {
  std::string algorithm;
  Rational objective;
  Rational budget_used;
  std::int64_t budget = 0;
  std::int64_t iterations = 0;
  std::optional<Rational> lambda;
  std::vector<Rational> flow;
};

inline SolutionDocument ToDocument(const Instance& inst, const Solution& sol) {
  return {AlgorithmName(sol.algorithm), sol.objective, sol.flow.fee, inst.budget, sol.iterations,
          sol.lambda, sol.flow.values};
}

inline std::string WriteSolutionText(const SolutionDocument& doc) {
  std::ostringstream out;
  out << "algorithm " << doc.algorithm << '\n';
  out << "objective " << ToString(doc.objective) << ' ' << ToDecimal(doc.objective) << '\n';
  out << "budget_used " << ToString(doc.budget_used) << ' ' << ToDecimal(doc.budget_used) << '\n';
  out << "budget " << doc.budget << '\n';
  out << "iterations " << doc.iterations << '\n';
  if (doc.lambda) out << "lambda " << ToString(*doc.lambda) << ' ' << ToDecimal(*doc.lambda) << '\n';
  out << "edges " << doc.flow.size() << '\n';
  for (std::size_t e = 0; e < doc.flow.size(); ++e) {
    out << "x " << e + 1 << ' ' << ToString(doc.flow[e]) << '\n';
  }
  return out.str();
}

inline nlohmann::json ExactJson(const Rational& q) {
  return {{"exact", ToString(q)}, {"decimal", ToDecimal(q)}};
}

inline std::string WriteSolutionJson(const SolutionDocument& doc) {
  nlohmann::json j;
  j["algorithm"] = doc.algorithm;
  j["objective"] = ExactJson(doc.objective);
  j["budget_used"] = ExactJson(doc.budget_used);
  j["budget"] = doc.budget;
  j["iterations"] = doc.iterations;
  if (doc.lambda) j["lambda"] = ExactJson(*doc.lambda);
  j["flow"] = nlohmann::json::array();
  for (const Rational& v : doc.flow) j["flow"].push_back(ToString(v));
  return j.dump(2) + "\n";
}

inline SolutionDocument ParseSolutionJson(const std::string& text) {
  SolutionDocument doc;
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    doc.algorithm = j.at("algorithm").get<std::string>();
    doc.objective = ParseRational(j.at("objective").at("exact").get<std::string>());
    doc.budget_used = ParseRational(j.at("budget_used").at("exact").get<std::string>());
    doc.budget = j.at("budget").get<std::int64_t>();
    doc.iterations = j.at("iterations").get<std::int64_t>();
    if (j.contains("lambda")) doc.lambda = ParseRational(j["lambda"].at("exact").get<std::string>());
    for (const auto& v : j.at("flow")) doc.flow.push_back(ParseRational(v.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed solution JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return doc;
}

inline SolutionDocument ParseSolutionText(const std::string& text) {
  SolutionDocument doc;
  std::optional<std::size_t> edges;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string key;
    if (!(fields >> key) || key[0] == '#') continue;
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    auto need = [&](std::size_t count) {
      if (tok.size() < count) throw ParseError(line, "missing value for '" + key + "'");
    };
    try {
      if (key == "algorithm") {
        need(1);
        doc.algorithm = tok[0];
      } else if (key == "objective") {
        need(1);
        doc.objective = ParseRational(tok[0]);
      } else if (key == "budget_used") {
        need(1);
        doc.budget_used = ParseRational(tok[0]);
      } else if (key == "budget") {
        need(1);
        doc.budget = detail::ParseInteger(tok[0], line, "budget");
      } else if (key == "iterations") {
        need(1);
        doc.iterations = detail::ParseInteger(tok[0], line, "iterations");
      } else if (key == "lambda") {
        need(1);
        doc.lambda = ParseRational(tok[0]);
      } else if (key == "edges") {
        need(1);
        edges = static_cast<std::size_t>(detail::ParseInteger(tok[0], line, "edge count"));
        doc.flow.assign(*edges, Rational(0));
      } else if (key == "x") {
        need(2);
        if (!edges) throw ParseError(line, "'x' line before 'edges'");
        const auto id = detail::ParseInteger(tok[0], line, "edge id");
        if (id < 1 || static_cast<std::size_t>(id) > *edges) {
          throw ParseError(line, "edge id out of range");
        }
        doc.flow[static_cast<std::size_t>(id - 1)] = ParseRational(tok[1]);
      } else {
        throw ParseError(line, "unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }
  if (!edges) throw ParseError(line, "solution document without 'edges' line");
  return doc;
}

// Flow values from a solution document (text or JSON) or from a bare list of
// whitespace-separated rationals.
inline std::vector<Rational> ReadFlowValues(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  if (text[first] == '{') return ParseSolutionJson(text).flow;
  std::istringstream probe(text);
  std::string word;
  while (probe >> word) {
    if (word[0] == '#') {
      std::getline(probe, word);
      continue;
    }
    break;
  }
  if (word == "algorithm" || word == "edges" || word == "objective") {
    return ParseSolutionText(text).flow;
  }
  std::vector<Rational> values;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    for (std::string t; fields >> t;) {
      if (t[0] == '#') break;
      try {
        values.push_back(ParseRational(t));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
    }
  }
  return values;
}

// Plot data: one "cost fee" line per extreme point, by increasing fee.
inline std::string WriteFrontier(const std::vector<FrontierPoint>& points, std::int64_t budget) {
  std::ostringstream out;
  out << "# cost fee\n";
  for (const FrontierPoint& p : points) out << ToString(p.cost) << ' ' << ToString(p.fee) << '\n';
  out << "# budget " << budget << '\n';
  return out.str();
}

}  // namespace bcmcf
