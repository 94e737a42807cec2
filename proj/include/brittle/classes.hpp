#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "brittle/embedding.hpp"
#include "brittle/errors.hpp"
#include "brittle/graph.hpp"
#include "brittle/graph6.hpp"

namespace brittle {

/// A monotone ideal: all graphs with none of `forbidden` as a topological minor.
struct GraphClass {
  std::string name;
  std::vector<Graph> forbidden;

  /// True when the class is exactly the forests, so membership is acyclicity.
  bool is_forests() const {
    return forbidden.size() == 1 && forbidden[0].order() == 3 && forbidden[0].size() == 3;
  }
};

/// Names of forbidden graphs that are not 2-connected; empty when the class is valid.
inline std::vector<std::string> validate(const GraphClass& c) {
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < c.forbidden.size(); ++i) {
    if (!is_2_connected(c.forbidden[i])) {
      violations.push_back("forbidden graph #" + std::to_string(i) + " (" + to_graph6(c.forbidden[i]) +
                           ") is not 2-connected");
    }
  }
  return violations;
}

/// Builds a class and rejects forbidden lists that are not all 2-connected.
inline GraphClass make_class(std::string name, std::vector<Graph> forbidden) {
  GraphClass c{std::move(name), std::move(forbidden)};
  auto violations = validate(c);
  if (!violations.empty()) throw ConfigurationError(c.name + ": " + violations.front());
  return c;
}

inline bool contains(const GraphClass& c, const Graph& g) {
  if (c.is_forests()) return is_acyclic(g);
  return is_free(c.forbidden, g);
}

namespace classes {

inline Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph k23() { return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

inline GraphClass forests() { return make_class("forests", {triangle()}); }
inline GraphClass diamond_free() { return make_class("diamond-free", {diamond()}); }
inline GraphClass outerplanar() { return make_class("outerplanar", {k4(), k23()}); }

}  // namespace classes

/// Reads a class definition: one graph6 line per forbidden graph.
inline GraphClass load_class(std::istream& in, std::string name) {
  auto forbidden = read_graph6_stream(in);
  if (forbidden.empty()) throw ParseError("class definition '" + name + "' lists no forbidden graphs");
  return make_class(std::move(name), std::move(forbidden));
}

inline GraphClass load_class_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open class file " + path);
  return load_class(in, "file:" + path);
}

/// "forests", "diamond-free", "outerplanar", or "file:<path>".
inline GraphClass class_by_name(const std::string& spec) {
  if (spec == "forests" || spec == "acyclic") return classes::forests();
  if (spec == "diamond-free" || spec == "diamond_free") return classes::diamond_free();
  if (spec == "outerplanar") return classes::outerplanar();
  if (spec.starts_with("file:")) return load_class_file(spec.substr(5));
  throw ParseError("unknown class '" + spec + "'");
}

}  // namespace brittle
