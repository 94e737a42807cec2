#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "brittle/graph.hpp"

namespace brittle {

/// k copies of `base` glued along the vertices of `shared` (and the edges among them).
struct FanSpec {
  Graph base;
  VertexSet shared;
  int copies = 1;
};

/// Shared vertices get labels 0..|S|-1 (in increasing base-label order), then
/// each copy contributes its non-shared vertices as one consecutive block.
inline Graph fan(const FanSpec& spec) {
  const Graph& base = spec.base;
  require_subset(base, spec.shared);
  if (spec.shared == base.vertices()) throw std::invalid_argument("fan: shared set must be a proper subset");
  if (spec.copies < 1) throw std::invalid_argument("fan: multiplicity must be positive");
  const int s = spec.shared.size();
  const int rest = base.order() - s;
  const long long total = static_cast<long long>(spec.copies) * rest + s;
  if (total > Graph::kMaxVertices) throw std::invalid_argument("fan: result exceeds 64 vertices");

  std::vector<int> shared_label(base.order(), -1);
  std::vector<int> local(base.order(), -1);
  int next_shared = 0;
  int next_local = 0;
  for (int v = 0; v < base.order(); ++v) {
    if (spec.shared.contains(v)) {
      shared_label[v] = next_shared++;
    } else {
      local[v] = next_local++;
    }
  }
  Graph out(static_cast<int>(total));
  for (int copy = 0; copy < spec.copies; ++copy) {
    auto label = [&](int v) { return spec.shared.contains(v) ? shared_label[v] : s + copy * rest + local[v]; };
    for (const Edge& e : base.edges()) {
      if (spec.shared.contains(e.u) && spec.shared.contains(e.v) && copy > 0) continue;
      out.add_edge(label(e.u), label(e.v));
    }
  }
  return out;
}

inline Graph fan(const Graph& base, VertexSet shared, int copies) { return fan(FanSpec{base, shared, copies}); }

/// A graph with a distinguished path, listed vertex by vertex.
struct HemmedGraph {
  Graph graph;
  std::vector<int> path;
};

inline void require_hemmed(const HemmedGraph& h) {
  VertexSet seen;
  for (std::size_t i = 0; i < h.path.size(); ++i) {
    int v = h.path[i];
    if (!h.graph.has_vertex(v) || seen.contains(v)) throw std::invalid_argument("hemmed graph: path vertices must be distinct");
    seen.insert(v);
    if (i > 0 && !h.graph.has_edge(h.path[i - 1], v)) {
      throw std::invalid_argument("hemmed graph: consecutive path vertices must be adjacent");
    }
  }
}

/// Inserts a new vertex between each pair of consecutive path vertices and
/// returns the doubled path v1 u1 v2 u2 ... v_k. The old graph is kept intact.
inline HemmedGraph sigma(const HemmedGraph& h) {
  require_hemmed(h);
  const int k = static_cast<int>(h.path.size());
  if (k < 2) throw std::invalid_argument("sigma: path needs at least two vertices");
  const int n = h.graph.order();
  if (n + k - 1 > Graph::kMaxVertices) throw std::invalid_argument("sigma: result exceeds 64 vertices");
  HemmedGraph out{Graph(n + k - 1), {}};
  for (const Edge& e : h.graph.edges()) out.graph.add_edge(e.u, e.v);
  for (int i = 0; i + 1 < k; ++i) {
    int fresh = n + i;
    out.graph.add_edge(h.path[i], fresh);
    out.graph.add_edge(fresh, h.path[i + 1]);
    out.path.push_back(h.path[i]);
    out.path.push_back(fresh);
  }
  out.path.push_back(h.path.back());
  return out;
}

/// The hemmed graphs (G_l, P_l): G_1 = K4 with path 0-1-2-3, then iterated sigma.
/// `removable` is the edge joining the first path vertex to the third; deleting
/// it leaves an outerplanar graph at every level.
struct PropExample {
  HemmedGraph hemmed;
  Edge removable;
};

namespace named {

inline Graph complete(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  }
  return g;
}

/// Parts {0..m-1} and {m..m+n-1}.
inline Graph complete_bipartite(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("complete_bipartite: negative part size");
  Graph g(m + n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) g.add_edge(a, m + b);
  }
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

/// Path on n vertices.
inline Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// K4 minus the edge 23: vertices 0 and 1 have degree 3, vertices 2 and 3 degree 2.
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

/// K2,3: degree-3 vertices 0 and 1, degree-2 vertices 2, 3, 4.
inline Graph k23() { return complete_bipartite(2, 3); }

/// K2,3 plus the edge joining its degree-3 vertices 0 and 1.
inline Graph k23_plus() {
  Graph g = k23();
  g.add_edge(0, 1);
  return g;
}

/// Hub 0 on a 2k-cycle 1..2k, adjacent to the odd cycle positions 1, 3, ..., 2k-1.
inline Graph w_plus(int k) {
  if (k < 3) throw std::invalid_argument("W+ needs k >= 3");
  Graph g(2 * k + 1);
  for (int i = 0; i < 2 * k; ++i) g.add_edge(1 + i, 1 + (i + 1) % (2 * k));
  for (int i = 0; i < k; ++i) g.add_edge(0, 1 + 2 * i);
  return g;
}

/// Degree-3 vertices 0 and 1 joined by the edge e = 01 and by the paths
/// 0-2-3-1 and 0-4-5-1 (a 6-cycle with one long chord).
inline Graph theta_fig3() {
  return Graph(6, {{0, 1}, {0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}});
}

/// The edge whose contraction raises vertex-brittleness and capacity.
inline Edge theta_fig3_edge() { return {0, 1}; }

/// Hexagon v1..v6 (labels 0..5) with chords v3v6, v1v5, v1v4, v2v4.
inline Graph fig4() {
  return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 5}, {0, 4}, {0, 3}, {1, 3}});
}

/// The edge vw = v3v6 of the hexagon.
inline Edge fig4_edge() { return {2, 5}; }

/// K_n with the edge 01 replaced by a path of length two through the new vertex n.
inline Graph subdivided_complete(int n) {
  Graph g = complete(n);
  Graph out(n + 1);
  for (const Edge& e : g.edges()) {
    if (!(e == Edge(0, 1))) out.add_edge(e.u, e.v);
  }
  out.add_edge(0, n);
  out.add_edge(n, 1);
  return out;
}

}  // namespace named

inline PropExample prop_example_family(int level) {
  if (level < 1) throw std::invalid_argument("prop example level must be >= 1");
  PropExample out{HemmedGraph{named::complete(4), {0, 1, 2, 3}}, Edge(0, 2)};
  for (int l = 2; l <= level; ++l) out.hemmed = sigma(out.hemmed);
  return out;
}

/// Looks up a named graph: K<n>, K<m>,<n>, C<n>, P<n>, D, K23+, W+<k>, fig3, fig4.
inline Graph named_graph(const std::string& family, int a = 0, int b = 0) {
  if (family == "complete") return named::complete(a);
  if (family == "complete-bipartite") return named::complete_bipartite(a, b);
  if (family == "cycle") return named::cycle(a);
  if (family == "path") return named::path(a);
  if (family == "star") return named::star(a);
  if (family == "diamond") return named::diamond();
  if (family == "k23") return named::k23();
  if (family == "k23-plus") return named::k23_plus();
  if (family == "w-plus") return named::w_plus(a);
  if (family == "fig3") return named::theta_fig3();
  if (family == "fig4") return named::fig4();
  if (family == "subdivided-complete") return named::subdivided_complete(a);
  if (family == "prop-example") return prop_example_family(a).hemmed.graph;
  throw std::invalid_argument("unknown graph family '" + family + "'");
}

/// Parses compact names such as "K4", "K2,3", "C5", "P3", "D", "K23+", "W+3".
inline Graph parse_named_graph(const std::string& name) {
  auto number = [&](std::size_t from) {
    std::size_t used = 0;
    int value = std::stoi(name.substr(from), &used);
    if (from + used != name.size()) throw std::invalid_argument("trailing characters in '" + name + "'");
    return value;
  };
  try {
    if (name == "D" || name == "diamond") return named::diamond();
    if (name == "K23+" || name == "K2,3+") return named::k23_plus();
    if (name == "K23" || name == "K2,3") return named::k23();
    if (name == "fig3") return named::theta_fig3();
    if (name == "fig4") return named::fig4();
    if (name.starts_with("W+")) return named::w_plus(number(2));
    if (name.starts_with("K") && name.find(',') != std::string::npos) {
      auto comma = name.find(',');
      return named::complete_bipartite(std::stoi(name.substr(1, comma - 1)), number(comma + 1));
    }
    if (name.starts_with("K")) return named::complete(number(1));
    if (name.starts_with("C")) return named::cycle(number(1));
    if (name.starts_with("P")) return named::path(number(1));
  } catch (const std::logic_error& err) {
    throw std::invalid_argument("cannot parse graph name '" + name + "': " + err.what());
  }
  throw std::invalid_argument("unknown graph name '" + name + "'");
}

}  // namespace brittle
