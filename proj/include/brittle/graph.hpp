#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brittle/vertex_set.hpp"

namespace brittle {

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on the vertex labels 0..n-1 (n <= 64).
///
/// Adjacency is kept as one bitset row per vertex. Graphs are plain values:
/// copying is cheap and copies never alias.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) : adj_(check_order(n)) {}

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  int order() const { return static_cast<int>(adj_.size()); }

  int size() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += row.size();
    return twice / 2;
  }

  VertexSet vertices() const { return VertexSet::range(order()); }

  bool has_vertex(int v) const { return v >= 0 && v < order(); }

  bool has_edge(int u, int v) const {
    return has_vertex(u) && has_vertex(v) && adj_[u].contains(v);
  }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  VertexSet neighbors(int v) const {
    require_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return neighbors(v).size(); }

  int max_degree() const {
    int best = 0;
    for (VertexSet row : adj_) best = std::max(best, row.size());
    return best;
  }

  void add_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  void remove_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  /// Edges in lexicographic order of (u, v); this is the fixed edge order
  /// every edge-indexed structure in the library uses.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
      for (int v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
    }
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::out_of_range("graph order " + std::to_string(n) + " outside 0..64");
    }
    return static_cast<std::size_t>(n);
  }

  void require_vertex(int v) const {
    if (!has_vertex(v)) {
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                              std::to_string(order()));
    }
  }

  std::vector<VertexSet> adj_;
};

/// A subgraph whose vertices were renumbered; origin[i] is the host label of vertex i.
struct Relabeled {
  Graph graph;
  std::vector<int> origin;
};

inline void require_subset(const Graph& g, VertexSet x) {
  if (!x.is_subset_of(g.vertices())) {
    throw std::out_of_range("vertex set is not contained in the graph");
  }
}

inline Relabeled induced_subgraph(const Graph& g, VertexSet x) {
  require_subset(g, x);
  Relabeled out{Graph(x.size()), x.to_vector()};
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < out.origin.size(); ++i) position[out.origin[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < out.origin.size(); ++i) {
    for (int w : g.neighbors(out.origin[i]) & x) {
      if (position[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), position[w]);
    }
  }
  return out;
}

inline Relabeled edge_induced_subgraph(const Graph& g, std::span<const Edge> f) {
  VertexSet ends;
  for (const Edge& e : f) {
    if (!g.has_edge(e)) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                  " is not in the graph");
    }
    ends.insert(e.u);
    ends.insert(e.v);
  }
  Relabeled out{Graph(ends.size()), ends.to_vector()};
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < out.origin.size(); ++i) position[out.origin[i]] = static_cast<int>(i);
  for (const Edge& e : f) out.graph.add_edge(position[e.u], position[e.v]);
  return out;
}

/// G \ F: same vertex set, the listed edges removed.
inline Graph delete_edges(const Graph& g, std::span<const Edge> f) {
  Graph out = g;
  for (const Edge& e : f) {
    if (!g.has_edge(e)) throw std::invalid_argument("cannot delete an edge that is not present");
    out.remove_edge(e.u, e.v);
  }
  return out;
}

/// G \ X, with the surviving vertices renumbered in increasing label order.
inline Graph delete_vertices(const Graph& g, VertexSet x) {
  require_subset(g, x);
  return induced_subgraph(g, g.vertices() - x).graph;
}

/// Renumbers g so that vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

/// Merges v into u (for u < v) and drops v, renumbering labels above v down by one.
/// Loops and parallel edges that would arise are discarded.
inline Graph merge_vertices(const Graph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  std::vector<int> target(g.order());
  for (int x = 0; x < g.order(); ++x) target[x] = x == v ? u : (x > v ? x - 1 : x);
  Graph out(g.order() - 1);
  for (const Edge& e : g.edges()) {
    int a = target[e.u];
    int b = target[e.v];
    if (a != b) out.add_edge(a, b);
  }
  return out;
}

/// G/v for a degree-2 vertex v: v disappears and its neighbours become adjacent.
/// If they already were, the result simply loses v and its two edges.
/// Labels above v move down by one, as in delete_vertices.
inline Graph suppress(const Graph& g, int v) {
  if (g.degree(v) != 2) {
    throw std::invalid_argument("suppress needs a degree-2 vertex, vertex " + std::to_string(v) +
                                " has degree " + std::to_string(g.degree(v)));
  }
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  int a = g.neighbors(v).front();
  int b = (g.neighbors(v) - VertexSet::singleton(a)).front();
  Graph out = delete_vertices(g, VertexSet::singleton(v));
  if (!out.has_edge(shift(a), shift(b))) out.add_edge(shift(a), shift(b));
  return out;
}

inline Graph contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw std::invalid_argument("cannot contract an absent edge");
  return merge_vertices(g, e.u, e.v);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
  return out;
}

/// Vertices reachable from `start` inside `within`.
inline VertexSet reach(const Graph& g, int start, VertexSet within) {
  VertexSet seen = VertexSet::singleton(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Components of G[within], ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within & g.vertices();
  while (!rest.empty()) {
    VertexSet comp = reach(g, rest.front(), rest);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

inline bool is_connected_within(const Graph& g, VertexSet within) {
  if (within.empty()) return false;
  return reach(g, within.front(), within) == within;
}

/// The empty graph is not connected.
inline bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

inline bool is_2_connected(const Graph& g) {
  if (g.order() <= 2 || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!is_connected_within(g, g.vertices() - VertexSet::singleton(v))) return false;
  }
  return true;
}

inline bool is_independent(const Graph& g, VertexSet x) {
  for (int v : x) {
    if (g.neighbors(v).intersects(x)) return false;
  }
  return true;
}

inline bool is_acyclic(const Graph& g) {
  return g.size() == g.order() - static_cast<int>(components(g).size());
}

/// Vertex sets of the blocks (maximal 2-connected subgraphs and bridges) of G[within].
/// Isolated vertices form no block.
inline std::vector<VertexSet> blocks_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  std::vector<int> disc(g.order(), -1);
  std::vector<int> low(g.order(), 0);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : g.neighbors(v) & within) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          VertexSet block;
          Edge top;
          do {
            top = stack.back();
            stack.pop_back();
            block.insert(top.u);
            block.insert(top.v);
          } while (!(top == Edge(v, w)));
          out.push_back(block);
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  for (int v : within & g.vertices()) {
    if (disc[v] == -1) dfs(v, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<VertexSet> blocks(const Graph& g) { return blocks_within(g, g.vertices()); }

}  // namespace brittle
