#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "brittle/canonical.hpp"
#include "brittle/graph.hpp"

namespace brittle {

/// Connected graphs on exactly n vertices, one per isomorphism class, in
/// canonical-form order.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// level n is reached by attaching a new vertex to a non-empty neighbourhood
/// in every connected graph of level n-1.
inline std::vector<Graph> connected_graphs(int n) {
  if (n < 1) return {};
  if (n > 10) throw std::invalid_argument("connected graph generation is limited to 10 vertices");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<CanonicalForm, Graph> next;
    for (const Graph& base : level) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        Graph g(k);
        for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
        for (int v : VertexSet(mask)) g.add_edge(v, k - 1);
        CanonicalForm form = canonical_form(g);
        if (!next.contains(form)) next.emplace(std::move(form), canonical_graph(g));
      }
    }
    level.clear();
    for (auto& [form, g] : next) level.push_back(std::move(g));
  }
  return level;
}

/// Connected graphs on 1..max_n vertices, grouped by order.
inline std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = connected_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw. Unlike the
/// std distributions this is the same on every standard library.
inline double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Erdos-Renyi G(n, p).
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (unit_draw(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace brittle
