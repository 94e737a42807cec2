#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "brittle/errors.hpp"
#include "brittle/graph.hpp"

namespace brittle {

/// Bitmask over the edge indices of one host graph (at most 64 edges).
using EdgeMask = std::uint64_t;

/// Dense numbering of the edges of a graph in its fixed lexicographic order,
/// so that edge subsets can be handled as single words.
class EdgeIndex {
 public:
  static constexpr int kMaxEdges = 64;

  explicit EdgeIndex(const Graph& g) : host_(g), edges_(g.edges()), index_(g.order() * g.order(), -1) {
    if (static_cast<int>(edges_.size()) > kMaxEdges) {
      throw SizeGuardError("edge-subset search supports at most 64 edges, graph has " +
                           std::to_string(edges_.size()));
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      index_[edges_[i].u * g.order() + edges_[i].v] = static_cast<int>(i);
      index_[edges_[i].v * g.order() + edges_[i].u] = static_cast<int>(i);
    }
  }

  const Graph& host() const { return host_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  int index(Edge e) const {
    int i = host_.has_edge(e) ? index_[e.u * host_.order() + e.v] : -1;
    if (i < 0) throw std::invalid_argument("edge is not in the indexed graph");
    return i;
  }

  EdgeMask all() const { return size() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << size()) - 1; }

  EdgeMask mask_of(std::span<const Edge> f) const {
    EdgeMask m = 0;
    for (const Edge& e : f) m |= EdgeMask{1} << index(e);
    return m;
  }

  std::vector<Edge> edges_of(EdgeMask m) const {
    std::vector<Edge> out;
    for (; m != 0; m &= m - 1) out.push_back(edges_[std::countr_zero(m)]);
    return out;
  }

  VertexSet endpoints(EdgeMask m) const {
    VertexSet out;
    for (; m != 0; m &= m - 1) {
      const Edge& e = edges_[std::countr_zero(m)];
      out.insert(e.u);
      out.insert(e.v);
    }
    return out;
  }

  /// Spanning subgraph of the host that keeps only the edges in m.
  Graph subgraph(EdgeMask m) const {
    Graph g(host_.order());
    for (; m != 0; m &= m - 1) {
      const Edge& e = edges_[std::countr_zero(m)];
      g.add_edge(e.u, e.v);
    }
    return g;
  }

  /// Edges of the host with both ends in x.
  EdgeMask induced(VertexSet x) const {
    EdgeMask m = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (x.contains(edges_[i].u) && x.contains(edges_[i].v)) m |= EdgeMask{1} << i;
    }
    return m;
  }

  /// Edges of the host with at least one end in x.
  EdgeMask incident(VertexSet x) const {
    EdgeMask m = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (x.contains(edges_[i].u) || x.contains(edges_[i].v)) m |= EdgeMask{1} << i;
    }
    return m;
  }

 private:
  Graph host_;
  std::vector<Edge> edges_;
  std::vector<int> index_;
};

inline int mask_size(EdgeMask m) { return std::popcount(m); }

}  // namespace brittle
