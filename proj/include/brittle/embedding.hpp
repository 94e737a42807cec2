#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "brittle/canonical.hpp"
#include "brittle/errors.hpp"
#include "brittle/graph.hpp"

namespace brittle {

/// A subdivision embedding of a pattern into a host.
///
/// branch[v] is the host vertex standing for pattern vertex v; paths[i] is the
/// host path realising the i-th pattern edge (in Graph::edges() order), listed
/// from branch[e.u] to branch[e.v].
struct Embedding {
  std::vector<int> branch;
  std::vector<std::vector<int>> paths;
};

/// A forbidden subdivision found in a host: which pattern, how it sits, and
/// the subgraph it spans.
struct Witness {
  std::size_t pattern = 0;
  Embedding embedding;
  VertexSet vertices;
  std::vector<Edge> edges;
};

inline std::vector<Edge> embedding_edges(const Embedding& emb) {
  std::vector<Edge> out;
  for (const auto& path : emb.paths) {
    for (std::size_t i = 1; i < path.size(); ++i) out.emplace_back(path[i - 1], path[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexSet embedding_vertices(const Embedding& emb) {
  VertexSet out;
  for (int v : emb.branch) out.insert(v);
  for (const auto& path : emb.paths) {
    for (int v : path) out.insert(v);
  }
  return out;
}

/// Replays an embedding against pattern and host and checks every invariant:
/// injective branch map, paths that run between the right branch vertices
/// along host edges, and internal disjointness.
inline bool is_embedding(const Graph& pattern, const Graph& host, const Embedding& emb) {
  const auto pattern_edges = pattern.edges();
  if (static_cast<int>(emb.branch.size()) != pattern.order()) return false;
  if (emb.paths.size() != pattern_edges.size()) return false;
  VertexSet images;
  for (int v : emb.branch) {
    if (!host.has_vertex(v) || images.contains(v)) return false;
    images.insert(v);
  }
  VertexSet internal;
  for (std::size_t i = 0; i < pattern_edges.size(); ++i) {
    const auto& path = emb.paths[i];
    if (path.size() < 2) return false;
    if (path.front() != emb.branch[pattern_edges[i].u] || path.back() != emb.branch[pattern_edges[i].v]) {
      return false;
    }
    VertexSet on_path;
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (!host.has_vertex(path[k]) || on_path.contains(path[k])) return false;
      on_path.insert(path[k]);
      if (k > 0 && !host.has_edge(path[k - 1], path[k])) return false;
      if (k > 0 && k + 1 < path.size()) {
        if (images.contains(path[k]) || internal.contains(path[k])) return false;
        internal.insert(path[k]);
      }
    }
  }
  return true;
}

namespace detail {

// Backtracking search for a subdivision of a small pattern.
//
// Pattern vertices are placed one at a time; as soon as both ends of a pattern
// edge are placed, the edge is routed along a host path. Only chordless host
// paths are tried: a chord could always replace the stretch of path it skips,
// so some embedding exists iff one with chordless paths exists. Pattern
// automorphisms are factored out by a stabiliser-chain ordering constraint on
// the branch images.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host)
      : pattern_(pattern), host_(host), pattern_edges_(pattern.edges()) {
    const int k = pattern.order();
    plan_order();
    position_.assign(k, -1);
    for (int i = 0; i < k; ++i) position_[order_[i]] = i;
    earlier_.assign(k, {});
    for (std::size_t idx = 0; idx < pattern_edges_.size(); ++idx) {
      const Edge& e = pattern_edges_[idx];
      int late = position_[e.u] > position_[e.v] ? e.u : e.v;
      int early = late == e.u ? e.v : e.u;
      earlier_[late].push_back({early, static_cast<int>(idx)});
    }
    for (auto& list : earlier_) {
      std::sort(list.begin(), list.end(),
                [&](const Route& a, const Route& b) { return position_[a.from] < position_[b.from]; });
    }
    plan_symmetry();
  }

  std::optional<Embedding> run(VertexSet allowed) {
    allowed_ = allowed & host_.vertices();
    branch_.assign(pattern_.order(), -1);
    paths_.assign(pattern_edges_.size(), {});
    used_ = VertexSet();
    pending_.assign(pattern_.order(), 0);
    for (int v = 0; v < pattern_.order(); ++v) pending_[v] = pattern_.degree(v);
    if (place(0)) return Embedding{branch_, paths_};
    return std::nullopt;
  }

 private:
  struct Route {
    int from;
    int edge;
  };

  void plan_order() {
    const int k = pattern_.order();
    std::vector<bool> chosen(k, false);
    for (int step = 0; step < k; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < k; ++v) {
        if (chosen[v]) continue;
        int links = 0;
        for (int w : pattern_.neighbors(v)) links += chosen[w] ? 1 : 0;
        if (links > best_links || (links == best_links && pattern_.degree(v) > pattern_.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      chosen[best] = true;
      order_.push_back(best);
    }
  }

  void plan_symmetry() {
    const int k = pattern_.order();
    must_exceed_.assign(k, {});
    auto group = automorphisms(pattern_);
    for (int i = 0; i < k; ++i) {
      int base = order_[i];
      VertexSet orbit;
      for (const auto& perm : group) orbit.insert(perm[base]);
      for (int w : orbit) {
        if (w != base) must_exceed_[w].push_back(base);
      }
      std::erase_if(group, [&](const std::vector<int>& perm) { return perm[base] != base; });
    }
  }

  VertexSet free_vertices() const { return allowed_ - used_; }

  bool place(int i) {
    if (i == pattern_.order()) return true;
    const int u = order_[i];
    const int need = pattern_.degree(u);
    VertexSet linked;
    for (const Route& r : earlier_[u]) linked.insert(branch_[r.from]);
    for (int v : free_vertices()) {
      if ((host_.neighbors(v) & allowed_).size() < need) continue;
      if ((host_.neighbors(v) & (free_vertices() | linked)).size() < need) continue;
      bool ordered = true;
      for (int smaller : must_exceed_[u]) {
        if (branch_[smaller] > v) {
          ordered = false;
          break;
        }
      }
      if (!ordered) continue;
      branch_[u] = v;
      used_.insert(v);
      for (const Route& r : earlier_[u]) --pending_[r.from];
      pending_[u] -= static_cast<int>(earlier_[u].size());
      if (route(u, 0, i)) return true;
      for (const Route& r : earlier_[u]) ++pending_[r.from];
      pending_[u] += static_cast<int>(earlier_[u].size());
      used_.erase(v);
      branch_[u] = -1;
    }
    return false;
  }

  bool degrees_still_feasible() const {
    VertexSet free = free_vertices();
    for (int v = 0; v < pattern_.order(); ++v) {
      if (branch_[v] < 0 || pending_[v] == 0) continue;
      if ((host_.neighbors(branch_[v]) & free).size() < pending_[v]) return false;
    }
    return true;
  }

  bool route(int u, std::size_t r, int i) {
    if (r == earlier_[u].size()) return degrees_still_feasible() && place(i + 1);
    const Route& job = earlier_[u][r];
    const int start = branch_[job.from];
    const int target = branch_[u];
    std::vector<int> path{start};
    return extend(u, r, i, path, VertexSet::singleton(start), VertexSet(), target);
  }

  // `blocked` holds the neighbours of every path vertex except the last one;
  // stepping onto a blocked vertex would create a chord.
  bool extend(int u, std::size_t r, int i, std::vector<int>& path, VertexSet on_path, VertexSet blocked,
              int target) {
    const int cur = path.back();
    if (host_.neighbors(cur).contains(target)) {
      path.push_back(target);
      const int edge = earlier_[u][r].edge;
      VertexSet inner = on_path - VertexSet::singleton(path.front());
      std::vector<int> stored = path;
      if (pattern_edges_[edge].u != earlier_[u][r].from) std::reverse(stored.begin(), stored.end());
      paths_[edge] = std::move(stored);
      used_ |= inner;
      if (route(u, r + 1, i)) return true;
      used_ -= inner;
      paths_[edge].clear();
      path.pop_back();
      return false;
    }
    VertexSet next_blocked = blocked | host_.neighbors(cur);
    VertexSet steps = (host_.neighbors(cur) & free_vertices()) - on_path - blocked;
    for (int w : steps) {
      VertexSet corridor = (free_vertices() - on_path - next_blocked) | VertexSet::singleton(target);
      corridor.insert(w);
      if (!reach(host_, w, corridor).contains(target)) continue;
      path.push_back(w);
      on_path.insert(w);
      if (extend(u, r, i, path, on_path, next_blocked, target)) return true;
      on_path.erase(w);
      path.pop_back();
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::vector<Edge> pattern_edges_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<std::vector<Route>> earlier_;
  std::vector<std::vector<int>> must_exceed_;

  VertexSet allowed_;
  VertexSet used_;
  std::vector<int> branch_;
  std::vector<std::vector<int>> paths_;
  std::vector<int> pending_;
};

}  // namespace detail

/// Finds a subdivision of `pattern` inside `host` restricted to the vertices in
/// `allowed`, or reports that none exists. The search is complete.
inline std::optional<Embedding> find_embedding_within(const Graph& pattern, const Graph& host, VertexSet allowed) {
  allowed &= host.vertices();
  if (pattern.order() == 0) return Embedding{};
  if (pattern.order() > allowed.size()) return std::nullopt;
  detail::EmbeddingSearch search(pattern, host);
  if (is_2_connected(pattern)) {
    // A subdivision of a 2-connected graph is 2-connected, hence inside one block.
    for (VertexSet block : blocks_within(host, allowed)) {
      if (block.size() < pattern.order()) continue;
      if (auto found = search.run(block)) return found;
    }
    return std::nullopt;
  }
  return search.run(allowed);
}

inline std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host) {
  return find_embedding_within(pattern, host, host.vertices());
}

inline bool is_free(std::span<const Graph> forbidden, const Graph& g) {
  for (const Graph& h : forbidden) {
    if (find_embedding(h, g)) return false;
  }
  return true;
}

inline void require_two_connected(std::span<const Graph> forbidden) {
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    if (!is_2_connected(forbidden[i])) {
      throw ConfigurationError("forbidden graph #" + std::to_string(i) + " is not 2-connected");
    }
  }
}

/// Finds a forbidden subdivision in g whose edge set is inclusion-minimal among
/// subgraphs of g that contain any forbidden subdivision.
inline std::optional<Witness> find_minimal_witness(std::span<const Graph> forbidden, const Graph& g) {
  require_two_connected(forbidden);
  std::optional<Witness> found;
  for (std::size_t p = 0; p < forbidden.size() && !found; ++p) {
    if (auto emb = find_embedding(forbidden[p], g)) found = Witness{p, *emb, {}, {}};
  }
  if (!found) return std::nullopt;

  // Shrink: drop one edge at a time while some forbidden subdivision survives.
  // An edge whose removal leaves no subdivision stays necessary in every
  // smaller candidate, so each edge is tried at most once.
  std::vector<Edge> current = embedding_edges(found->embedding);
  std::vector<Edge> necessary;
  while (true) {
    auto next = std::find_if(current.begin(), current.end(), [&](const Edge& e) {
      return std::find(necessary.begin(), necessary.end(), e) == necessary.end();
    });
    if (next == current.end()) break;
    const Edge dropped = *next;
    Graph trial(g.order());
    for (const Edge& e : current) {
      if (!(e == dropped)) trial.add_edge(e.u, e.v);
    }
    bool survived = false;
    for (std::size_t p = 0; p < forbidden.size() && !survived; ++p) {
      if (auto emb = find_embedding(forbidden[p], trial)) {
        found = Witness{p, *emb, {}, {}};
        current = embedding_edges(*emb);
        survived = true;
      }
    }
    if (!survived) necessary.push_back(dropped);
  }
  found->edges = current;
  found->vertices = embedding_vertices(found->embedding);
  return found;
}

}  // namespace brittle
