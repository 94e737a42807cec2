#pragma once

// Slow, obviously-correct reference implementations used to cross-check the
// search-based solvers. Every function refuses inputs above its size guard.

#include <algorithm>
#include <bit>
#include <set>
#include <string>
#include <vector>

#include "brittle/canonical.hpp"
#include "brittle/classes.hpp"
#include "brittle/edge_index.hpp"
#include "brittle/errors.hpp"
#include "brittle/graph.hpp"
#include "brittle/parameters.hpp"

namespace brittle::oracle {

namespace detail {

inline void guard(bool ok, const std::string& what) {
  if (!ok) throw SizeGuardError("oracle " + what + ": input too large");
}

// Calls fn(part_of) for every set partition of {0..n-1}, as restricted growth strings.
template <class Fn>
void for_each_partition(int n, Fn&& fn) {
  std::vector<int> label(n, 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == n) {
      fn(label, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

/// Membership of every edge subset of g, indexed by mask. A subset is tested
/// directly only when all its one-edge-smaller subsets are members; otherwise
/// it contains a non-member and, classes being monotone, is one too.
class MembershipTable {
 public:
  MembershipTable(const GraphClass& c, const Graph& g, int max_edges) : index_(g) {
    detail::guard(index_.size() <= max_edges, "membership table");
    const EdgeMask all = index_.all();
    member_.assign(static_cast<std::size_t>(all) + 1, 0);
    for (EdgeMask m = 0; m <= all; ++m) {
      bool smaller_ok = true;
      for (EdgeMask rest = m; rest != 0 && smaller_ok; rest &= rest - 1) {
        smaller_ok = member_[m & ~(rest & (~rest + 1))] != 0;
      }
      member_[m] = smaller_ok && contains(c, index_.subgraph(m)) ? 1 : 0;
    }
  }

  const EdgeIndex& index() const { return index_; }
  bool member(EdgeMask m) const { return member_[m] != 0; }

  /// Non-members all of whose one-edge-smaller subsets are members.
  bool minimal_non_member(EdgeMask m) const {
    if (member(m)) return false;
    for (EdgeMask rest = m; rest != 0; rest &= rest - 1) {
      if (!member(m & ~(rest & (~rest + 1)))) return false;
    }
    return true;
  }

 private:
  EdgeIndex index_;
  std::vector<std::uint8_t> member_;
};

/// e by trying every deletion set.
inline int edit_distance(const MembershipTable& table) {
  const EdgeMask all = table.index().all();
  int best = table.index().size();
  for (EdgeMask keep = 0; keep <= all; ++keep) {
    if (table.member(keep)) best = std::min(best, table.index().size() - std::popcount(keep));
  }
  return best;
}

inline int edit_distance(const GraphClass& c, const Graph& g, const Limits& limits = {}) {
  return edit_distance(MembershipTable(c, g, limits.oracle_edges));
}

/// eta over every vertex partition.
inline int edge_brittleness(const GraphClass& c, const Graph& g, const Limits& limits = {}) {
  detail::guard(g.order() <= limits.oracle_vertices, "eta");
  int best = g.size();
  detail::for_each_partition(g.order(), [&](const std::vector<int>& part_of, int blocks) {
    std::vector<VertexSet> parts(blocks);
    for (int v = 0; v < g.order(); ++v) parts[part_of[v]].insert(v);
    int cross = 0;
    for (const Edge& e : g.edges()) cross += part_of[e.u] != part_of[e.v] ? 1 : 0;
    if (cross >= best) return;
    for (VertexSet p : parts) {
      if (!contains(c, induced_subgraph(g, p).graph)) return;
    }
    best = cross;
  });
  return best;
}

/// kappa over every edge partition: the fewest vertices whose incident edges
/// lie in two or more parts.
inline int vertex_brittleness(const MembershipTable& table, const Limits& limits = {}) {
  const EdgeIndex& index = table.index();
  const Graph& g = index.host();
  detail::guard(index.size() <= limits.oracle_partition_edges, "kappa");
  int best = g.order();
  detail::for_each_partition(index.size(), [&](const std::vector<int>& part_of, int blocks) {
    std::vector<EdgeMask> parts(blocks, 0);
    for (int i = 0; i < index.size(); ++i) parts[part_of[i]] |= EdgeMask{1} << i;
    std::vector<int> first(g.order(), -1);
    VertexSet boundary;
    for (int i = 0; i < index.size(); ++i) {
      for (int v : {index.edge(i).u, index.edge(i).v}) {
        if (first[v] < 0) {
          first[v] = part_of[i];
        } else if (first[v] != part_of[i]) {
          boundary.insert(v);
        }
      }
    }
    if (boundary.size() >= best) return;
    for (EdgeMask m : parts) {
      if (!table.member(m)) return;
    }
    best = boundary.size();
  });
  return best;
}

inline int vertex_brittleness(const GraphClass& c, const Graph& g, const Limits& limits = {}) {
  return vertex_brittleness(MembershipTable(c, g, limits.oracle_partition_edges), limits);
}

/// Inclusion-minimal edge sets outside c, in increasing mask order.
inline std::vector<EdgeMask> minimal_non_members(const MembershipTable& table) {
  std::vector<EdgeMask> out;
  const EdgeMask all = table.index().all();
  for (EdgeMask m = 1; m <= all && m != 0; ++m) {
    if (table.minimal_non_member(m)) out.push_back(m);
  }
  return out;
}

/// nu as an exact set packing over the minimal non-member edge sets.
inline int capacity(const MembershipTable& table) {
  auto sets = minimal_non_members(table);
  int best = 0;
  auto rec = [&](auto&& self, std::size_t i, EdgeMask used, int count) -> void {
    if (count + static_cast<int>(sets.size() - i) <= best) return;
    if (i == sets.size()) {
      best = std::max(best, count);
      return;
    }
    if ((sets[i] & used) == 0) self(self, i + 1, used | sets[i], count + 1);
    self(self, i + 1, used, count);
  };
  rec(rec, 0, 0, 0);
  return best;
}

inline int capacity(const GraphClass& c, const Graph& g, const Limits& limits = {}) {
  return capacity(MembershipTable(c, g, limits.oracle_edges));
}

/// nu straight from the definition: the most parts outside c over all edge partitions.
inline int capacity_by_partition(const MembershipTable& table, const Limits& limits = {}) {
  const EdgeIndex& index = table.index();
  detail::guard(index.size() <= limits.oracle_partition_edges, "nu");
  int best = 0;
  detail::for_each_partition(index.size(), [&](const std::vector<int>& part_of, int blocks) {
    if (blocks <= best) return;
    std::vector<EdgeMask> parts(blocks, 0);
    for (int i = 0; i < index.size(); ++i) parts[part_of[i]] |= EdgeMask{1} << i;
    int outside = 0;
    for (EdgeMask m : parts) outside += table.member(m) ? 0 : 1;
    best = std::max(best, outside);
  });
  return best;
}

inline int capacity_by_partition(const GraphClass& c, const Graph& g, const Limits& limits = {}) {
  return capacity_by_partition(MembershipTable(c, g, limits.oracle_partition_edges), limits);
}

/// Whether h is a topological minor of g, by exploring everything reachable
/// through edge deletion, vertex deletion and suppression (isomorphism classes only).
inline bool is_topological_minor(const Graph& h, const Graph& g, int max_vertices = 7) {
  detail::guard(g.order() <= max_vertices, "topological minor");
  const CanonicalForm target = canonical_form(h);
  std::set<CanonicalForm> seen;
  std::vector<Graph> stack{canonical_graph(g)};
  seen.insert(canonical_form(g));
  while (!stack.empty()) {
    Graph cur = std::move(stack.back());
    stack.pop_back();
    if (cur.order() == h.order() && cur.size() == h.size() && canonical_form(cur) == target) return true;
    if (cur.order() < h.order() || cur.size() < h.size()) continue;
    std::vector<Graph> next;
    for (const Edge& e : cur.edges()) next.push_back(delete_edges(cur, std::vector<Edge>{e}));
    for (int v = 0; v < cur.order(); ++v) {
      next.push_back(delete_vertices(cur, VertexSet::singleton(v)));
      if (cur.degree(v) == 2) next.push_back(suppress(cur, v));
    }
    for (Graph& n : next) {
      if (seen.insert(canonical_form(n)).second) stack.push_back(std::move(n));
    }
  }
  return false;
}

}  // namespace brittle::oracle
