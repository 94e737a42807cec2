#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "brittle/classes.hpp"
#include "brittle/edge_index.hpp"
#include "brittle/embedding.hpp"
#include "brittle/errors.hpp"
#include "brittle/graph.hpp"

namespace brittle {

enum class Parameter { edit_distance, edge_brittleness, vertex_brittleness, capacity };

inline std::string_view parameter_name(Parameter p) {
  switch (p) {
    case Parameter::edit_distance: return "e";
    case Parameter::edge_brittleness: return "eta";
    case Parameter::vertex_brittleness: return "kappa";
    case Parameter::capacity: return "nu";
  }
  return "?";
}

inline Parameter parameter_from_name(std::string_view name) {
  if (name == "e" || name == "edit") return Parameter::edit_distance;
  if (name == "eta") return Parameter::edge_brittleness;
  if (name == "kappa") return Parameter::vertex_brittleness;
  if (name == "nu") return Parameter::capacity;
  throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

/// Size guards. The partition solvers refuse graphs above these bounds instead
/// of running an unbounded search.
struct Limits {
  int max_vertices = 20;
  int max_edges = 40;
  /// Bounds for the brute-force oracles (subset, partition and packing enumeration).
  int oracle_edges = 16;
  int oracle_vertices = 8;
  int oracle_partition_edges = 9;
};

struct EditCertificate {
  std::vector<Edge> deleted;
};

struct PartitionCertificate {
  std::vector<VertexSet> parts;
};

struct BoundaryCertificate {
  VertexSet boundary;
  std::vector<std::vector<Edge>> parts;
};

struct PackingCertificate {
  std::vector<std::vector<Edge>> witnesses;
};

using Certificate = std::variant<EditCertificate, PartitionCertificate, BoundaryCertificate, PackingCertificate>;

struct ParameterReport {
  Parameter parameter = Parameter::edit_distance;
  int value = 0;
  Certificate certificate;
  long long nodes_expanded = 0;
  double elapsed_ms = 0.0;
};

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void guard_partition_solver(const Graph& g, const Limits& limits, std::string_view what) {
  if (g.order() > limits.max_vertices || g.size() > limits.max_edges) {
    throw SizeGuardError(std::string(what) + ": graph with " + std::to_string(g.order()) + " vertices and " +
                         std::to_string(g.size()) + " edges exceeds the limit of " +
                         std::to_string(limits.max_vertices) + " vertices / " + std::to_string(limits.max_edges) +
                         " edges");
  }
}

/// Class membership of edge subsets of one host, memoised by mask.
class EdgeMembership {
 public:
  EdgeMembership(const GraphClass& c, const EdgeIndex& index) : class_(c), index_(index) {}

  bool operator()(EdgeMask m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    bool member = contains(class_, index_.subgraph(m));
    cache_.emplace(m, member);
    return member;
  }

 private:
  const GraphClass& class_;
  const EdgeIndex& index_;
  std::unordered_map<EdgeMask, bool> cache_;
};

/// Class membership of induced subgraphs of one host, memoised by vertex set.
class InducedMembership {
 public:
  InducedMembership(const GraphClass& c, const Graph& g) : class_(c), host_(g) {}

  bool operator()(VertexSet x) {
    auto it = cache_.find(x.bits());
    if (it != cache_.end()) return it->second;
    bool member = contains(class_, induced_subgraph(host_, x).graph);
    cache_.emplace(x.bits(), member);
    return member;
  }

 private:
  const GraphClass& class_;
  const Graph& host_;
  std::unordered_map<std::uint64_t, bool> cache_;
};

/// Lexicographic comparison of the sorted index lists two masks stand for.
inline bool tuple_less(EdgeMask a, EdgeMask b) {
  while (a != 0 && b != 0) {
    int x = std::countr_zero(a);
    int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

inline EdgeMask witness_mask(const GraphClass& c, const EdgeIndex& index, EdgeMask within) {
  auto w = find_minimal_witness(c.forbidden, index.subgraph(within));
  return w ? index.mask_of(w->edges) : 0;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edit distance
// ---------------------------------------------------------------------------

namespace detail {

// Bounded search for a deletion set: every feasible deletion set meets every
// forbidden subdivision, so branch on the edges of one minimal witness. Edges
// rejected by earlier sibling branches stay protected in later ones.
class EditSearch {
 public:
  EditSearch(const GraphClass& c, const EdgeIndex& index) : class_(c), index_(index) {}

  bool feasible(EdgeMask remaining, EdgeMask protected_edges, int budget) {
    ++nodes_;
    EdgeMask w = witness(remaining);
    if (w == 0) return true;
    if (budget == 0) return false;
    // Edge-disjoint witnesses each need their own deletion.
    int disjoint = 1;
    for (EdgeMask rest = remaining & ~w; disjoint <= budget;) {
      EdgeMask next = witness(rest);
      if (next == 0) break;
      ++disjoint;
      rest &= ~next;
    }
    if (disjoint > budget) return false;
    EdgeMask options = w & ~protected_edges;
    EdgeMask rejected = 0;
    for (EdgeMask rest = options; rest != 0; rest &= rest - 1) {
      EdgeMask bit = rest & (~rest + 1);
      if (feasible(remaining & ~bit, protected_edges | rejected, budget - 1)) return true;
      rejected |= bit;
    }
    return false;
  }

  long long nodes() const { return nodes_; }

 private:
  EdgeMask witness(EdgeMask remaining) {
    auto it = witnesses_.find(remaining);
    if (it != witnesses_.end()) return it->second;
    EdgeMask w = witness_mask(class_, index_, remaining);
    witnesses_.emplace(remaining, w);
    return w;
  }

  const GraphClass& class_;
  const EdgeIndex& index_;
  std::unordered_map<EdgeMask, EdgeMask> witnesses_;
  long long nodes_ = 0;
};

}  // namespace detail

/// Minimum number of edge deletions that put g into c, with the
/// lexicographically least optimal deletion set.
inline ParameterReport edit_distance(const GraphClass& c, const Graph& g) {
  detail::Stopwatch clock;
  EdgeIndex index(g);
  if (c.is_forests()) {
    // Keep a spanning forest built from the highest-indexed edges first; its
    // complement is the lexicographically least optimal deletion set.
    std::vector<int> root(g.order());
    for (int v = 0; v < g.order(); ++v) root[v] = v;
    auto find = [&](int v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    std::vector<Edge> deleted;
    for (int i = index.size() - 1; i >= 0; --i) {
      int a = find(index.edge(i).u), b = find(index.edge(i).v);
      if (a == b) {
        deleted.push_back(index.edge(i));
      } else {
        root[a] = b;
      }
    }
    std::reverse(deleted.begin(), deleted.end());
    return {Parameter::edit_distance, static_cast<int>(deleted.size()), EditCertificate{deleted}, index.size(),
            clock.elapsed_ms()};
  }
  detail::EditSearch search(c, index);
  const EdgeMask all = index.all();
  int best = 0;
  while (!search.feasible(all, 0, best)) ++best;

  // Smallest next edge that still admits an optimal completion using only later edges.
  EdgeMask chosen = 0;
  int last = -1;
  for (int picked = 0; picked < best; ++picked) {
    for (int cand = last + 1; cand < index.size(); ++cand) {
      EdgeMask bit = EdgeMask{1} << cand;
      EdgeMask upto = (cand + 1 >= 64) ? ~EdgeMask{0} : (EdgeMask{1} << (cand + 1)) - 1;
      if (search.feasible(all & ~(chosen | bit), upto, best - picked - 1)) {
        chosen |= bit;
        last = cand;
        break;
      }
    }
  }
  return {Parameter::edit_distance, best, EditCertificate{index.edges_of(chosen)}, search.nodes(),
          clock.elapsed_ms()};
}

// ---------------------------------------------------------------------------
// Edge-brittleness
// ---------------------------------------------------------------------------

/// Outcome of a bounded search for a vertex partition with few cross edges.
struct PartitionSearchOutcome {
  std::optional<PartitionCertificate> partition;  // set when one below the bound exists
  int cross_edges = 0;
  long long nodes_expanded = 0;
  bool budget_exhausted = false;
};

namespace detail {

// Vertices are assigned in label order; vertex i joins an existing part or
// opens a new one, so partitions are produced in restricted-growth order.
class PartitionSearch {
 public:
  PartitionSearch(const GraphClass& c, const Graph& g, long long node_budget)
      : g_(g), member_(c, g), node_budget_(node_budget) {}

  /// First partition in restricted-growth order whose cross-edge count is at most `limit`.
  std::optional<std::pair<std::vector<VertexSet>, int>> first_within(int limit) {
    limit_ = limit;
    parts_.clear();
    found_.reset();
    assign(0, 0);
    return found_;
  }

  long long nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  bool assign(int v, int cross) {
    if (node_budget_ > 0 && nodes_ >= node_budget_) {
      exhausted_ = true;
      return true;
    }
    ++nodes_;
    if (v == g_.order()) {
      found_ = std::make_pair(parts_, cross);
      return true;
    }
    VertexSet before = VertexSet::range(v);
    int back = (g_.neighbors(v) & before).size();
    for (std::size_t p = 0; p <= parts_.size(); ++p) {
      bool fresh = p == parts_.size();
      VertexSet part = fresh ? VertexSet() : parts_[p];
      int added = back - (g_.neighbors(v) & part).size();
      if (cross + added > limit_) continue;
      part.insert(v);
      if (!fresh && !member_(part)) continue;
      if (fresh) {
        parts_.push_back(part);
      } else {
        parts_[p] = part;
      }
      bool done = assign(v + 1, cross + added);
      if (fresh) {
        parts_.pop_back();
      } else {
        parts_[p].erase(v);
      }
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  InducedMembership member_;
  long long node_budget_;
  long long nodes_ = 0;
  bool exhausted_ = false;
  int limit_ = 0;
  std::vector<VertexSet> parts_;
  std::optional<std::pair<std::vector<VertexSet>, int>> found_;
};

inline int greedy_partition_cross(const GraphClass& c, const Graph& g) {
  InducedMembership member(c, g);
  std::vector<VertexSet> parts;
  int cross = 0;
  for (int v = 0; v < g.order(); ++v) {
    int back = (g.neighbors(v) & VertexSet::range(v)).size();
    int best_part = -1;
    int best_added = back;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      int added = back - (g.neighbors(v) & parts[p]).size();
      if (added < best_added && member(parts[p] | VertexSet::singleton(v))) {
        best_added = added;
        best_part = static_cast<int>(p);
      }
    }
    if (best_part < 0) {
      parts.push_back(VertexSet::singleton(v));
    } else {
      parts[best_part].insert(v);
    }
    cross += best_added;
  }
  return cross;
}

}  // namespace detail

/// Decides whether some valid vertex partition has fewer than `bound` cross
/// edges. A zero node budget means unlimited.
inline PartitionSearchOutcome partition_below(const GraphClass& c, const Graph& g, int bound,
                                              long long node_budget = 0) {
  PartitionSearchOutcome out;
  if (bound <= 0) return out;
  detail::PartitionSearch search(c, g, node_budget);
  auto found = search.first_within(bound - 1);
  out.nodes_expanded = search.nodes();
  if (found) {
    out.partition = PartitionCertificate{found->first};
    out.cross_edges = found->second;
  } else {
    out.budget_exhausted = search.exhausted();
  }
  return out;
}

inline ParameterReport edge_brittleness(const GraphClass& c, const Graph& g, const Limits& limits = {}) {
  detail::Stopwatch clock;
  detail::guard_partition_solver(g, limits, "edge-brittleness");
  detail::PartitionSearch search(c, g, 0);
  // Tighten from a greedy incumbent until nothing better exists.
  int best = detail::greedy_partition_cross(c, g);
  while (best > 0) {
    auto better = search.first_within(best - 1);
    if (!better) break;
    best = better->second;
  }
  auto lex_first = search.first_within(best);
  return {Parameter::edge_brittleness, best, PartitionCertificate{lex_first->first}, search.nodes(),
          clock.elapsed_ms()};
}

// ---------------------------------------------------------------------------
// Vertex-brittleness
// ---------------------------------------------------------------------------

/// The Y-bridges of g: one edge set per component of g - Y (its internal edges
/// plus its edges to Y), followed by one singleton per edge inside Y.
inline std::vector<EdgeMask> bridge_partition(const EdgeIndex& index, VertexSet y) {
  const Graph& g = index.host();
  std::vector<EdgeMask> parts;
  for (VertexSet comp : components_within(g, g.vertices() - y)) {
    EdgeMask m = index.incident(comp);
    if (m != 0) parts.push_back(m);
  }
  for (EdgeMask inside = index.induced(y); inside != 0; inside &= inside - 1) {
    parts.push_back(inside & (~inside + 1));
  }
  return parts;
}

/// Minimum |Y| such that every Y-bridge lies in c. Any edge partition with
/// boundary W forces each W-bridge into a single part, so by monotonicity this
/// equals the minimum boundary over all valid edge partitions.
inline ParameterReport vertex_brittleness(const GraphClass& c, const Graph& g, const Limits& limits = {}) {
  detail::Stopwatch clock;
  detail::guard_partition_solver(g, limits, "vertex-brittleness");
  EdgeIndex index(g);
  detail::EdgeMembership member(c, index);
  const int n = g.order();
  long long nodes = 0;
  for (int k = 0; k <= n; ++k) {
    // Subsets of size k in lexicographic order of their sorted members.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      ++nodes;
      VertexSet y;
      for (int v : pick) y.insert(v);
      auto parts = bridge_partition(index, y);
      bool ok = std::all_of(parts.begin(), parts.end(), [&](EdgeMask m) { return member(m); });
      if (ok) {
        BoundaryCertificate cert{y, {}};
        std::sort(parts.begin(), parts.end(), detail::tuple_less);
        for (EdgeMask m : parts) cert.parts.push_back(index.edges_of(m));
        return {Parameter::vertex_brittleness, k, cert, nodes, clock.elapsed_ms()};
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("vertex-brittleness: Y = V(G) must always be feasible");
}

// ---------------------------------------------------------------------------
// Capacity
// ---------------------------------------------------------------------------

/// Every inclusion-minimal edge set of g that spans a forbidden subdivision,
/// sorted lexicographically by edge index. Any edge set outside c contains one
/// of these, so packings may be restricted to them without loss.
///
/// Lawler-style enumeration: a node (within, kept) stands for the minimal
/// witnesses X with kept <= X <= within. Given one minimal witness W inside
/// `within`, every other target misses an edge of W outside `kept`; branching
/// on the first such missing edge splits the targets into disjoint children,
/// so each witness is reported exactly once.
inline std::vector<EdgeMask> minimal_witnesses(const GraphClass& c, const EdgeIndex& index,
                                               long long* nodes = nullptr) {
  std::vector<EdgeMask> found;
  std::unordered_map<EdgeMask, EdgeMask> witness_in;
  auto visit = [&](auto&& self, EdgeMask within, EdgeMask kept) -> void {
    if (nodes) ++*nodes;
    if (kept != 0) {
      // Forbidden graphs are 2-connected, so a minimal witness lies in one
      // block of `within`; kept edges spread over two blocks rule it out.
      const Graph sub = index.subgraph(within);
      VertexSet ends = index.endpoints(kept);
      auto blocks = blocks_within(sub, index.endpoints(within));
      bool one_block = std::any_of(blocks.begin(), blocks.end(), [&](VertexSet b) {
        return ends.is_subset_of(b) && (index.induced(b) & kept) == kept;
      });
      if (!one_block) return;
      EdgeMask inside_kept = detail::witness_mask(c, index, kept);
      if (inside_kept != 0) {
        // kept is already outside c: the only candidate is kept itself.
        if (inside_kept == kept) found.push_back(kept);
        return;
      }
    }
    auto cached = witness_in.find(within);
    EdgeMask w = cached != witness_in.end() ? cached->second
                                             : witness_in.emplace(within, detail::witness_mask(c, index, within))
                                                   .first->second;
    if (w == 0) return;
    if ((kept & ~w) == 0) found.push_back(w);
    EdgeMask fixed = kept;
    for (EdgeMask rest = w & ~kept; rest != 0; rest &= rest - 1) {
      EdgeMask bit = rest & (~rest + 1);
      self(self, within & ~bit, fixed);
      fixed |= bit;
    }
  };
  visit(visit, index.all(), 0);
  std::sort(found.begin(), found.end(), detail::tuple_less);
  return found;
}

namespace detail {

// Some member of a maximum packing meets any given witness W (otherwise W
// could be added), so branch over the witnesses that meet the first witness
// still available.
class PackingSearch {
 public:
  explicit PackingSearch(std::vector<EdgeMask> witnesses) : witnesses_(std::move(witnesses)) {
    for (EdgeMask w : witnesses_) smallest_ = std::min(smallest_, std::popcount(w));
  }

  int best(EdgeMask available) {
    auto it = memo_.find(available);
    if (it != memo_.end()) return it->second;
    ++nodes_;
    EdgeMask first = 0;
    EdgeMask reach = 0;
    for (EdgeMask w : witnesses_) {
      if ((w & ~available) != 0) continue;
      if (first == 0) first = w;
      reach |= w;
    }
    int value = 0;
    if (first != 0) {
      const int ceiling = std::popcount(reach) / smallest_;
      for (EdgeMask w : witnesses_) {
        if ((w & ~available) != 0 || (w & first) == 0) continue;
        value = std::max(value, 1 + best(available & ~w));
        if (value == ceiling) break;
      }
    }
    memo_.emplace(available, value);
    return value;
  }

  const std::vector<EdgeMask>& witnesses() const { return witnesses_; }
  long long nodes() const { return nodes_; }

 private:
  std::vector<EdgeMask> witnesses_;
  int smallest_ = 64;
  std::unordered_map<EdgeMask, int> memo_;
  long long nodes_ = 0;
};

}  // namespace detail

/// Maximum number of pairwise edge-disjoint subgraphs of g outside c, with the
/// lexicographically least optimal packing of minimal witnesses.
inline ParameterReport capacity(const GraphClass& c, const Graph& g) {
  detail::Stopwatch clock;
  EdgeIndex index(g);
  long long nodes = 0;
  detail::PackingSearch search(minimal_witnesses(c, index, &nodes));
  EdgeMask available = index.all();
  const int value = search.best(available);

  PackingCertificate cert;
  int still_needed = value;
  for (EdgeMask w : search.witnesses()) {
    if (still_needed == 0) break;
    if ((w & ~available) != 0) continue;
    if (1 + search.best(available & ~w) == still_needed) {
      cert.witnesses.push_back(index.edges_of(w));
      available &= ~w;
      --still_needed;
    }
  }
  return {Parameter::capacity, value, cert, nodes + search.nodes(), clock.elapsed_ms()};
}

// ---------------------------------------------------------------------------

inline ParameterReport compute(Parameter p, const GraphClass& c, const Graph& g, const Limits& limits = {}) {
  switch (p) {
    case Parameter::edit_distance: return edit_distance(c, g);
    case Parameter::edge_brittleness: return edge_brittleness(c, g, limits);
    case Parameter::vertex_brittleness: return vertex_brittleness(c, g, limits);
    case Parameter::capacity: return capacity(c, g);
  }
  throw std::invalid_argument("unknown parameter");
}

struct AllParameters {
  ParameterReport e;
  ParameterReport eta;
  ParameterReport kappa;
  ParameterReport nu;

  /// e <= eta, kappa <= 2e, nu <= e.
  bool basic_inequalities_hold() const {
    return e.value <= eta.value && kappa.value <= 2 * e.value && nu.value <= e.value;
  }
};

inline AllParameters all_parameters(const GraphClass& c, const Graph& g, const Limits& limits = {}) {
  return {edit_distance(c, g), edge_brittleness(c, g, limits), vertex_brittleness(c, g, limits), capacity(c, g)};
}

// ---------------------------------------------------------------------------
// Certificate replay
// ---------------------------------------------------------------------------

/// Re-derives the reported value from the certificate alone and checks every
/// feasibility condition against g and c.
inline bool certificate_replays(const GraphClass& c, const Graph& g, const ParameterReport& report) {
  return std::visit(
      [&](const auto& cert) -> bool {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, EditCertificate>) {
          std::vector<Edge> sorted = cert.deleted;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
          for (const Edge& e : sorted) {
            if (!g.has_edge(e)) return false;
          }
          return static_cast<int>(sorted.size()) == report.value && contains(c, delete_edges(g, sorted));
        } else if constexpr (std::is_same_v<T, PartitionCertificate>) {
          VertexSet covered;
          std::vector<int> part_of(g.order(), -1);
          for (std::size_t i = 0; i < cert.parts.size(); ++i) {
            VertexSet part = cert.parts[i];
            if (part.empty() || part.intersects(covered) || !part.is_subset_of(g.vertices())) return false;
            covered |= part;
            for (int v : part) part_of[v] = static_cast<int>(i);
            if (!contains(c, induced_subgraph(g, part).graph)) return false;
          }
          if (covered != g.vertices()) return false;
          int cross = 0;
          for (const Edge& e : g.edges()) cross += part_of[e.u] != part_of[e.v] ? 1 : 0;
          return cross == report.value;
        } else if constexpr (std::is_same_v<T, BoundaryCertificate>) {
          EdgeIndex index(g);
          std::vector<int> owner(index.size(), -1);
          for (std::size_t i = 0; i < cert.parts.size(); ++i) {
            if (cert.parts[i].empty()) return false;
            for (const Edge& e : cert.parts[i]) {
              if (!g.has_edge(e)) return false;
              int idx = index.index(e);
              if (owner[idx] >= 0) return false;
              owner[idx] = static_cast<int>(i);
            }
            if (!contains(c, index.subgraph(index.mask_of(cert.parts[i])))) return false;
          }
          if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
          std::vector<int> seen_part(g.order(), -1);
          VertexSet boundary;
          for (int i = 0; i < index.size(); ++i) {
            for (int v : {index.edge(i).u, index.edge(i).v}) {
              if (seen_part[v] < 0) {
                seen_part[v] = owner[i];
              } else if (seen_part[v] != owner[i]) {
                boundary.insert(v);
              }
            }
          }
          return boundary == cert.boundary && boundary.size() == report.value;
        } else {
          EdgeIndex index(g);
          EdgeMask used = 0;
          for (const auto& w : cert.witnesses) {
            for (const Edge& e : w) {
              if (!g.has_edge(e)) return false;
            }
            EdgeMask m = index.mask_of(w);
            if ((m & used) != 0 || contains(c, index.subgraph(m))) return false;
            used |= m;
          }
          return static_cast<int>(cert.witnesses.size()) == report.value;
        }
      },
      report.certificate);
}

}  // namespace brittle
