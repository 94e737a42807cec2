#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brittle/canonical.hpp"
#include "brittle/edge_index.hpp"
#include "brittle/embedding.hpp"
#include "brittle/generate.hpp"
#include "brittle/graph.hpp"
#include "brittle/parallel.hpp"

namespace brittle {

enum class TrapStatus { not_snare, snare_not_trap, trap };

inline std::string_view status_name(TrapStatus s) {
  switch (s) {
    case TrapStatus::not_snare: return "not-snare";
    case TrapStatus::snare_not_trap: return "snare-not-trap";
    case TrapStatus::trap: return "trap";
  }
  return "?";
}

/// A pair (J, S) judged against a target pattern H.
struct SnareCandidate {
  Graph j;
  VertexSet s;
  Graph h;
};

struct TrapRecord {
  Graph j;
  VertexSet s;
  std::string h_name;
  TrapStatus status = TrapStatus::not_snare;
  CanonicalForm key;
};

/// H is a topological minor of J, S is independent in J, and J - S is connected.
inline bool is_snare(const Graph& j, VertexSet s, const Graph& h) {
  require_subset(j, s);
  if (!is_independent(j, s)) return false;
  if (!is_connected_within(j, j.vertices() - s)) return false;
  return find_embedding(h, j).has_value();
}

inline bool is_snare(const SnareCandidate& c) { return is_snare(c.j, c.s, c.h); }

/// Upper bound on |V(J)| for an H-trap (J, S) with connected H. The published
/// statement reads 5|E|+4|V|+9|S| while its derivation ends at 5|V|+4|E|+9|S|;
/// the larger of the two holds either way.
inline int trap_order_bound(const Graph& h, int s_size) {
  return std::max(5 * h.size() + 4 * h.order(), 5 * h.order() + 4 * h.size()) + 9 * s_size;
}

namespace detail {

// Snare test for the spanning subgraph of J that keeps the edges in `kept`,
// with its isolated vertices dropped (isolated vertices outside S would
// disconnect J' - S', isolated vertices in S never matter).
inline bool edge_subset_is_snare(const EdgeIndex& index, EdgeMask kept, VertexSet s, const Graph& h) {
  Graph sub = index.subgraph(kept);
  VertexSet live = index.endpoints(kept);
  if (!is_connected_within(sub, live - s)) return false;
  return find_embedding_within(h, sub, live).has_value();
}

inline bool smaller_snare_below(const EdgeIndex& index, EdgeMask kept, int start, VertexSet s, const Graph& h) {
  for (int i = start; i < index.size(); ++i) {
    EdgeMask bit = EdgeMask{1} << i;
    if ((kept & bit) == 0) continue;
    EdgeMask sub = kept & ~bit;
    // Containing H is monotone, so a subset without H has no snare below it.
    if (!find_embedding_within(h, index.subgraph(sub), index.endpoints(sub))) continue;
    if (edge_subset_is_snare(index, sub, s, h)) return true;
    if (smaller_snare_below(index, sub, i + 1, s, h)) return true;
  }
  return false;
}

// S after deleting vertex `removed` and shifting higher labels down by one.
inline VertexSet shift_after_removal(VertexSet s, int removed) {
  VertexSet out;
  for (int v : s) {
    if (v != removed) out.insert(v > removed ? v - 1 : v);
  }
  return out;
}

}  // namespace detail

/// Whether some proper subgraph J' of J makes (J', S ∩ V(J')) an H-snare.
/// Snare-ness is not monotone (J' - S' can reconnect), so the check walks
/// every edge subset that still contains H.
inline bool has_proper_snare_subgraph(const Graph& j, VertexSet s, const Graph& h) {
  for (int v = 0; v < j.order(); ++v) {
    // Dropping an isolated vertex keeps every snare condition intact.
    if (j.degree(v) == 0 && is_snare(delete_vertices(j, VertexSet::singleton(v)), detail::shift_after_removal(s, v), h)) {
      return true;
    }
  }
  EdgeIndex index(j);
  const EdgeMask all = index.all();
  for (int i = 0; i < index.size(); ++i) {
    if (detail::edge_subset_is_snare(index, all & ~(EdgeMask{1} << i), s, h)) return true;
  }
  return detail::smaller_snare_below(index, all, 0, s, h);
}

/// Whether suppressing some degree-2 vertex outside S leaves an H-snare.
inline bool has_snare_suppression(const Graph& j, VertexSet s, const Graph& h) {
  for (int v = 0; v < j.order(); ++v) {
    if (s.contains(v) || j.degree(v) != 2) continue;
    if (is_snare(suppress(j, v), detail::shift_after_removal(s, v), h)) return true;
  }
  return false;
}

inline TrapStatus classify(const Graph& j, VertexSet s, const Graph& h) {
  if (h.size() == 0) throw std::invalid_argument("trap target must have at least one edge");
  if (!is_snare(j, s, h)) return TrapStatus::not_snare;
  if (has_snare_suppression(j, s, h) || has_proper_snare_subgraph(j, s, h)) return TrapStatus::snare_not_trap;
  return TrapStatus::trap;
}

inline bool is_trap(const Graph& j, VertexSet s, const Graph& h) { return classify(j, s, h) == TrapStatus::trap; }
inline bool is_trap(const SnareCandidate& c) { return is_trap(c.j, c.s, c.h); }

/// All independent sets of g (including the empty set), by increasing mask.
inline std::vector<VertexSet> independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (is_independent(g, VertexSet(m))) out.emplace_back(m);
  }
  return out;
}

/// The pair (J, S) relabelled canonically, with S marked.
inline TrapRecord canonical_record(const Graph& j, VertexSet s, std::string h_name, TrapStatus status) {
  auto colours = marking(j, s);
  auto position = canonical_labeling(j, colours);
  TrapRecord rec;
  rec.j = relabel(j, position);
  for (int v : s) rec.s.insert(position[v]);
  rec.h_name = std::move(h_name);
  rec.status = status;
  rec.key = canonical_form(j, colours);
  return rec;
}

/// Every H-trap (J, S) with J connected and |V(J)| <= max_n, up to isomorphism
/// of the marked pair. Candidates come from `source` when given, otherwise from
/// the built-in generator of connected graphs.
inline std::vector<TrapRecord> enumerate_traps(const Graph& h, const std::string& h_name, int max_n,
                                               const std::vector<Graph>* source = nullptr, int jobs = 1) {
  std::vector<Graph> candidates;
  if (source) {
    for (const Graph& g : *source) {
      if (g.order() <= max_n && is_connected(g)) candidates.push_back(g);
    }
  } else {
    if (max_n > 9) throw std::invalid_argument("built-in trap enumeration stops at 9 vertices; pass a graph6 source");
    candidates = connected_graphs_up_to(max_n);
  }

  auto per_graph = parallel_map<std::vector<TrapRecord>>(candidates.size(), jobs, [&](std::size_t i) {
    std::vector<TrapRecord> found;
    const Graph& j = candidates[i];
    if (j.size() < h.size() || !find_embedding(h, j)) return found;
    for (VertexSet s : independent_sets(j)) {
      if (is_trap(j, s, h)) found.push_back(canonical_record(j, s, h_name, TrapStatus::trap));
    }
    return found;
  });

  std::map<std::pair<int, CanonicalForm>, TrapRecord> unique;
  for (auto& batch : per_graph) {
    for (auto& rec : batch) {
      auto key = std::make_pair(rec.j.order(), rec.key);
      unique.try_emplace(std::move(key), std::move(rec));
    }
  }
  std::vector<TrapRecord> out;
  for (auto& [key, rec] : unique) out.push_back(std::move(rec));
  return out;
}

}  // namespace brittle
