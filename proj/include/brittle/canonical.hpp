#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "brittle/graph.hpp"

namespace brittle {

/// Byte string identifying an isomorphism class of (optionally vertex-coloured) graphs.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::string_view view(reinterpret_cast<const char*>(f.bytes.data()), f.bytes.size());
    return std::hash<std::string_view>{}(view);
  }
};

namespace detail {

// Colours are cell start positions: every vertex in a cell carries the index of
// the first slot that cell occupies in the ordered partition.
inline std::vector<int> cells_from_keys(const std::vector<std::vector<int>>& keys) {
  const int n = static_cast<int>(keys.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> colour(n);
  for (int i = 0; i < n; ++i) {
    colour[order[i]] = (i > 0 && keys[order[i]] == keys[order[i - 1]]) ? colour[order[i - 1]] : i;
  }
  return colour;
}

inline int count_cells(const std::vector<int>& colour) {
  std::vector<int> sorted = colour;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

inline void refine(const Graph& g, std::vector<int>& colour) {
  const int n = g.order();
  int cells = count_cells(colour);
  while (true) {
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
      keys[v].push_back(colour[v]);
      std::vector<int> around;
      for (int w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      keys[v].insert(keys[v].end(), around.begin(), around.end());
    }
    colour = cells_from_keys(keys);
    int next = count_cells(colour);
    if (next == cells) return;
    cells = next;
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  std::vector<int> run(std::vector<int> colour) {
    search(std::move(colour));
    return best_position_;
  }

 private:
  void search(std::vector<int> colour) {
    refine(g_, colour);
    const int n = g_.order();
    // Target cell: the non-singleton cell with the smallest colour.
    int target = -1;
    std::vector<int> size(n, 0);
    for (int v = 0; v < n; ++v) ++size[colour[v]];
    for (int c = 0; c < n; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      consider_leaf(colour);
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colour[v] != target) continue;
      // Swapping twins is an automorphism that fixes the colouring, so one
      // representative per twin class suffices.
      bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) {
        return (g_.neighbors(u) - VertexSet::singleton(v)) == (g_.neighbors(v) - VertexSet::singleton(u));
      });
      if (twin) continue;
      tried.push_back(v);
      std::vector<int> child = colour;
      for (int w = 0; w < n; ++w) {
        if (w != v && colour[w] == target) child[w] = target + 1;
      }
      search(std::move(child));
    }
  }

  void consider_leaf(const std::vector<int>& position) {
    const int n = g_.order();
    std::vector<std::uint64_t> rows(n, 0);
    for (int v = 0; v < n; ++v) {
      std::uint64_t row = 0;
      for (int w : g_.neighbors(v)) row |= std::uint64_t{1} << position[w];
      rows[position[v]] = row;
    }
    if (best_position_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_position_ = position;
    }
  }

  const Graph& g_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<int> best_position_;
};

}  // namespace detail

/// position[v] is the slot vertex v occupies in the canonical ordering.
/// Vertices with smaller colour values always come first.
inline std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colours = {}) {
  const int n = g.order();
  if (n == 0) return {};
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) keys[v] = {colours.empty() ? 0 : colours[v]};
  return detail::Canonizer(g).run(detail::cells_from_keys(keys));
}

inline CanonicalForm canonical_form(const Graph& g, std::span<const int> colours = {}) {
  const int n = g.order();
  std::vector<int> position = canonical_labeling(g, colours);
  std::vector<int> vertex_at(n);
  for (int v = 0; v < n; ++v) vertex_at[position[v]] = v;

  CanonicalForm form;
  form.bytes.push_back(static_cast<std::uint8_t>(n));
  if (!colours.empty()) {
    for (int i = 0; i < n; ++i) {
      int c = colours[vertex_at[i]];
      for (int shift = 24; shift >= 0; shift -= 8) form.bytes.push_back(static_cast<std::uint8_t>(c >> shift));
    }
  }
  std::uint8_t acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = static_cast<std::uint8_t>((acc << 1) | (g.has_edge(vertex_at[i], vertex_at[j]) ? 1 : 0));
      if (++filled == 8) {
        form.bytes.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) form.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return form;
}

/// g relabelled into its canonical ordering.
inline Graph canonical_graph(const Graph& g) {
  std::vector<int> position = canonical_labeling(g);
  return relabel(g, position);
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_form(g) == canonical_form(h);
}

/// Colours the vertices of s with 1 and the rest with 0.
inline std::vector<int> marking(const Graph& g, VertexSet s) {
  std::vector<int> colour(g.order(), 0);
  for (int v : s) colour[v] = 1;
  return colour;
}

/// All automorphisms of g as permutations (perm[v] = image of v). Intended for
/// the small pattern graphs the embedding search works with.
inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> image(n, -1);
  std::vector<bool> taken(n, false);
  std::function<void(int)> extend = [&](int v) {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (taken[w] || g.degree(w) != g.degree(v)) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        consistent = g.has_edge(u, v) == g.has_edge(image[u], w);
      }
      if (!consistent) continue;
      image[v] = w;
      taken[w] = true;
      extend(v + 1);
      taken[w] = false;
    }
    image[v] = -1;
  };
  extend(0);
  return out;
}

}  // namespace brittle
