#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "brittle/errors.hpp"
#include "brittle/graph.hpp"

namespace brittle {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Standard graph6 encoding (no header).
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Parses one graph6 string; the ">>graph6<<" header and trailing whitespace are accepted.
inline Graph from_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError("graph6 byte out of range in '" + std::string(text) + "'");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("unsupported graph6 order prefix");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n > Graph::kMaxVertices) throw ParseError("graph6 order " + std::to_string(n) + " exceeds 64");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                     std::to_string(expected));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int byte = text.back() - 63;
    if ((byte & ((1 << (6 - bits % 6)) - 1)) != 0) throw ParseError("graph6 padding bits are not zero");
  }
  return g;
}

/// One graph6 code per non-empty line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with(kGraph6Header)) line.erase(0, kGraph6Header.size());
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

/// "n m" header followed by m lines "u v".
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline Graph from_edge_list(std::istream& in) {
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
  if (n < 0 || n > Graph::kMaxVertices) throw ParseError("edge list: vertex count out of range");
  if (m < 0) throw ParseError("edge list: negative edge count");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v));
    }
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v))) {
      throw ParseError("edge list: repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

inline Graph from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_edge_list(in);
}

}  // namespace brittle
