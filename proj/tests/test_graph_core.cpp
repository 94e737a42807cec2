#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "brittle/canonical.hpp"
#include "brittle/constructions.hpp"
#include "brittle/errors.hpp"
#include "brittle/generate.hpp"
#include "brittle/graph.hpp"
#include "brittle/graph6.hpp"

using namespace brittle;

namespace {

VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet s;
  for (int v : vs) s.insert(v);
  return s;
}

Graph random_permuted(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet s = set_of({1, 4, 63});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(63));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(s.front(), 1);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{1, 4, 63}));
  EXPECT_EQ((s - set_of({4})).size(), 2);
  EXPECT_TRUE(set_of({1}).is_subset_of(s));
  EXPECT_TRUE(s.intersects(set_of({4, 5})));
  EXPECT_EQ(VertexSet::range(64).size(), 64);
  EXPECT_EQ(VertexSet::range(0).size(), 0);
}

TEST(Graph, EdgesAreLexicographic) {
  Graph g(4, {{2, 3}, {0, 2}, {1, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}}));
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(Edge(5, 2).u, 2);
}

TEST(Graph, RejectsLoopsAndBadVertices) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(Graph(65), std::out_of_range);
}

TEST(Graph, DeletionsRelabel) {
  Graph p = named::path(4);  // 0-1-2-3
  Graph g = delete_vertices(p, set_of({1}));
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}}));
  Graph h = delete_edges(p, std::vector<Edge>{{1, 2}});
  EXPECT_EQ(h.size(), 2);
  EXPECT_THROW(delete_edges(p, std::vector<Edge>{{0, 3}}), std::invalid_argument);
}

TEST(Graph, SuppressionKeepsGraphSimple) {
  Graph c4 = named::cycle(4);
  Graph c3 = suppress(c4, 0);
  EXPECT_EQ(c3.order(), 3);
  EXPECT_EQ(c3.size(), 3);
  // Neighbours already adjacent: v and its two edges disappear.
  Graph tri = named::complete(3);
  Graph k2 = suppress(tri, 2);
  EXPECT_EQ(k2.order(), 2);
  EXPECT_EQ(k2.size(), 1);
  EXPECT_THROW(suppress(named::star(3), 0), std::invalid_argument);
  // Labels above the suppressed vertex shift down by one.
  Graph p = named::path(4);
  Graph q = suppress(p, 1);
  EXPECT_EQ(q.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, ContractionMergesNeighbourhoods) {
  Graph g = contract_edge(named::theta_fig3(), named::theta_fig3_edge());
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(g.degree(0), 4);
  EXPECT_THROW(contract_edge(named::path(3), Edge(0, 2)), std::invalid_argument);
}

TEST(Graph, ConnectivityAndBlocks) {
  EXPECT_TRUE(is_connected(named::path(5)));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_2_connected(named::cycle(5)));
  EXPECT_FALSE(is_2_connected(named::path(3)));
  // Two triangles sharing vertex 2.
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto b = blocks(bowtie);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], set_of({0, 1, 2}));
  EXPECT_EQ(b[1], set_of({2, 3, 4}));
  EXPECT_TRUE(is_acyclic(named::star(4)));
  EXPECT_FALSE(is_acyclic(named::cycle(3)));
  EXPECT_TRUE(is_independent(named::cycle(4), set_of({0, 2})));
  EXPECT_FALSE(is_independent(named::cycle(4), set_of({0, 1})));
}

TEST(Graph6, KnownCodes) {
  EXPECT_EQ(to_graph6(named::complete(3)), "Bw");
  EXPECT_EQ(to_graph6(named::complete(4)), "C~");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  // Petersen graph.
  Graph pet = from_graph6("IheA@GUAo");
  EXPECT_EQ(pet.order(), 10);
  EXPECT_EQ(pet.size(), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(pet.degree(v), 3);
  EXPECT_EQ(from_graph6(">>graph6<<Bw"), named::complete(3));
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    int n = static_cast<int>(rng() % 64) + 1;
    Graph g = random_graph(n, 0.3, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("B"), ParseError);     // missing body
  EXPECT_THROW(from_graph6("Bww"), ParseError);   // trailing bytes
  EXPECT_THROW(from_graph6("B\x01"), ParseError);  // byte below 63
  EXPECT_THROW(from_graph6("Bx"), ParseError);    // nonzero padding
}

TEST(EdgeList, RoundTripAndErrors) {
  Graph g = named::fig4();
  EXPECT_EQ(from_edge_list(to_edge_list(g)), g);
  EXPECT_THROW(from_edge_list(std::string_view("3 2\n0 1\n")), ParseError);
  EXPECT_THROW(from_edge_list(std::string_view("3 1\n0 5\n")), ParseError);
  EXPECT_THROW(from_edge_list(std::string_view("x")), ParseError);
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, 0.45, rng);
    Graph h = random_permuted(g, rng);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_EQ(canonical_graph(g), canonical_graph(h));
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  EXPECT_FALSE(are_isomorphic(named::cycle(6), disjoint_union(named::cycle(3), named::cycle(3))));
  EXPECT_FALSE(are_isomorphic(named::k23(), named::diamond()));
  EXPECT_TRUE(are_isomorphic(named::complete_bipartite(2, 3), named::complete_bipartite(3, 2)));
}

TEST(Canonical, ColoursAreRespected) {
  Graph p = named::path(3);
  // Marking an end vertex differs from marking the middle one.
  EXPECT_NE(canonical_form(p, marking(p, set_of({0}))), canonical_form(p, marking(p, set_of({1}))));
  EXPECT_EQ(canonical_form(p, marking(p, set_of({0}))), canonical_form(p, marking(p, set_of({2}))));
}

TEST(Canonical, AutomorphismGroupSizes) {
  EXPECT_EQ(automorphisms(named::complete(4)).size(), 24u);
  EXPECT_EQ(automorphisms(named::cycle(5)).size(), 10u);
  EXPECT_EQ(automorphisms(named::k23()).size(), 12u);
  EXPECT_EQ(automorphisms(from_graph6("IheA@GUAo")).size(), 120u);
}

TEST(Generate, ConnectedGraphCounts) {
  const std::vector<std::size_t> expected = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto graphs = connected_graphs(n);
    EXPECT_EQ(graphs.size(), expected[n - 1]) << "n=" << n;
    for (const Graph& g : graphs) EXPECT_TRUE(is_connected(g));
  }
  EXPECT_EQ(connected_graphs_up_to(6).size(), 143u);
}

TEST(Generate, RandomGraphIsSeeded) {
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(random_graph(9, 0.4, a), random_graph(9, 0.4, b));
}
