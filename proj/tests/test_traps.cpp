#include <gtest/gtest.h>

#include "brittle/canonical.hpp"
#include "brittle/constructions.hpp"
#include "brittle/traps.hpp"
#include "brittle/verify.hpp"

using namespace brittle;
using brittle::detail::set_of;

TEST(Traps, SnareConditions) {
  Graph h = named::complete(3);
  EXPECT_TRUE(is_snare(named::complete(3), {}, h));
  EXPECT_TRUE(is_snare(named::complete(3), set_of({0}), h));
  EXPECT_FALSE(is_snare(named::complete(3), set_of({0, 1}), h));  // S not independent
  EXPECT_FALSE(is_snare(named::cycle(4), set_of({0, 2}), h));     // no triangle
  // J - S disconnected: bowtie with the cut vertex in S.
  Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_FALSE(is_snare(bowtie, set_of({2}), h));
  EXPECT_TRUE(is_snare(bowtie, set_of({0}), h));
}

TEST(Traps, ClassifySmallCases) {
  Graph k3 = named::complete(3);
  EXPECT_EQ(classify(k3, {}, k3), TrapStatus::trap);
  EXPECT_EQ(classify(k3, set_of({0}), k3), TrapStatus::trap);
  // A longer cycle suppresses down to a triangle.
  EXPECT_EQ(classify(named::cycle(4), {}, k3), TrapStatus::snare_not_trap);
  // A pendant edge can be removed.
  Graph tadpole(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_EQ(classify(tadpole, {}, k3), TrapStatus::snare_not_trap);
  EXPECT_EQ(classify(named::path(3), {}, k3), TrapStatus::not_snare);
  EXPECT_THROW(classify(k3, {}, Graph(2)), std::invalid_argument);
}

TEST(Traps, MarkedVerticesBlockReductions) {
  // Both degree-2 vertices of the diamond in S: nothing can be suppressed or deleted.
  Graph d = named::diamond();
  EXPECT_EQ(classify(d, set_of({2, 3}), d), TrapStatus::trap);
  // Subdividing an edge at a vertex of S keeps the pair a trap for K3.
  Graph c4 = named::cycle(4);
  EXPECT_EQ(classify(c4, set_of({0, 2}), named::complete(3)), TrapStatus::not_snare);
}

TEST(Traps, AddingAnEdgeBreaksATrap) {
  Graph h = named::k23();
  for (const TrapRecord& rec : enumerate_traps(h, "K2,3", 6)) {
    ASSERT_EQ(classify(rec.j, rec.s, h), TrapStatus::trap);
    for (int u = 0; u < rec.j.order(); ++u) {
      for (int v = u + 1; v < rec.j.order(); ++v) {
        if (rec.j.has_edge(u, v) || (rec.s.contains(u) && rec.s.contains(v))) continue;
        Graph more = rec.j;
        more.add_edge(u, v);
        EXPECT_NE(classify(more, rec.s, h), TrapStatus::trap) << to_graph6(rec.j) << " + " << u << v;
      }
    }
  }
}

TEST(Traps, EnumerationCountsAndOrderBound) {
  EXPECT_EQ(enumerate_traps(named::complete(3), "K3", 6).size(), 2u);
  EXPECT_EQ(enumerate_traps(named::diamond(), "D", 6).size(), 4u);
  for (const TrapRecord& rec : enumerate_traps(named::diamond(), "D", 6)) {
    EXPECT_LE(rec.j.order(), trap_order_bound(named::diamond(), rec.s.size()));
    EXPECT_TRUE(is_independent(rec.j, rec.s));
    EXPECT_EQ(rec.h_name, "D");
  }
  EXPECT_THROW(enumerate_traps(named::complete(3), "K3", 10), std::invalid_argument);
}

TEST(Traps, EnumerationIsLabelIndependent) {
  // Feeding permuted copies of the candidates yields the same records.
  std::vector<Graph> source;
  for (const Graph& g : connected_graphs_up_to(5)) {
    std::vector<int> perm(g.order());
    for (int v = 0; v < g.order(); ++v) perm[v] = g.order() - 1 - v;
    source.push_back(relabel(g, perm));
  }
  auto a = enumerate_traps(named::diamond(), "D", 5);
  auto b = enumerate_traps(named::diamond(), "D", 5, &source, 2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].j, b[i].j);
    EXPECT_EQ(a[i].s, b[i].s);
  }
}

TEST(Traps, ShiftAfterRemoval) {
  EXPECT_EQ(brittle::detail::shift_after_removal(set_of({0, 3, 5}), 3), set_of({0, 4}));
  EXPECT_EQ(brittle::detail::shift_after_removal(set_of({0, 2}), 1), set_of({0, 1}));
}
