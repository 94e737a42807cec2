#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "brittle/classes.hpp"
#include "brittle/constructions.hpp"
#include "brittle/errors.hpp"
#include "brittle/generate.hpp"

using namespace brittle;

TEST(Classes, BuiltInMembership) {
  auto forests = classes::forests();
  auto dfree = classes::diamond_free();
  auto outer = classes::outerplanar();
  EXPECT_TRUE(contains(forests, named::star(5)));
  EXPECT_FALSE(contains(forests, named::cycle(7)));
  EXPECT_TRUE(contains(dfree, named::cycle(6)));
  EXPECT_FALSE(contains(dfree, named::complete(4)));
  EXPECT_FALSE(contains(dfree, named::theta_fig3()));
  EXPECT_TRUE(contains(outer, named::diamond()));
  EXPECT_FALSE(contains(outer, named::complete(4)));
  EXPECT_FALSE(contains(outer, named::k23()));
  EXPECT_FALSE(contains(outer, named::w_plus(3)));
  EXPECT_TRUE(contains(outer, Graph(0)));
}

TEST(Classes, ForestShortcutMatchesGenericTest) {
  GraphClass generic{"triangle-free-minor", {named::complete(3), named::complete(4)}};
  ASSERT_FALSE(generic.is_forests());
  for (const Graph& g : connected_graphs_up_to(6)) {
    EXPECT_EQ(contains(classes::forests(), g), contains(generic, g)) << to_graph6(g);
  }
}

TEST(Classes, MembershipIsMonotone) {
  std::mt19937_64 rng(23);
  for (const GraphClass& c : {classes::forests(), classes::diamond_free(), classes::outerplanar()}) {
    for (int i = 0; i < 60; ++i) {
      int n = 4 + static_cast<int>(rng() % 5);
      Graph g = random_graph(n, 0.35, rng);
      if (!contains(c, g)) continue;
      for (const Edge& e : g.edges()) EXPECT_TRUE(contains(c, delete_edges(g, std::vector<Edge>{e})));
      for (int v = 0; v < g.order(); ++v) EXPECT_TRUE(contains(c, delete_vertices(g, VertexSet::singleton(v))));
    }
  }
}

TEST(Classes, ValidationRejectsNonTwoConnectedForbiddenGraphs) {
  GraphClass bad{"bad", {named::complete(3), named::path(3)}};
  auto violations = validate(bad);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_NE(violations[0].find("#1"), std::string::npos);
  EXPECT_THROW(make_class("bad", {named::star(3)}), ConfigurationError);
  EXPECT_NO_THROW(make_class("ok", {named::cycle(5)}));
}

TEST(Classes, LoadFromGraph6Lines) {
  std::istringstream in(">>graph6<<C~\n\nDFw\n");
  GraphClass c = load_class(in, "custom");
  ASSERT_EQ(c.forbidden.size(), 2u);
  EXPECT_FALSE(contains(c, named::complete(4)));
  EXPECT_TRUE(contains(c, named::diamond()));
  std::istringstream empty("");
  EXPECT_THROW(load_class(empty, "empty"), ParseError);
  std::istringstream path("Bg\n");  // P3 is not 2-connected
  EXPECT_THROW(load_class(path, "path"), ConfigurationError);
}

TEST(Classes, LookupByName) {
  EXPECT_EQ(class_by_name("forests").name, "forests");
  EXPECT_EQ(class_by_name("diamond-free").forbidden.size(), 1u);
  EXPECT_EQ(class_by_name("outerplanar").forbidden.size(), 2u);
  EXPECT_THROW(class_by_name("planar"), ParseError);
  EXPECT_THROW(class_by_name("file:/nonexistent/path.g6"), ParseError);
}
