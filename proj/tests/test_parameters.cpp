#include <gtest/gtest.h>

#include <random>

#include "brittle/constructions.hpp"
#include "brittle/errors.hpp"
#include "brittle/generate.hpp"
#include "brittle/oracles.hpp"
#include "brittle/parameters.hpp"

using namespace brittle;

namespace {

std::vector<GraphClass> all_classes() {
  return {classes::forests(), classes::diamond_free(), classes::outerplanar()};
}

// Same class as forests, but without the dedicated fast paths.
GraphClass generic_forests() { return make_class("generic-forests", {named::complete(3), named::complete(4)}); }

}  // namespace

TEST(Parameters, NamesRoundTrip) {
  for (Parameter p : {Parameter::edit_distance, Parameter::edge_brittleness, Parameter::vertex_brittleness,
                      Parameter::capacity}) {
    EXPECT_EQ(parameter_from_name(parameter_name(p)), p);
  }
  EXPECT_THROW(parameter_from_name("tau"), std::invalid_argument);
}

TEST(Parameters, KnownValues) {
  const GraphClass f = classes::forests();
  EXPECT_EQ(edit_distance(f, named::complete(4)).value, 3);
  EXPECT_EQ(capacity(f, named::complete(4)).value, 1);
  EXPECT_EQ(vertex_brittleness(f, named::complete(4)).value, 3);
  EXPECT_EQ(edge_brittleness(f, named::complete(4)).value, 4);
  EXPECT_EQ(edit_distance(f, named::cycle(6)).value, 1);
  EXPECT_EQ(capacity(f, named::path(5)).value, 0);
  EXPECT_EQ(vertex_brittleness(f, named::theta_fig3()).value, 2);
  EXPECT_EQ(capacity(f, named::theta_fig3()).value, 1);
  const GraphClass o = classes::outerplanar();
  EXPECT_EQ(edge_brittleness(classes::diamond_free(), named::complete(4)).value, 3);
  EXPECT_EQ(edit_distance(o, named::w_plus(3)).value, 1);
}

TEST(Parameters, CertificatesReplay) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 25; ++i) {
    Graph g = random_graph(7, 0.45, rng);
    for (const GraphClass& c : all_classes()) {
      AllParameters all = all_parameters(c, g);
      for (const ParameterReport* r : {&all.e, &all.eta, &all.kappa, &all.nu}) {
        EXPECT_TRUE(certificate_replays(c, g, *r)) << c.name << " " << parameter_name(r->parameter) << " "
                                                   << to_graph6(g);
      }
      EXPECT_TRUE(all.basic_inequalities_hold()) << c.name << " " << to_graph6(g);
    }
  }
}

TEST(Parameters, ReplayRejectsTamperedCertificates) {
  const GraphClass f = classes::forests();
  Graph g = named::complete(4);
  ParameterReport e = edit_distance(f, g);
  ParameterReport wrong = e;
  std::get<EditCertificate>(wrong.certificate).deleted.pop_back();
  EXPECT_FALSE(certificate_replays(f, g, wrong));
  wrong = e;
  wrong.value += 1;
  EXPECT_FALSE(certificate_replays(f, g, wrong));

  ParameterReport nu = capacity(f, g);
  ParameterReport doubled = nu;
  auto& ws = std::get<PackingCertificate>(doubled.certificate).witnesses;
  ws.push_back(ws.front());
  doubled.value = 2;
  EXPECT_FALSE(certificate_replays(f, g, doubled));
}

TEST(Parameters, AgreeWithOraclesOnSmallGraphs) {
  Limits limits;
  limits.oracle_partition_edges = 10;  // K5
  for (const Graph& g : connected_graphs_up_to(5)) {
    for (const GraphClass& c : all_classes()) {
      oracle::MembershipTable table(c, g, limits.oracle_edges);
      EXPECT_EQ(edit_distance(c, g).value, oracle::edit_distance(table)) << c.name << " " << to_graph6(g);
      EXPECT_EQ(edge_brittleness(c, g).value, oracle::edge_brittleness(c, g, limits)) << c.name << " " << to_graph6(g);
      EXPECT_EQ(vertex_brittleness(c, g).value, oracle::vertex_brittleness(table, limits))
          << c.name << " " << to_graph6(g);
      EXPECT_EQ(capacity(c, g).value, oracle::capacity(table)) << c.name << " " << to_graph6(g);
    }
  }
}

TEST(Parameters, MinimalWitnessesMatchOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(7, 0.45, rng);
    for (const GraphClass& c : all_classes()) {
      EdgeIndex index(g);
      oracle::MembershipTable table(c, g, 16);
      auto expected = oracle::minimal_non_members(table);
      std::sort(expected.begin(), expected.end(), detail::tuple_less);
      EXPECT_EQ(minimal_witnesses(c, index), expected) << c.name << " " << to_graph6(g);
    }
  }
}

TEST(Parameters, ForestsFastPathMatchesGenericSearch) {
  std::mt19937_64 rng(37);
  const GraphClass generic = generic_forests();
  for (int i = 0; i < 40; ++i) {
    Graph g = random_graph(8, 0.4, rng);
    ParameterReport fast = edit_distance(classes::forests(), g);
    ParameterReport slow = edit_distance(generic, g);
    EXPECT_EQ(fast.value, slow.value) << to_graph6(g);
    EXPECT_EQ(std::get<EditCertificate>(fast.certificate).deleted,
              std::get<EditCertificate>(slow.certificate).deleted)
        << to_graph6(g);
  }
}

TEST(Parameters, EditCertificateIsLexicographicallyLeast) {
  // K4 edges in order 01 02 03 12 13 23. Deleting the star at 0 leaves a
  // triangle, so the least deletion set is {01, 02, 12}.
  auto cert = std::get<EditCertificate>(edit_distance(generic_forests(), named::complete(4)).certificate);
  EXPECT_EQ(cert.deleted, (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(Parameters, PartitionBelowDecidesBounds) {
  const GraphClass o = classes::outerplanar();
  Graph g2 = prop_example_family(2).hemmed.graph;
  int eta = edge_brittleness(o, g2).value;
  auto at = partition_below(o, g2, eta + 1);
  ASSERT_TRUE(at.partition);
  EXPECT_EQ(at.cross_edges, eta);
  auto below = partition_below(o, g2, eta);
  EXPECT_FALSE(below.partition);
  EXPECT_FALSE(below.budget_exhausted);
  auto starved = partition_below(o, g2, eta, 3);
  EXPECT_FALSE(starved.partition);
  EXPECT_TRUE(starved.budget_exhausted);
  EXPECT_FALSE(partition_below(o, g2, 0).partition);
}

TEST(Parameters, SizeGuards) {
  Limits tight;
  tight.max_vertices = 5;
  EXPECT_THROW(edge_brittleness(classes::forests(), named::cycle(6), tight), SizeGuardError);
  EXPECT_THROW(vertex_brittleness(classes::forests(), named::cycle(6), tight), SizeGuardError);
  EXPECT_NO_THROW(edit_distance(classes::forests(), named::cycle(6)));
  EXPECT_THROW(oracle::edit_distance(classes::forests(), named::complete(7)), SizeGuardError);
}

TEST(Parameters, FanLowerBoundsOnSmallCase) {
  // k copies of a triangle sharing a vertex: each copy needs its own deletion.
  const GraphClass f = classes::forests();
  for (int k = 1; k <= 4; ++k) {
    Graph g = fan(named::complete(3), VertexSet::singleton(0), k);
    EXPECT_EQ(edit_distance(f, g).value, k);
    EXPECT_EQ(capacity(f, g).value, k);
    EXPECT_EQ(vertex_brittleness(f, g).value, k + 1);  // the hub plus one vertex per triangle
  }
}
