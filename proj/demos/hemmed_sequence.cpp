// Builds the hemmed sequence G_1, G_2, ... and shows that one edge deletion
// reaches outerplanarity while eta keeps growing.
#include <iostream>

#include "brittle/constructions.hpp"
#include "brittle/graph6.hpp"
#include "brittle/parameters.hpp"

int main() {
  using namespace brittle;
  const GraphClass o = classes::outerplanar();
  for (int l = 1; l <= 3; ++l) {
    PropExample ex = prop_example_family(l);
    const Graph& g = ex.hemmed.graph;
    std::cout << "G_" << l << ": " << g.order() << " vertices, " << g.size() << " edges, graph6 " << to_graph6(g)
              << "\n";
    std::cout << "  e   = " << edit_distance(o, g).value << "\n";
    std::cout << "  eta = " << edge_brittleness(o, g).value << "\n";
  }
}
