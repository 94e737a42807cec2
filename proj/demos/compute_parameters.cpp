// Prints e, eta, kappa and nu of a few named graphs for each built-in class.
#include <iomanip>
#include <iostream>

#include "brittle/constructions.hpp"
#include "brittle/parameters.hpp"
#include "brittle/report.hpp"
#include "brittle/verify.hpp"

int main() {
  using namespace brittle;
  const std::vector<std::pair<std::string, Graph>> graphs = {
      {"K4", named::complete(4)},   {"K2,3", named::k23()},      {"fig3", named::theta_fig3()},
      {"fig4", named::fig4()},      {"W+3", named::w_plus(3)},   {"C6", named::cycle(6)}};
  std::cout << std::left << std::setw(14) << "class" << std::setw(7) << "graph" << std::right << std::setw(4) << "e"
            << std::setw(5) << "eta" << std::setw(7) << "kappa" << std::setw(4) << "nu" << "\n";
  for (const GraphClass& c : builtin_classes()) {
    for (const auto& [name, g] : graphs) {
      AllParameters p = all_parameters(c, g);
      std::cout << std::left << std::setw(14) << c.name << std::setw(7) << name << std::right << std::setw(4)
                << p.e.value << std::setw(5) << p.eta.value << std::setw(7) << p.kappa.value << std::setw(4)
                << p.nu.value << "\n";
    }
  }
  // One full JSON record, certificate included.
  Graph g = named::theta_fig3();
  std::cout << to_json(vertex_brittleness(classes::forests(), g), classes::forests(), g, false).dump(2) << "\n";
}
