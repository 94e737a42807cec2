// Lists the traps of K3, the diamond and K2,3 on up to 7 vertices.
#include <iostream>

#include "brittle/constructions.hpp"
#include "brittle/graph6.hpp"
#include "brittle/traps.hpp"

int main() {
  using namespace brittle;
  const std::vector<std::pair<std::string, Graph>> targets = {
      {"K3", named::complete(3)}, {"D", named::diamond()}, {"K2,3", named::k23()}};
  for (const auto& [name, h] : targets) {
    auto traps = enumerate_traps(h, name, 7);
    std::cout << name << ": " << traps.size() << " traps\n";
    for (const TrapRecord& rec : traps) {
      std::cout << "  " << to_graph6(rec.j) << "  n=" << rec.j.order() << "  S={";
      bool first = true;
      for (int v : rec.s) {
        std::cout << (first ? "" : ",") << v;
        first = false;
      }
      std::cout << "}\n";
    }
  }
}
