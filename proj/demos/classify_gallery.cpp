// Classifies every gallery graph and prints one line per graph: whether the
// product simulates itself, whether it splits over an amenable subgroup, and
// the first disconnecting amenable clique when one exists.

#include <iostream>

#include "selfsim/gallery.hpp"
#include "selfsim/separators.hpp"

int main() {
  for (const auto& name : selfsim::gallery_names()) {
    auto g = selfsim::gallery_graph(name);
    auto v = selfsim::classify(g);
    std::cout << name << ": self-simulable=" << selfsim::answer_to_string(v.self_simulable)
              << " splits=" << selfsim::answer_to_string(v.splits_over_amenable);
    if (v.witness) {
      std::cout << " cut={";
      bool first = true;
      for (int u : *v.witness) {
        if (!first) std::cout << ",";
        std::cout << u;
        first = false;
      }
      std::cout << "}";
    }
    if (!v.reason.empty()) std::cout << " (" << v.reason << ")";
    std::cout << "\n";
  }
  return 0;
}
