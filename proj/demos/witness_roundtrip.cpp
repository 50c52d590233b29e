// Builds a bush witness on the square of integer groups, passes it through
// JSON and back, re-checks the parsed patch against the full rule set, and
// prints a short summary of both the serialization and the verification.

#include <iostream>

#include "selfsim/gallery.hpp"
#include "selfsim/patch.hpp"
#include "selfsim/rules.hpp"
#include "selfsim/witness.hpp"

int main() {
  auto g = selfsim::gallery_graph("square");
  auto patch = selfsim::bush_witness(g, 2, selfsim::odometer_action(), {0, 1});

  auto j = selfsim::patch_to_json(patch);
  auto back = selfsim::patch_from_json<selfsim::BushSymbol>(j);
  std::cout << "cells: " << patch.cells.size() << ", json bytes: " << j.dump().size()
            << ", round-trip equal: " << (back.cells == patch.cells ? "yes" : "no") << "\n";

  auto rules = selfsim::make_bush_rules<selfsim::BushSymbol>(g);
  auto rep = selfsim::check_patch(rules, back);
  std::cout << "rules: " << rules.size() << ", windows checked: " << rep.checked_count
            << ", skipped at the boundary: " << rep.skipped_count
            << ", violations: " << rep.violations.size() << "\n";
  return rep.violations.empty() ? 0 : 1;
}
