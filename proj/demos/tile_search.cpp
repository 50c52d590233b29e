// Compiles the sample adding machine to Wang tiles, renders its computation
// on the input 0110, prints the north faces of the first rows, and then uses
// the blind backtracking search to confirm seeded patches of growing height
// exist for the never-halting machine.

#include <iostream>

#include "selfsim/tiles.hpp"
#include "selfsim/turing.hpp"

int main() {
  auto adder = selfsim::adding_machine_tm();
  auto ts = selfsim::compile_tm_to_tiles(adder);
  std::cout << "adder tiles: " << ts.tiles.size() << "\n";

  const int w = 5, h = 6;
  auto grid = selfsim::render_computation(ts, adder, {"0", "1", "1", "0"}, w, h);
  for (int y = 0; y < h; ++y) {
    std::cout << "row " << y << ":";
    for (int x = 0; x < w; ++x) std::cout << " " << ts.tile(grid.at({x, y})).n;
    std::cout << "\n";
  }

  auto nh = selfsim::never_halt_tm({"0", "1", "_"}, "_");
  auto nh_ts = selfsim::compile_tm_to_tiles(nh);
  for (int side = 2; side <= 6; ++side) {
    auto found = selfsim::search_seeded_patch(nh_ts, side, side);
    std::cout << side << "x" << side << " seeded patch: " << (found ? "found" : "none") << "\n";
    if (!found) return 1;
  }
  return 0;
}
