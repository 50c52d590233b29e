// Turing machines and their Wang-tile compilations: windowed simulation
// traces frozen by hand, tileset structure, canonical rendering against the
// simulator, adjacency checking, bottom-row extraction, exhaustive seeded
// search, and JSON round trips (including the shipped fixture files).

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "selfsim/tiles.hpp"
#include "selfsim/turing.hpp"

using namespace selfsim;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// The window tape with the head cell replaced by a state/symbol pair; this is
// exactly what the north interface of a rendered row spells.
std::vector<std::string> config_faces(const TmConfig& c) {
  std::vector<std::string> out;
  for (size_t i = 0; i < c.tape.size(); ++i) {
    if (static_cast<int>(i) + 1 == c.head)
      out.push_back("p:" + c.state + ":" + c.tape[i]);
    else
      out.push_back("s:" + c.tape[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("adding machine trace on 0110, hand-checked") {
  auto m = adding_machine_tm();
  auto run = simulate(m, {"0", "1", "1", "0"}, 5, 8);
  REQUIRE_FALSE(run.halted);
  REQUIRE_FALSE(run.exited_right);
  REQUIRE(run.survived_steps == 8);
  REQUIRE(run.configs.size() == 9);

  // Step 1 marks the first cell; step 3 completes the first increment
  // (the value 6, bits 0110 least significant first, becomes 7 = 1110).
  REQUIRE(run.configs[1].tape == std::vector<std::string>{"0s", "1", "1", "0", "_"});
  REQUIRE(run.configs[1].head == 2);
  REQUIRE(run.configs[1].state == "ret");
  REQUIRE(run.configs[3].tape == std::vector<std::string>{"1s", "1", "1", "0", "_"});
  REQUIRE(run.configs[3].head == 2);

  // Steps 5-8 carry through 7 + 1 = 8 = 0001 least significant first.
  REQUIRE(run.configs[8].tape == std::vector<std::string>{"0s", "0", "0", "1", "_"});
  REQUIRE(run.configs[8].head == 3);
  REQUIRE(run.configs[8].state == "ret");
}

TEST_CASE("window edge behavior of the shipped machines") {
  SECTION("never-halt leaves the window to the right") {
    auto run = simulate(sample_tm_by_name("never-halt"), {"0", "1"}, 4, 100);
    REQUIRE(run.exited_right);
    REQUIRE_FALSE(run.halted);
    REQUIRE(run.survived_steps == 3);
    REQUIRE(run.configs.size() == 4);
  }
  SECTION("halt-1 falls off the left edge at step one") {
    auto run = simulate(sample_tm_by_name("halt-1"), {"0"}, 3, 100);
    REQUIRE(run.halted);
    REQUIRE_FALSE(run.exited_right);
    REQUIRE(run.survived_steps == 0);
    REQUIRE(run.configs.size() == 1);
  }
  SECTION("parity halts on an even count and walks off on an odd count") {
    auto even = simulate(sample_tm_by_name("parity"), {"1", "1"}, 4, 100);
    REQUIRE(even.halted);
    REQUIRE(even.survived_steps == 2);
    auto odd = simulate(sample_tm_by_name("parity"), {"1"}, 3, 100);
    REQUIRE(odd.exited_right);
    REQUIRE(odd.survived_steps == 2);
  }
  SECTION("window narrower than the input is rejected") {
    REQUIRE_THROWS(simulate(sample_tm_by_name("never-halt"), {"0", "1", "0"}, 2, 10));
  }
}

TEST_CASE("machine validation rejects malformed tables") {
  auto m = adding_machine_tm();
  SECTION("missing transition") {
    m.delta.erase({"ret", "0"});
    REQUIRE_THROWS(m.validate());
  }
  SECTION("transition from a halting state") {
    m.halt.insert("carry");
    REQUIRE_THROWS(m.validate());
  }
  SECTION("blank outside the alphabet") {
    m.blank = "bogus";
    REQUIRE_THROWS(m.validate());
  }
}

TEST_CASE("compiled tileset structure") {
  auto m = adding_machine_tm();
  auto ts = compile_tm_to_tiles(m);

  // 1 blank + 1 seed + 4 input + 2 wall + 5 copy + 15 action
  // + 3 states x 5 symbols x 2 arrival sides = 58 tiles.
  REQUIRE(ts.tiles.size() == 58);
  REQUIRE(ts.blank == 0);
  REQUIRE(ts.seed == 1);
  REQUIRE(ts.tile(ts.blank).n == "x");
  REQUIRE(ts.tile(ts.seed).e == "row0");
  REQUIRE(ts.omega.size() == 4);  // every symbol except the blank
  REQUIRE(ts.omega.count("0s") == 1);
  REQUIRE(ts.omega.count("_") == 0);
  REQUIRE(ts.omega_symbol_of(ts.omega.at("1")) == std::optional<std::string>{"1"});
  REQUIRE(ts.omega_symbol_of(ts.seed) == std::nullopt);

  // Halting states have no receive tiles: the never-halt set keeps all of
  // them, halt-1 drops the pair for its halting state.
  REQUIRE(compile_tm_to_tiles(sample_tm_by_name("never-halt")).tiles.size() == 18);
  REQUIRE(compile_tm_to_tiles(sample_tm_by_name("halt-1")).tiles.size() == 18);
  REQUIRE(compile_tm_to_tiles(sample_tm_by_name("parity")).tiles.size() == 27);
}

TEST_CASE("rendered computation matches the simulator row by row") {
  auto m = adding_machine_tm();
  auto ts = compile_tm_to_tiles(m);
  const std::vector<std::string> input = {"0", "1", "1", "0"};
  const int w = 5, h = 10;

  auto grid = render_computation(ts, m, input, w, h);
  REQUIRE(grid.size() == static_cast<size_t>(w * h));
  REQUIRE(check_tiling(ts, grid).ok());
  REQUIRE(eta(ts, grid) == input);

  // The grid's tape window is cells 1..w-1, so simulate with width w-1.
  auto run = simulate(m, input, w - 1, h);
  REQUIRE(run.survived_steps >= h - 2);
  for (int y = 1; y < h; ++y) {
    auto faces = config_faces(run.configs[static_cast<size_t>(y - 1)]);
    for (int x = 1; x < w; ++x)
      REQUIRE(ts.tile(grid.at({x, y})).n == faces[static_cast<size_t>(x - 1)]);
  }
}

TEST_CASE("rendering respects halting and exit behavior") {
  SECTION("a machine that falls off cannot be rendered tall") {
    auto m = sample_tm_by_name("halt-1");
    auto ts = compile_tm_to_tiles(m);
    REQUIRE_THROWS(render_computation(ts, m, {"0", "1", "0"}, 4, 3));
  }
  SECTION("a run that exits right pads with copy rows") {
    auto m = sample_tm_by_name("parity");
    auto ts = compile_tm_to_tiles(m);
    auto grid = render_computation(ts, m, {"1", "1"}, 3, 6);
    REQUIRE(check_tiling(ts, grid).ok());
    REQUIRE(ts.tile(grid.at({1, 5})).n == "s:1");
  }
  SECTION("input must fill the window") {
    auto m = sample_tm_by_name("never-halt");
    auto ts = compile_tm_to_tiles(m);
    REQUIRE_THROWS(render_computation(ts, m, {"0"}, 4, 3));
  }
}

TEST_CASE("adjacency checker flags mutations") {
  auto m = sample_tm_by_name("never-halt");
  auto ts = compile_tm_to_tiles(m);
  auto grid = render_computation(ts, m, {"0", "1"}, 3, 5);
  REQUIRE(check_tiling(ts, grid).ok());

  SECTION("an interior rewrite breaks adjacency") {
    grid[{1, 2}] = ts.blank;
    auto rep = check_tiling(ts, grid);
    REQUIRE_FALSE(rep.ok());
    bool adjacency = false;
    for (const auto& v : rep.violations)
      adjacency = adjacency || v.rule == "adjacency-h" || v.rule == "adjacency-v";
    REQUIRE(adjacency);
  }
  SECTION("replacing the origin trips the seed rule") {
    grid[{0, 0}] = ts.blank;
    auto rep = check_tiling(ts, grid);
    bool seed_rule = false;
    for (const auto& v : rep.violations) seed_rule = seed_rule || v.rule == "seed-at-origin";
    REQUIRE(seed_rule);
  }
  SECTION("eta rejects a corrupted bottom row") {
    grid[{2, 0}] = ts.blank;
    REQUIRE_THROWS(eta(ts, grid));
  }
}

TEST_CASE("exhaustive seeded search tracks survivable height") {
  auto nh = compile_tm_to_tiles(sample_tm_by_name("never-halt"));
  auto h1 = compile_tm_to_tiles(sample_tm_by_name("halt-1"));

  SECTION("the immortal machine fills any rectangle") {
    auto found = search_seeded_patch(nh, 4, 4);
    REQUIRE(found.has_value());
    REQUIRE(check_tiling(nh, *found).ok());
    REQUIRE(found->at({0, 0}) == nh.seed);
  }
  SECTION("the mortal machine caps at height two") {
    for (int w = 2; w <= 6; ++w) {
      REQUIRE(search_seeded_patch(h1, w, 2).has_value());
      REQUIRE_FALSE(search_seeded_patch(h1, w, 3).has_value());
    }
  }
  SECTION("pinned bottom rows select the input") {
    std::vector<int> pins = {nh.omega.at("0"), nh.omega.at("1")};
    auto found = search_seeded_patch(nh, 4, 3, pins);
    REQUIRE(found.has_value());
    auto row = eta(nh, *found);
    REQUIRE(row.size() == 3);
    REQUIRE(row[0] == "0");
    REQUIRE(row[1] == "1");
  }
  SECTION("too many pins are rejected") {
    std::vector<int> pins = {nh.omega.at("0"), nh.omega.at("0"), nh.omega.at("0")};
    REQUIRE_THROWS(search_seeded_patch(nh, 3, 2, pins));
  }
}

TEST_CASE("tileset and grid JSON round trips") {
  auto ts = compile_tm_to_tiles(adding_machine_tm());
  auto j = tileset_to_json(ts);
  auto back = tileset_from_json(j);
  REQUIRE(back.tiles.size() == ts.tiles.size());
  REQUIRE(back.seed == ts.seed);
  REQUIRE(back.blank == ts.blank);
  REQUIRE(back.omega == ts.omega);
  for (size_t i = 0; i < ts.tiles.size(); ++i) {
    REQUIRE(back.tiles[i].n == ts.tiles[i].n);
    REQUIRE(back.tiles[i].e == ts.tiles[i].e);
    REQUIRE(back.tiles[i].s == ts.tiles[i].s);
    REQUIRE(back.tiles[i].w == ts.tiles[i].w);
  }

  // Without an explicit blank entry the all-x tile is rediscovered.
  j.erase("blank");
  REQUIRE(tileset_from_json(j).blank == ts.blank);

  auto m = sample_tm_by_name("never-halt");
  auto nh = compile_tm_to_tiles(m);
  auto grid = render_computation(nh, m, {"0", "1"}, 3, 4);
  REQUIRE(grid_from_json(grid_to_json(grid)) == grid);
}

TEST_CASE("machine JSON round trips and fixture files") {
  for (const std::string name : {"never-halt", "halt-1", "adder", "parity"}) {
    auto m = sample_tm_by_name(name);
    auto back = tm_from_json(tm_to_json(m));
    REQUIRE(back.states == m.states);
    REQUIRE(back.alphabet == m.alphabet);
    REQUIRE(back.blank == m.blank);
    REQUIRE(back.start == m.start);
    REQUIRE(back.halt == m.halt);
    REQUIRE(back.delta == m.delta);
  }

  const std::map<std::string, std::string> fixtures = {
      {"never-halt", "never_halt"}, {"halt-1", "halt1"}, {"adder", "adder"}, {"parity", "parity"}};
  for (const auto& [name, file] : fixtures) {
    auto parsed = tm_from_json(
        nlohmann::ordered_json::parse(slurp(std::string(FIXTURES_DIR) + "/tm/" + file + ".json")));
    auto built = sample_tm_by_name(name);
    REQUIRE(parsed.states == built.states);
    REQUIRE(parsed.alphabet == built.alphabet);
    REQUIRE(parsed.blank == built.blank);
    REQUIRE(parsed.start == built.start);
    REQUIRE(parsed.halt == built.halt);
    REQUIRE(parsed.delta == built.delta);
  }

  SECTION("duplicate delta rows are rejected") {
    auto j = tm_to_json(sample_tm_by_name("never-halt"));
    j["delta"].push_back(j["delta"][0]);
    REQUIRE_THROWS(tm_from_json(j));
  }
}
