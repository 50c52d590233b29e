#pragma once
// Wang tilesets: compilation of a Turing machine into a seeded simulation
// tileset, adjacency checking of finite grids, bottom-row extraction (eta),
// canonical rendering of a machine run, and exhaustive backtracking search
// for seeded rectangular patches.
//
// Layout of a compiled tileset's quarter-plane tilings: the seed sits at
// (0,0) with a wall column above it; the rest of row 0 carries input tiles
// (one per non-blank tape symbol); row 1 receives the head at cell 1; from
// then on each row encodes one machine step. The north interface of row m
// spells the tape after m-1 steps with the head cell replaced by a
// state/symbol pair. Halting states have no receive tiles, so a seeded
// w x h rectangle is tileable iff the windowed run completes at least h-2
// steps (a step entering a halting state in-window, or falling off the left
// edge, does not complete; leaving the window to the right survives
// forever). Machines whose start state already halts cap the height at 1.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfsim/turing.hpp"

namespace selfsim {

struct WangTile {
  int id = 0;
  std::string n, e, s, w;
};

struct WangTileset {
  std::vector<WangTile> tiles;  // ids are positions
  int seed = -1;
  int blank = -1;
  std::map<std::string, int> omega;  // tape symbol -> input tile id

  const WangTile& tile(int id) const {
    if (id < 0 || id >= static_cast<int>(tiles.size()))
      throw std::runtime_error("unknown tile id " + std::to_string(id));
    return tiles[static_cast<size_t>(id)];
  }

  int add(std::string n, std::string e, std::string s, std::string w) {
    int id = static_cast<int>(tiles.size());
    tiles.push_back(WangTile{id, std::move(n), std::move(e), std::move(s), std::move(w)});
    return id;
  }

  std::optional<std::string> omega_symbol_of(int tile_id) const {
    for (const auto& [sym, id] : omega)
      if (id == tile_id) return sym;
    return std::nullopt;
  }
};

using TileGrid = std::map<std::pair<int, int>, int>;  // (x,y) -> tile id

// ----- compilation -------------------------------------------------------------

inline WangTileset compile_tm_to_tiles(const TuringMachine& m) {
  m.validate();
  WangTileset t;
  auto sym = [](const std::string& a) { return "s:" + a; };
  auto pair_col = [](const std::string& q, const std::string& a) { return "p:" + q + ":" + a; };
  auto mr = [](const std::string& q) { return "mr:" + q; };
  auto ml = [](const std::string& q) { return "ml:" + q; };

  t.blank = t.add("x", "x", "x", "x");
  t.seed = t.add("wall0", "row0", "x", "x");
  for (const auto& a : m.alphabet)
    if (a != m.blank) t.omega[a] = t.add(sym(a), "row0", "x", "row0");
  t.add("wall", mr(m.start), "wall0", "x");  // wall start
  t.add("wall", "h0", "wall", "x");          // wall continuation
  for (const auto& a : m.alphabet) t.add(sym(a), "h0", sym(a), "h0");  // copy
  for (const auto& [key, val] : m.delta) {
    const auto& [q2, write, move] = val;
    if (move == 'R')
      t.add(sym(write), mr(q2), pair_col(key.first, key.second), "h0");
    else
      t.add(sym(write), "h0", pair_col(key.first, key.second), ml(q2));
  }
  for (const auto& q : m.states) {
    if (m.halt.count(q)) continue;  // halting states have no successor tiles
    for (const auto& a : m.alphabet) {
      t.add(pair_col(q, a), "h0", sym(a), mr(q));  // head arrives from the left
      t.add(pair_col(q, a), ml(q), sym(a), "h0");  // head arrives from the right
    }
  }
  return t;
}

// ----- serialization -----------------------------------------------------------

inline nlohmann::ordered_json tileset_to_json(const WangTileset& t) {
  nlohmann::ordered_json out;
  auto tiles = nlohmann::ordered_json::array();
  for (const auto& tile : t.tiles)
    tiles.push_back({{"id", tile.id}, {"n", tile.n}, {"e", tile.e}, {"s", tile.s}, {"w", tile.w}});
  out["tiles"] = std::move(tiles);
  out["seed"] = t.seed;
  out["omega"] = nlohmann::ordered_json::object();
  for (const auto& [sym, id] : t.omega) out["omega"][sym] = id;
  if (t.blank >= 0) out["blank"] = t.blank;
  return out;
}

inline WangTileset tileset_from_json(const nlohmann::ordered_json& j) {
  WangTileset t;
  for (const auto& tj : j.at("tiles")) {
    int id = tj.at("id").get<int>();
    if (id != static_cast<int>(t.tiles.size()))
      throw std::runtime_error("tile ids must be consecutive from 0");
    t.add(tj.at("n").get<std::string>(), tj.at("e").get<std::string>(),
          tj.at("s").get<std::string>(), tj.at("w").get<std::string>());
  }
  t.seed = j.at("seed").get<int>();
  t.tile(t.seed);
  for (const auto& [sym, id] : j.at("omega").items()) t.omega[sym] = id.get<int>();
  if (j.contains("blank")) {
    t.blank = j.at("blank").get<int>();
  } else {
    t.blank = -1;
    for (const auto& tile : t.tiles)
      if (tile.n == "x" && tile.e == "x" && tile.s == "x" && tile.w == "x") t.blank = tile.id;
  }
  return t;
}

inline nlohmann::ordered_json grid_to_json(const TileGrid& g) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [xy, id] : g)
    out.push_back({{"x", xy.first}, {"y", xy.second}, {"tile", id}});
  return out;
}

inline TileGrid grid_from_json(const nlohmann::ordered_json& j) {
  TileGrid g;
  for (const auto& cj : j)
    g[{cj.at("x").get<int>(), cj.at("y").get<int>()}] = cj.at("tile").get<int>();
  return g;
}

// ----- checking ----------------------------------------------------------------

struct TileViolation {
  std::string rule;  // adjacency-h | adjacency-v | seed-at-origin
  int x = 0, y = 0;
  std::string detail;
};

struct TilingReport {
  std::vector<TileViolation> violations;
  size_t checked = 0;
  bool ok() const { return violations.empty(); }
};

inline TilingReport check_tiling(const WangTileset& t, const TileGrid& grid) {
  TilingReport rep;
  for (const auto& [xy, id] : grid) {
    const auto& [x, y] = xy;
    const WangTile& c = t.tile(id);
    auto right = grid.find({x + 1, y});
    if (right != grid.end()) {
      ++rep.checked;
      const WangTile& r = t.tile(right->second);
      if (c.e != r.w)
        rep.violations.push_back({"adjacency-h", x, y,
                                  "east '" + c.e + "' vs west '" + r.w + "' of (" +
                                      std::to_string(x + 1) + "," + std::to_string(y) + ")"});
    }
    auto up = grid.find({x, y + 1});
    if (up != grid.end()) {
      ++rep.checked;
      const WangTile& u = t.tile(up->second);
      if (c.n != u.s)
        rep.violations.push_back({"adjacency-v", x, y,
                                  "north '" + c.n + "' vs south '" + u.s + "' of (" +
                                      std::to_string(x) + "," + std::to_string(y + 1) + ")"});
    }
  }
  auto origin = grid.find({0, 0});
  if (origin != grid.end()) {
    ++rep.checked;
    if (origin->second != t.seed)
      rep.violations.push_back({"seed-at-origin", 0, 0, "origin tile is not the seed"});
  }
  return rep;
}

inline nlohmann::ordered_json tiling_report_to_json(const TilingReport& rep) {
  nlohmann::ordered_json out;
  out["checked"] = rep.checked;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : rep.violations)
    arr.push_back({{"rule", v.rule}, {"x", v.x}, {"y", v.y}, {"detail", v.detail}});
  out["violations"] = std::move(arr);
  return out;
}

// Bottom-row extraction: the tape symbols at (1,0),(2,0),... while present.
inline std::vector<std::string> eta(const WangTileset& t, const TileGrid& grid) {
  auto origin = grid.find({0, 0});
  if (origin == grid.end() || origin->second != t.seed)
    throw std::runtime_error("eta: seed tile absent at the origin");
  std::vector<std::string> out;
  for (int x = 1;; ++x) {
    auto it = grid.find({x, 0});
    if (it == grid.end()) break;
    auto sym = t.omega_symbol_of(it->second);
    if (!sym)
      throw std::runtime_error("eta: non-input tile in the bottom row at x=" + std::to_string(x));
    out.push_back(*sym);
  }
  return out;
}

// ----- canonical rendering -------------------------------------------------------

// Renders the w x h rectangle of the machine run on the given input (which
// must fill the visible window, cells 1..w-1). Fails if the run cannot
// support height h.
inline TileGrid render_computation(const WangTileset& t, const TuringMachine& m,
                                   const std::vector<std::string>& input, int w, int h) {
  if (w < 2) throw std::runtime_error("render: width must be >= 2");
  if (static_cast<int>(input.size()) != w - 1)
    throw std::runtime_error("render: input must fill the window (width-1 symbols)");
  for (const auto& a : input)
    if (!t.omega.count(a))
      throw std::runtime_error("render: '" + a + "' has no input tile");
  if (m.halt.count(m.start) && h > 1)
    throw std::runtime_error("render: machine halts before reading; height capped at 1");

  auto find_tile = [&](const std::string& n, const std::string& e, const std::string& s,
                       const std::string& w_) {
    for (const auto& tile : t.tiles)
      if (tile.n == n && tile.e == e && tile.s == s && tile.w == w_) return tile.id;
    throw std::runtime_error("render: tileset lacks tile (" + n + "," + e + "," + s + "," + w_ + ")");
  };
  auto sym = [](const std::string& a) { return "s:" + a; };

  TileGrid grid;
  grid[{0, 0}] = t.seed;
  for (int x = 1; x < w; ++x) grid[{x, 0}] = t.omega.at(input[static_cast<size_t>(x - 1)]);

  std::vector<std::string> tape(input);
  int head = 1;
  std::string state = m.start;
  bool exited = false;
  for (int y = 1; y < h; ++y) {
    grid[{0, y}] = y == 1 ? find_tile("wall", "mr:" + m.start, "wall0", "x")
                          : find_tile("wall", "h0", "wall", "x");
    if (y == 1) {
      // Head arrival row: cell 1 receives the head, the rest copies.
      grid[{1, y}] = find_tile("p:" + state + ":" + tape[0], "h0", sym(tape[0]), "mr:" + state);
      for (int x = 2; x < w; ++x) {
        const std::string& a = tape[static_cast<size_t>(x - 1)];
        grid[{x, y}] = find_tile(sym(a), "h0", sym(a), "h0");
      }
      continue;
    }
    if (exited) {
      for (int x = 1; x < w; ++x) {
        const std::string& a = tape[static_cast<size_t>(x - 1)];
        grid[{x, y}] = find_tile(sym(a), "h0", sym(a), "h0");
      }
      continue;
    }
    // Row y encodes step y-1.
    const std::string read = tape[static_cast<size_t>(head - 1)];
    auto it = m.delta.find({state, read});
    if (it == m.delta.end())
      throw std::runtime_error("render: machine halts within the window at step " +
                               std::to_string(y - 1));
    const auto& [q2, write, move] = it->second;
    if (move == 'L' && head == 1)
      throw std::runtime_error("render: machine falls off the tape at step " +
                               std::to_string(y - 1));
    for (int x = 1; x < w; ++x) {
      if (x == head) continue;
      if (move == 'R' && x == head + 1) continue;
      if (move == 'L' && x == head - 1) continue;
      const std::string& a = tape[static_cast<size_t>(x - 1)];
      grid[{x, y}] = find_tile(sym(a), "h0", sym(a), "h0");
    }
    if (move == 'R') {
      grid[{head, y}] = find_tile(sym(write), "mr:" + q2, "p:" + state + ":" + read, "h0");
      if (head + 1 < w) {
        const std::string& a = tape[static_cast<size_t>(head)];
        grid[{head + 1, y}] = find_tile("p:" + q2 + ":" + a, "h0", sym(a), "mr:" + q2);
      }
    } else {
      grid[{head, y}] = find_tile(sym(write), "h0", "p:" + state + ":" + read, "ml:" + q2);
      const std::string& a = tape[static_cast<size_t>(head - 2)];
      grid[{head - 1, y}] = find_tile("p:" + q2 + ":" + a, "ml:" + q2, sym(a), "h0");
    }
    tape[static_cast<size_t>(head - 1)] = write;
    head += move == 'R' ? 1 : -1;
    state = q2;
    if (head >= w) {
      exited = true;
    } else if (m.halt.count(state)) {
      throw std::runtime_error("render: machine enters halting state " + state + " at step " +
                               std::to_string(y - 1) + "; height capped at " + std::to_string(y + 1));
    }
  }
  return grid;
}

// ----- exhaustive search -----------------------------------------------------------

// Backtracking search for a valid w x h rectangle with the seed pinned at
// (0,0) and optional pinned bottom-row tiles at (1..,0). Cells are filled
// row-major bottom-up, so each new cell is constrained by its west and south
// neighbors only. Returns the first solution in tile-id order, or nothing.
inline std::optional<TileGrid> search_seeded_patch(
    const WangTileset& t, int w, int h,
    const std::optional<std::vector<int>>& pinned_bottom = std::nullopt) {
  if (w < 1 || h < 1) throw std::runtime_error("search: dimensions must be positive");
  if (pinned_bottom && static_cast<int>(pinned_bottom->size()) > w - 1)
    throw std::runtime_error("search: more pinned tiles than bottom-row cells");

  const int cells = w * h;
  std::vector<int> pick(static_cast<size_t>(cells), -1);
  auto at = [&](int x, int y) { return pick[static_cast<size_t>(y * w + x)]; };

  std::function<bool(int)> fill = [&](int i) -> bool {
    if (i == cells) return true;
    const int x = i % w, y = i / w;
    std::optional<std::string> want_w, want_s;
    if (x > 0) want_w = t.tile(at(x - 1, y)).e;
    if (y > 0) want_s = t.tile(at(x, y - 1)).n;
    std::optional<int> forced;
    if (x == 0 && y == 0) forced = t.seed;
    if (y == 0 && x >= 1 && pinned_bottom && x - 1 < static_cast<int>(pinned_bottom->size()))
      forced = (*pinned_bottom)[static_cast<size_t>(x - 1)];
    for (const auto& tile : t.tiles) {
      if (forced && tile.id != *forced) continue;
      if (want_w && tile.w != *want_w) continue;
      if (want_s && tile.s != *want_s) continue;
      pick[static_cast<size_t>(i)] = tile.id;
      if (fill(i + 1)) return true;
      pick[static_cast<size_t>(i)] = -1;
    }
    return false;
  };
  if (!fill(0)) return std::nullopt;
  TileGrid grid;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) grid[{x, y}] = at(x, y);
  return grid;
}

}  // namespace selfsim
