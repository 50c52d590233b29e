#pragma once
// Finite patches of subshift configurations: a symbol per group element of a
// Cayley ball (cells keyed by canonical word text). Patches serialize to
// JSON and can be translated by a generator, which re-keys every cell by
// left multiplication.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "selfsim/ball.hpp"
#include "selfsim/symbols.hpp"
#include "selfsim/tiles.hpp"
#include "selfsim/word.hpp"

namespace selfsim {

template <typename Sym>
struct SystemName;
template <>
struct SystemName<PathSymbol> {
  static constexpr const char* value = "path";
};
template <>
struct SystemName<BushSymbol> {
  static constexpr const char* value = "bush";
};
template <>
struct SystemName<ComputeSymbol> {
  static constexpr const char* value = "compute";
};

template <typename Sym>
struct Patch {
  VertexGraph graph;
  int radius = 0;
  std::map<std::string, Sym> cells;        // canonical word text -> symbol
  std::optional<WangTileset> tileset;      // compute patches carry their tileset

  void put(const NormalWord& g, Sym sym) { cells[canonical_key(graph, g)] = std::move(sym); }
  bool contains(const NormalWord& g) const { return cells.count(canonical_key(graph, g)) > 0; }
  const Sym& at(const NormalWord& g) const {
    auto it = cells.find(canonical_key(graph, g));
    if (it == cells.end())
      throw std::runtime_error("patch has no cell at " + word_to_string(graph, g));
    return it->second;
  }
  Sym& at_mut(const NormalWord& g) {
    auto it = cells.find(canonical_key(graph, g));
    if (it == cells.end())
      throw std::runtime_error("patch has no cell at " + word_to_string(graph, g));
    return it->second;
  }
};

template <typename Sym>
nlohmann::ordered_json patch_to_json(const Patch<Sym>& p) {
  GenIndex gi = make_gen_index(p.graph);
  nlohmann::ordered_json out;
  out["system"] = SystemName<Sym>::value;
  out["graph"] = graph_to_json(p.graph);
  out["radius"] = p.radius;
  auto cells = nlohmann::ordered_json::array();
  for (const auto& [key, sym] : p.cells)
    cells.push_back({{"element", key}, {"symbol", symbol_to_json_ctx(sym, gi)}});
  out["cells"] = std::move(cells);
  if (p.tileset) out["tileset"] = tileset_to_json(*p.tileset);
  return out;
}

template <typename Sym>
Patch<Sym> patch_from_json(const nlohmann::ordered_json& j) {
  Patch<Sym> p;
  const std::string sys = j.at("system").get<std::string>();
  if (sys != SystemName<Sym>::value)
    throw std::runtime_error("expected a " + std::string(SystemName<Sym>::value) +
                             " patch, found system '" + sys + "'");
  p.graph = graph_from_json(j.at("graph"));
  p.radius = j.at("radius").get<int>();
  GenIndex gi = make_gen_index(p.graph);
  for (const auto& cj : j.at("cells")) {
    NormalWord g = parse_word(p.graph, cj.at("element").get<std::string>());
    Sym sym;
    symbol_from_json_ctx(cj.at("symbol"), gi, sym);
    p.put(g, std::move(sym));
  }
  if (j.contains("tileset")) p.tileset = tileset_from_json(j.at("tileset"));
  return p;
}

// Translate a patch by a single generator syllable: cell g moves to s*g.
template <typename Sym>
Patch<Sym> shift_patch(const Patch<Sym>& p, const Syllable& s) {
  Patch<Sym> out;
  out.graph = p.graph;
  out.radius = p.radius + 1;
  out.tileset = p.tileset;
  NormalWord sw;
  sw.syllables.push_back(s);
  for (const auto& [key, sym] : p.cells) {
    NormalWord g = parse_word(p.graph, key);
    out.put(multiply(p.graph, sw, g), sym);
  }
  return out;
}

}  // namespace selfsim
