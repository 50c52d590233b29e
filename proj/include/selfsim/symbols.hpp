#pragma once
// Symbol types for the three layered subshifts over a vertex graph:
//   - PathSymbol: per-vertex pointer/color data describing doubly infinite
//     colored paths through each vertex group's flat.
//   - BushSymbol: a path symbol plus a branch set B, colored-edge diagonal
//     markers D, incidence entries I, and a partial labelling L of
//     (edge, branch-set) keys by tape columns.
//   - ComputeSymbol: a bush symbol plus marked-plane edges P and a sparse
//     Wang-tile assignment T on colored edges.
// All types serialize to stable JSON; absent L/T keys mean blank.

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/omega.hpp"

namespace selfsim {

// ----- colors -------------------------------------------------------------------

// Vertices with a single left pointer carry the neutral color "b" (its own
// opposite); two-pointer vertices alternate between "r" and "c".
enum class Color { B, R, C };

inline Color opposite(Color c) {
  if (c == Color::B) return Color::B;
  return c == Color::R ? Color::C : Color::R;
}

inline std::string color_to_string(Color c) {
  switch (c) {
    case Color::B: return "b";
    case Color::R: return "r";
    default: return "c";
  }
}

inline Color color_from_string(const std::string& s) {
  if (s == "b") return Color::B;
  if (s == "r") return Color::R;
  if (s == "c") return Color::C;
  throw std::runtime_error("unknown color '" + s + "' (expected \"b\", \"r\" or \"c\")");
}

struct ColoredVertex {
  int v = 0;
  Color c = Color::R;
  friend bool operator==(const ColoredVertex& a, const ColoredVertex& b) {
    return a.v == b.v && a.c == b.c;
  }
  friend bool operator<(const ColoredVertex& a, const ColoredVertex& b) {
    if (a.v != b.v) return a.v < b.v;
    return static_cast<int>(a.c) < static_cast<int>(b.c);
  }
};

// Unordered colored edge, stored with the smaller endpoint first.
using ColoredEdge = std::pair<ColoredVertex, ColoredVertex>;

inline ColoredEdge make_colored_edge(ColoredVertex a, ColoredVertex b) {
  if (a.v == b.v) throw std::runtime_error("colored edge endpoints must differ");
  if (b < a) std::swap(a, b);
  return {a, b};
}

inline nlohmann::ordered_json colored_vertex_to_json(const ColoredVertex& cv) {
  return nlohmann::ordered_json::array({std::to_string(cv.v), color_to_string(cv.c)});
}

inline ColoredVertex colored_vertex_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::runtime_error("colored vertex must be [\"<id>\",\"r|c\"]");
  return ColoredVertex{std::stoi(j.at(0).get<std::string>()),
                       color_from_string(j.at(1).get<std::string>())};
}

// ----- path symbols ---------------------------------------------------------------

// Per-vertex component: pointers into K_v (short group elements, stored as
// element text) plus a color. Arithmetic vertices carry a single left
// pointer; free-group vertices carry one left pointer per color.
struct PathComponent {
  bool colored_left = false;
  std::string l;        // left pointer (when colored_left is false)
  std::string lr, lc;   // left pointers per color (when colored_left is true)
  std::string r;        // right pointer
  Color col = Color::B;

  // Left pointer for a color; single-pointer components ignore the color.
  const std::string& left(Color c) const {
    if (!colored_left) return l;
    if (c == Color::B)
      throw std::runtime_error("two-color vertex has no left pointer for color b");
    return c == Color::R ? lr : lc;
  }
  friend bool operator==(const PathComponent& a, const PathComponent& b) {
    return a.colored_left == b.colored_left && a.l == b.l && a.lr == b.lr && a.lc == b.lc &&
           a.r == b.r && a.col == b.col;
  }
  friend bool operator!=(const PathComponent& a, const PathComponent& b) { return !(a == b); }
};

struct PathSymbol {
  std::map<int, PathComponent> comps;  // keyed by vertex id; total over V

  const PathComponent& at(int v) const {
    auto it = comps.find(v);
    if (it == comps.end())
      throw std::runtime_error("path symbol lacks vertex " + std::to_string(v));
    return it->second;
  }
  friend bool operator==(const PathSymbol& a, const PathSymbol& b) { return a.comps == b.comps; }
  friend bool operator!=(const PathSymbol& a, const PathSymbol& b) { return !(a == b); }
};

inline nlohmann::ordered_json path_component_to_json(const PathComponent& pc) {
  nlohmann::ordered_json out;
  if (pc.colored_left) {
    out["lr"] = pc.lr;
    out["lc"] = pc.lc;
  } else {
    out["l"] = pc.l;
  }
  out["r"] = pc.r;
  out["col"] = color_to_string(pc.col);
  return out;
}

inline PathComponent path_component_from_json(const nlohmann::ordered_json& j) {
  PathComponent pc;
  if (j.contains("lr") || j.contains("lc")) {
    pc.colored_left = true;
    pc.lr = j.at("lr").get<std::string>();
    pc.lc = j.at("lc").get<std::string>();
  } else {
    pc.l = j.at("l").get<std::string>();
  }
  pc.r = j.at("r").get<std::string>();
  pc.col = color_from_string(j.at("col").get<std::string>());
  return pc;
}

inline nlohmann::ordered_json symbol_to_json(const PathSymbol& s) {
  nlohmann::ordered_json out;
  for (const auto& [v, pc] : s.comps) out[std::to_string(v)] = path_component_to_json(pc);
  return out;
}

inline void symbol_from_json(const nlohmann::ordered_json& j, PathSymbol& s) {
  s.comps.clear();
  for (const auto& [key, val] : j.items()) s.comps[std::stoi(key)] = path_component_from_json(val);
}

// ----- bush symbols ---------------------------------------------------------------

struct BushSymbol {
  PathSymbol rho;
  std::set<int> B;
  std::set<ColoredEdge> D;
  std::set<std::pair<ColoredVertex, std::set<int>>> I;
  std::map<std::pair<std::pair<int, int>, std::set<int>>, OmegaSymbol> L;

  friend bool operator==(const BushSymbol& a, const BushSymbol& b) {
    return a.rho == b.rho && a.B == b.B && a.D == b.D && a.I == b.I && a.L == b.L;
  }
  friend bool operator!=(const BushSymbol& a, const BushSymbol& b) { return !(a == b); }
};

inline nlohmann::ordered_json vertex_set_to_json(const std::set<int>& s) {
  auto arr = nlohmann::ordered_json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

inline std::set<int> vertex_set_from_json(const nlohmann::ordered_json& j) {
  std::set<int> s;
  for (const auto& v : j) s.insert(v.get<int>());
  return s;
}

inline nlohmann::ordered_json colored_edge_to_json(const ColoredEdge& e) {
  return nlohmann::ordered_json::array(
      {colored_vertex_to_json(e.first), colored_vertex_to_json(e.second)});
}

inline ColoredEdge colored_edge_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("colored edge must be a pair");
  return make_colored_edge(colored_vertex_from_json(j.at(0)), colored_vertex_from_json(j.at(1)));
}

// The L layer needs the generator index to name tape columns, so symbols
// serialize through context-aware overloads; the path overload ignores it.
inline nlohmann::ordered_json symbol_to_json_ctx(const PathSymbol& s, const GenIndex&) {
  return symbol_to_json(s);
}

inline void symbol_from_json_ctx(const nlohmann::ordered_json& j, const GenIndex&, PathSymbol& s) {
  symbol_from_json(j, s);
}

inline nlohmann::ordered_json symbol_to_json_ctx(const BushSymbol& s, const GenIndex& gi) {
  nlohmann::ordered_json out;
  out["rho"] = symbol_to_json(s.rho);
  out["B"] = vertex_set_to_json(s.B);
  auto d = nlohmann::ordered_json::array();
  for (const auto& e : s.D) d.push_back(colored_edge_to_json(e));
  out["D"] = std::move(d);
  auto i = nlohmann::ordered_json::array();
  for (const auto& [cv, bs] : s.I)
    i.push_back(nlohmann::ordered_json::array({colored_vertex_to_json(cv), vertex_set_to_json(bs)}));
  out["I"] = std::move(i);
  auto l = nlohmann::ordered_json::array();
  for (const auto& [key, om] : s.L) {
    nlohmann::ordered_json entry;
    entry["edge"] = nlohmann::ordered_json::array({key.first.first, key.first.second});
    entry["B"] = vertex_set_to_json(key.second);
    entry["omega"] = omega_to_json(gi, om);
    l.push_back(std::move(entry));
  }
  out["L"] = std::move(l);
  return out;
}

inline void symbol_from_json_ctx(const nlohmann::ordered_json& j, const GenIndex& gi,
                                 BushSymbol& s) {
  symbol_from_json(j.at("rho"), s.rho);
  s.B = vertex_set_from_json(j.at("B"));
  s.D.clear();
  for (const auto& e : j.at("D")) s.D.insert(colored_edge_from_json(e));
  s.I.clear();
  for (const auto& entry : j.at("I")) {
    if (!entry.is_array() || entry.size() != 2)
      throw std::runtime_error("incidence entry must be [colored-vertex, vertex-set]");
    s.I.insert({colored_vertex_from_json(entry.at(0)), vertex_set_from_json(entry.at(1))});
  }
  s.L.clear();
  for (const auto& entry : j.at("L")) {
    const auto& ej = entry.at("edge");
    if (!ej.is_array() || ej.size() != 2) throw std::runtime_error("L edge must be a pair of ids");
    int u = ej.at(0).get<int>(), v = ej.at(1).get<int>();
    if (u > v) std::swap(u, v);
    auto key = std::make_pair(std::make_pair(u, v), vertex_set_from_json(entry.at("B")));
    if (s.L.count(key)) throw std::runtime_error("duplicate L key");
    s.L.emplace(key, omega_from_json(gi, entry.at("omega")));
  }
}

// ----- compute symbols ---------------------------------------------------------------

struct ComputeSymbol {
  BushSymbol bush;
  std::set<ColoredEdge> P;
  std::map<ColoredEdge, int> T;  // absent key = blank tile

  friend bool operator==(const ComputeSymbol& a, const ComputeSymbol& b) {
    return a.bush == b.bush && a.P == b.P && a.T == b.T;
  }
  friend bool operator!=(const ComputeSymbol& a, const ComputeSymbol& b) { return !(a == b); }
};

inline nlohmann::ordered_json symbol_to_json_ctx(const ComputeSymbol& s, const GenIndex& gi) {
  auto out = symbol_to_json_ctx(s.bush, gi);
  auto p = nlohmann::ordered_json::array();
  for (const auto& e : s.P) p.push_back(colored_edge_to_json(e));
  out["P"] = std::move(p);
  auto t = nlohmann::ordered_json::array();
  for (const auto& [e, tile] : s.T)
    t.push_back({{"edge", colored_edge_to_json(e)}, {"tile", tile}});
  out["T"] = std::move(t);
  return out;
}

inline void symbol_from_json_ctx(const nlohmann::ordered_json& j, const GenIndex& gi,
                                 ComputeSymbol& s) {
  symbol_from_json_ctx(j, gi, s.bush);
  s.P.clear();
  for (const auto& e : j.at("P")) s.P.insert(colored_edge_from_json(e));
  s.T.clear();
  for (const auto& entry : j.at("T"))
    s.T[colored_edge_from_json(entry.at("edge"))] = entry.at("tile").get<int>();
}

}  // namespace selfsim
