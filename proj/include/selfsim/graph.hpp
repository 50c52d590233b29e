#pragma once
// Finite simple graphs with group-labeled vertices, JSON / edge-list parsing,
// and the connectivity predicates behind disconnecting-clique analysis.

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "selfsim/group.hpp"

namespace selfsim {

using json = nlohmann::ordered_json;

struct VertexGraph {
  // Ascending vertex id; the id order is the canonical vertex order used by
  // normal forms, clique enumeration, and every serialized report.
  std::vector<int> ids;
  std::map<int, VertexGroup> groups;
  std::set<std::pair<int, int>> edges;  // normalized u < v

  bool has_vertex(int v) const { return groups.count(v) != 0; }

  const VertexGroup& group(int v) const {
    auto it = groups.find(v);
    if (it == groups.end())
      throw std::runtime_error("unknown vertex id " + std::to_string(v));
    return it->second;
  }

  bool adjacent(int u, int v) const {
    if (u == v) return false;
    return edges.count({std::min(u, v), std::max(u, v)}) != 0;
  }

  std::vector<int> link(int v) const {
    std::vector<int> out;
    for (int u : ids)
      if (adjacent(u, v)) out.push_back(u);
    return out;
  }

  size_t size() const { return ids.size(); }

  bool is_clique(const std::set<int>& c) const {
    for (auto i = c.begin(); i != c.end(); ++i)
      for (auto j = std::next(i); j != c.end(); ++j)
        if (!adjacent(*i, *j)) return false;
    return true;
  }

  bool is_complete() const {
    return is_clique(std::set<int>(ids.begin(), ids.end()));
  }

  void add_vertex(int id, VertexGroup g = VertexGroup{}) {
    if (has_vertex(id)) throw std::runtime_error("duplicate vertex id " + std::to_string(id));
    g.validate();
    groups[id] = std::move(g);
    ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
  }

  void add_edge(int u, int v) {
    if (u == v) throw std::runtime_error("self-loop at vertex " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
      throw std::runtime_error("edge references unknown vertex");
    auto e = std::make_pair(std::min(u, v), std::max(u, v));
    if (!edges.insert(e).second)
      throw std::runtime_error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
};

// Number of connected components of the subgraph induced on `sub`.
inline int component_count(const VertexGraph& g, const std::set<int>& sub) {
  std::set<int> seen;
  int comps = 0;
  for (int start : sub) {
    if (seen.count(start)) continue;
    ++comps;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : sub)
        if (!seen.count(u) && g.adjacent(u, v)) {
          seen.insert(u);
          stack.push_back(u);
        }
    }
  }
  return comps;
}

inline bool is_connected(const VertexGraph& g) {
  return component_count(g, std::set<int>(g.ids.begin(), g.ids.end())) == 1;
}

// C is disconnecting when the induced subgraph on V minus C has a component
// count different from 1. Removing everything gives 0 components and
// therefore counts.
inline bool is_disconnecting(const VertexGraph& g, const std::set<int>& c) {
  for (int v : c)
    if (!g.has_vertex(v))
      throw std::runtime_error("unknown vertex id " + std::to_string(v) + " in candidate set");
  std::set<int> rest;
  for (int v : g.ids)
    if (!c.count(v)) rest.insert(v);
  return component_count(g, rest) != 1;
}

// ----- serialization ---------------------------------------------------------

inline json group_to_json(const VertexGroup& g) {
  json out;
  switch (g.kind) {
    case GroupKind::Z: out["kind"] = "Z"; break;
    case GroupKind::Free: out["kind"] = "F"; out["rank"] = g.rank; break;
    case GroupKind::Zn: out["kind"] = "Zn"; out["order"] = g.order; break;
    case GroupKind::Table:
      out["kind"] = "table";
      out["elements"] = g.elements;
      out["mul"] = g.table;
      break;
    case GroupKind::Abstract:
      out["kind"] = "abstract";
      out["infinite"] = g.abstract_infinite;
      out["amenable"] = g.abstract_amenable;
      break;
  }
  return out;
}

inline VertexGroup group_from_json(const json& j) {
  VertexGroup g;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Z") {
    g.kind = GroupKind::Z;
  } else if (kind == "F") {
    g.kind = GroupKind::Free;
    g.rank = j.at("rank").get<int>();
  } else if (kind == "Zn") {
    g.kind = GroupKind::Zn;
    g.order = j.at("order").get<int>();
  } else if (kind == "table") {
    g.kind = GroupKind::Table;
    g.elements = j.at("elements").get<std::vector<std::string>>();
    g.table = j.at("mul").get<std::vector<std::vector<int>>>();
  } else if (kind == "abstract") {
    g.kind = GroupKind::Abstract;
    g.abstract_infinite = j.at("infinite").get<bool>();
    g.abstract_amenable = j.at("amenable").get<bool>();
  } else {
    throw std::runtime_error("unknown group kind '" + kind + "'");
  }
  g.validate();
  return g;
}

inline json graph_to_json(const VertexGraph& g) {
  json out;
  out["vertices"] = json::array();
  for (int v : g.ids)
    out["vertices"].push_back(json{{"id", v}, {"group", group_to_json(g.group(v))}});
  out["edges"] = json::array();
  for (const auto& [u, v] : g.edges) out["edges"].push_back(json::array({u, v}));
  return out;
}

inline VertexGraph graph_from_json(const json& j) {
  VertexGraph g;
  for (const auto& vj : j.at("vertices"))
    g.add_vertex(vj.at("id").get<int>(),
                 vj.contains("group") ? group_from_json(vj.at("group")) : VertexGroup{});
  for (const auto& ej : j.at("edges")) {
    if (!ej.is_array() || ej.size() != 2)
      throw std::runtime_error("edge entries must be two-element arrays");
    g.add_edge(ej.at(0).get<int>(), ej.at(1).get<int>());
  }
  return g;
}

// Accepts either the JSON format or a plain edge list ("u v" per line, every
// vertex defaulting to the integer group).
inline VertexGraph parse_vertex_graph(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return graph_from_json(json::parse(text));
  VertexGraph g;
  std::vector<std::pair<int, int>> pairs;
  size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    int u = 0, v = 0;
    char extra = 0;
    if (std::sscanf(line.c_str(), "%d %d %c", &u, &v, &extra) != 2)
      throw std::runtime_error("edge list line " + std::to_string(line_no) +
                               ": expected 'u v', got '" + line + "'");
    pairs.emplace_back(u, v);
  }
  std::set<int> seen;
  for (auto [u, v] : pairs) { seen.insert(u); seen.insert(v); }
  for (int v : seen) g.add_vertex(v);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

}  // namespace selfsim
