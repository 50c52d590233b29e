#pragma once
// A small gallery of named vertex graphs used by the demos and tests:
// cycles, paths, complements, the bridged squares, a depth-two Sierpinski
// triangle, the Petersen graph, and a few graphs with free vertex groups.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/graph.hpp"

namespace selfsim {

inline VertexGraph all_z_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  VertexGraph g;
  VertexGroup z;
  z.kind = GroupKind::Z;
  for (int v = 1; v <= n; ++v) g.add_vertex(v, z);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline VertexGraph complement_of(const VertexGraph& g) {
  VertexGraph out;
  for (int v : g.ids) out.add_vertex(v, g.group(v));
  for (size_t i = 0; i < g.ids.size(); ++i)
    for (size_t j = i + 1; j < g.ids.size(); ++j)
      if (!g.adjacent(g.ids[i], g.ids[j])) out.add_edge(g.ids[i], g.ids[j]);
  return out;
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
  e.push_back({n, 1});
  return e;
}

inline std::vector<std::pair<int, int>> path_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.push_back({v, v + 1});
  return e;
}

inline std::vector<std::string> gallery_names() {
  return {"triangle",
          "square",
          "pentagon",
          "path3",
          "three_isolated",
          "bridged_squares",
          "complement_path5",
          "complement_path6",
          "complement_cycle6",
          "complement_cycle7",
          "sierpinski",
          "petersen",
          "z_f2",
          "single_f2",
          "mixed_square"};
}

inline VertexGraph gallery_graph(const std::string& name) {
  if (name == "triangle") return all_z_graph(3, cycle_edges(3));
  if (name == "square") return all_z_graph(4, cycle_edges(4));
  if (name == "pentagon") return all_z_graph(5, cycle_edges(5));
  if (name == "path3") return all_z_graph(3, path_edges(3));
  if (name == "three_isolated") return all_z_graph(3, {});
  if (name == "bridged_squares")
    return all_z_graph(8, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {6, 7}, {7, 8}, {8, 5}, {2, 8}});
  if (name == "complement_path5") return complement_of(all_z_graph(5, path_edges(5)));
  if (name == "complement_path6") return complement_of(all_z_graph(6, path_edges(6)));
  if (name == "complement_cycle6") return complement_of(all_z_graph(6, cycle_edges(6)));
  if (name == "complement_cycle7") return complement_of(all_z_graph(7, cycle_edges(7)));
  if (name == "sierpinski")
    return all_z_graph(6, {{1, 2}, {2, 3}, {3, 5}, {5, 6}, {6, 4}, {4, 5}, {5, 2}, {2, 4}, {4, 1}});
  if (name == "petersen")
    return all_z_graph(10, {{1, 2}, {2, 3}, {3, 4},  {4, 5}, {5, 1},  {1, 6}, {2, 7}, {3, 8},
                            {4, 9}, {5, 10}, {6, 8}, {7, 9}, {8, 10}, {9, 6}, {10, 7}});
  if (name == "z_f2") {
    VertexGraph g;
    VertexGroup z;
    z.kind = GroupKind::Z;
    VertexGroup f;
    f.kind = GroupKind::Free;
    f.rank = 2;
    g.add_vertex(1, z);
    g.add_vertex(2, f);
    g.add_edge(1, 2);
    return g;
  }
  if (name == "single_f2") {
    VertexGraph g;
    VertexGroup f;
    f.kind = GroupKind::Free;
    f.rank = 2;
    g.add_vertex(1, f);
    return g;
  }
  if (name == "mixed_square") {
    VertexGraph g;
    VertexGroup z;
    z.kind = GroupKind::Z;
    VertexGroup f;
    f.kind = GroupKind::Free;
    f.rank = 2;
    g.add_vertex(1, z);
    g.add_vertex(2, f);
    g.add_vertex(3, z);
    g.add_vertex(4, f);
    for (const auto& [u, v] : cycle_edges(4)) g.add_edge(u, v);
    return g;
  }
  throw std::runtime_error("unknown gallery graph '" + name + "'");
}

}  // namespace selfsim
