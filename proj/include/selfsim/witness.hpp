#pragma once
// Constructive witnesses for the path, bush and compute subshifts on finite
// Cayley-ball patches, plus the readers that extract tape sequences from
// them.
//
// Path components: integer vertices use the constant translation pointers
// (+1 left, -1 right); finite vertices cycle through their elements; free
// vertices get a deterministic per-ball matching in which every element is
// the uniquely colored child of one parent and every deep parent feeds
// exactly two children. Pointers that cannot be answered inside the ball
// are aimed at elements outside it, which makes every rule instance that
// would inspect them fall outside the patch window.
//
// Bush layers: the branch set at g drops the tail of g and keeps all free
// vertices. D/I entries are seeded by their base rules at every cell and
// closed forward along colored left pointers. The letter layer L writes,
// for every root g and branch edge {u,v}, the tape column y^(g)_{n+m-1} at
// the point reached by n steps in u and m steps in v, where y^(g) has the
// prefix of g^{-1}x in its identity column and the generator images of that
// prefix in the others. Grids rooted at different cells may overlap: on a
// plane through a free direction every cell is a root for the same key, so
// the overlapping writes only agree when the seed sequence is constant
// along the pointer flow. Disagreements are detected and rejected rather
// than resolved by precedence.
//
// Compute layers: every root marks its lexicographically least branch edge
// in P and lays a quarter plane of Wang tiles on it: the seed at the root,
// tape tiles along the u axis, a wall column up the v axis, and the windowed
// run of the machine in the interior.

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "selfsim/action.hpp"
#include "selfsim/ball.hpp"
#include "selfsim/matching.hpp"
#include "selfsim/rules.hpp"
#include "selfsim/separators.hpp"
#include "selfsim/tiles.hpp"

namespace selfsim {

inline BushSymbol& bush_mut(BushSymbol& s) { return s; }
inline BushSymbol& bush_mut(ComputeSymbol& s) { return s.bush; }

// ----- free-vertex components -------------------------------------------------

struct FreeWitnessStats {
  std::map<std::string, int> slots_filled;   // parent element -> 0..2
  std::map<std::string, int> children_of;    // parent element -> matched children
  std::set<std::string> matched_children;
  std::set<std::string> exit_children;
};

// Builds the per-element path components of one free vertex group on its
// radius-R ball. Elements of length <= R-2 must be fully matched (two
// children per parent, one parent per child); elements nearer the boundary
// may point outside the ball.
inline std::map<std::string, PathComponent> build_free_components(
    const VertexGroup& gr, int radius, FreeWitnessStats* stats = nullptr) {
  if (gr.kind != GroupKind::Free) throw std::runtime_error("free components need a free group");

  // Ball of the free group, in breadth-first order.
  std::vector<GroupElem> elems{gr.identity()};
  std::map<std::string, int> index{{"", 0}};
  for (size_t i = 0; i < elems.size(); ++i) {
    GroupElem e = elems[i];
    if (static_cast<int>(e.letters.size()) >= radius) continue;
    for (const auto& s : gr.generators()) {
      GroupElem t = gr.mul(e, s);
      if (index.count(t.letters)) continue;
      index[t.letters] = static_cast<int>(elems.size());
      elems.push_back(t);
    }
  }
  const int n = static_cast<int>(elems.size());
  const auto K = k_elements(gr);
  auto depth = [&](const GroupElem& e) { return static_cast<int>(e.letters.size()); };

  // Left side: two slots per element (even index r, odd index c); right
  // side: elements as children. An edge means child = parent * k for k in K.
  BipartiteMatcher m(2 * n, n);
  for (int i = 0; i < n; ++i) {
    for (const auto& k : K) {
      GroupElem t = gr.mul(elems[static_cast<size_t>(i)], k);
      auto it = index.find(t.letters);
      if (it == index.end()) continue;
      if (it->second == i) continue;
      m.add_edge(2 * i, it->second);
      m.add_edge(2 * i + 1, it->second);
    }
  }

  // Deep parents first, then deep children, then best effort on the rest.
  for (int i = 0; i < n; ++i) {
    if (depth(elems[static_cast<size_t>(i)]) > radius - 2) continue;
    for (int slot : {2 * i, 2 * i + 1})
      if (!m.augment_left(slot))
        throw std::runtime_error("free-vertex witness: cannot feed two children to " +
                                 gr.elem_to_string(elems[static_cast<size_t>(i)]));
  }
  for (int j = 0; j < n; ++j) {
    if (depth(elems[static_cast<size_t>(j)]) > radius - 2) continue;
    if (m.match_right[static_cast<size_t>(j)] >= 0) continue;
    if (!m.augment_right(j))
      throw std::runtime_error("free-vertex witness: cannot find a parent for " +
                               gr.elem_to_string(elems[static_cast<size_t>(j)]));
  }
  for (int slot = 0; slot < 2 * n; ++slot)
    if (m.match_left[static_cast<size_t>(slot)] < 0) m.augment_left(slot);
  for (int j = 0; j < n; ++j)
    if (m.match_right[static_cast<size_t>(j)] < 0) m.augment_right(j);

  auto exit_element = [&](const GroupElem& e) -> std::string {
    for (const auto& k : K) {
      GroupElem t = gr.mul(e, k);
      if (static_cast<int>(t.letters.size()) > radius) return gr.elem_to_string(k);
    }
    throw std::runtime_error("free-vertex witness: interior element " + gr.elem_to_string(e) +
                             " left unmatched");
  };

  std::map<std::string, PathComponent> table;
  for (int i = 0; i < n; ++i) {
    const GroupElem& e = elems[static_cast<size_t>(i)];
    PathComponent c;
    c.colored_left = true;
    for (int bit : {0, 1}) {
      int child = m.match_left[static_cast<size_t>(2 * i + bit)];
      std::string text = child >= 0
                             ? gr.elem_to_string(gr.mul(gr.inv(e), elems[static_cast<size_t>(child)]))
                             : exit_element(e);
      (bit == 0 ? c.lr : c.lc) = text;
    }
    int parent = m.match_right[static_cast<size_t>(i)];
    if (parent >= 0) {
      const GroupElem& pe = elems[static_cast<size_t>(parent / 2)];
      c.r = gr.elem_to_string(gr.mul(gr.inv(e), pe));
      c.col = parent % 2 == 0 ? Color::R : Color::C;
    } else {
      c.r = exit_element(e);
      c.col = Color::R;
    }
    table[e.letters] = c;
    if (stats) {
      std::string et = gr.elem_to_string(e);
      int filled = (m.match_left[static_cast<size_t>(2 * i)] >= 0 ? 1 : 0) +
                   (m.match_left[static_cast<size_t>(2 * i + 1)] >= 0 ? 1 : 0);
      stats->slots_filled[et] = filled;
      if (parent >= 0) {
        stats->matched_children.insert(et);
        ++stats->children_of[gr.elem_to_string(elems[static_cast<size_t>(parent / 2)])];
      } else {
        stats->exit_children.insert(et);
      }
    }
  }
  return table;
}

// Finite vertex groups walk a fixed cycle through all their elements.
inline std::map<std::string, PathComponent> build_cycle_components(const VertexGroup& gr) {
  std::vector<GroupElem> elems{gr.identity()};
  for (const auto& e : gr.generators()) elems.push_back(e);
  const size_t n = elems.size();
  std::map<std::string, PathComponent> table;
  for (size_t i = 0; i < n; ++i) {
    PathComponent c;
    c.colored_left = false;
    c.col = Color::B;
    c.l = gr.elem_to_string(gr.mul(gr.inv(elems[i]), elems[(i + 1) % n]));
    c.r = gr.elem_to_string(gr.mul(gr.inv(elems[i]), elems[(i + n - 1) % n]));
    table[gr.elem_to_string(elems[i])] = c;
  }
  return table;
}

// ----- path witness -------------------------------------------------------------

inline Patch<PathSymbol> path_witness(const VertexGraph& graph, int radius) {
  Patch<PathSymbol> p;
  p.graph = graph;
  p.radius = radius;

  std::map<int, std::map<std::string, PathComponent>> tables;
  for (int v : graph.ids) {
    const VertexGroup& gr = graph.group(v);
    switch (gr.kind) {
      case GroupKind::Z: {
        PathComponent c;
        c.colored_left = false;
        c.col = Color::B;
        c.l = "+1";
        c.r = "-1";
        tables[v][""] = c;  // constant; looked up with an empty key
        break;
      }
      case GroupKind::Zn:
      case GroupKind::Table:
        tables[v] = build_cycle_components(gr);
        break;
      case GroupKind::Free:
        tables[v] = build_free_components(gr, radius);
        break;
      case GroupKind::Abstract:
        throw std::runtime_error("abstract vertex groups admit no subshift witness");
    }
  }

  Ball ball = cayley_ball(graph, radius);
  for (const auto& w : ball.words) {
    PathSymbol sym;
    for (int v : graph.ids) {
      const VertexGroup& gr = graph.group(v);
      GroupElem h = project(graph, w, v);
      if (gr.kind == GroupKind::Z)
        sym.comps[v] = tables[v][""];
      else if (gr.kind == GroupKind::Free)
        sym.comps[v] = tables[v].at(h.letters);
      else
        sym.comps[v] = tables[v].at(gr.elem_to_string(h));
    }
    p.put(w, std::move(sym));
  }
  return p;
}

// ----- path following -------------------------------------------------------------

// One step along the colored left pointer at vertex v.
template <typename Sym>
NormalWord gamma_step(const Patch<Sym>& p, const NormalWord& g, int v, Color exponent) {
  const PathComponent& c = path_part(p.at(g)).at(v);
  const VertexGroup& gr = p.graph.group(v);
  return multiply_syllable(p.graph, g, v, gr.elem_from_string(c.left(exponent)));
}

// n steps in direction v from g; the exponent color is fixed by the color at
// the starting point (its opposite), as the path definition demands.
template <typename Sym>
NormalWord gamma_n(const Patch<Sym>& p, const NormalWord& g, int v, int n) {
  Color exponent = opposite(path_part(p.at(g)).at(v).col);
  NormalWord h = g;
  for (int i = 0; i < n; ++i) h = gamma_step(p, h, v, exponent);
  return h;
}

// ----- bush witness ----------------------------------------------------------------

inline Bits cycle_pattern(const Bits& pattern, size_t len) {
  if (pattern.empty()) throw std::runtime_error("seed bit pattern must be non-empty");
  Bits out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i) out.push_back(pattern[i % pattern.size()]);
  return out;
}

// Tape columns of the root g: the identity column carries the prefix of
// g^{-1}x and every generator column the oracle image of that prefix.
inline std::vector<OmegaSymbol> y_columns(const VertexGraph& graph, const GenIndex& gi,
                                          const ActionOracle& action, const Bits& x_prefix,
                                          const NormalWord& root) {
  Bits base = apply_inverse_of_word(action, graph, root, x_prefix);
  std::vector<Bits> cols{base};
  for (size_t c = 1; c < gi.columns(); ++c) cols.push_back(action.apply(gi.names[c], base));
  std::vector<OmegaSymbol> out(x_prefix.size());
  for (size_t k = 0; k < x_prefix.size(); ++k) {
    out[k].bits.reserve(gi.columns());
    for (const auto& col : cols) out[k].bits.push_back(col[k]);
  }
  return out;
}

inline std::set<int> branch_set(const VertexGraph& graph, const NormalWord& g) {
  std::set<int> out;
  std::set<int> t = tail(graph, g);
  for (int v : graph.ids)
    if (!t.count(v) || !graph.group(v).amenable()) out.insert(v);
  return out;
}

namespace detail {

// Forward closure of per-cell entry sets along colored left pointers: seed
// entries are placed by `init` at every cell, then every (cell, entry) pair
// propagates to the colored-left targets given by `ends(entry)` for as long
// as they stay inside the patch.
template <typename Sym, typename Entry>
void close_forward(Patch<Sym>& p, const std::vector<NormalWord>& cells,
                   const std::function<std::vector<Entry>(const NormalWord&)>& init,
                   const std::function<std::vector<ColoredVertex>(const Entry&)>& ends,
                   const std::function<std::set<Entry>&(Sym&)>& set_of) {
  std::deque<std::pair<NormalWord, Entry>> work;
  auto insert = [&](const NormalWord& g, const Entry& e) {
    if (set_of(p.at_mut(g)).insert(e).second) work.push_back({g, e});
  };
  for (const auto& g : cells)
    for (const auto& e : init(g)) insert(g, e);
  while (!work.empty()) {
    auto [g, e] = work.front();
    work.pop_front();
    for (const auto& cv : ends(e)) {
      const auto* lp = left_pointer(path_part(p.at(g)).at(cv.v), cv.c);
      if (!lp) throw std::runtime_error("witness produced a b-colored entry on a free vertex");
      NormalWord t =
          multiply_syllable(p.graph, g, cv.v, p.graph.group(cv.v).elem_from_string(*lp));
      if (p.contains(t)) insert(t, e);
    }
  }
}

}  // namespace detail

template <typename Sym>
void fill_bush_layers(Patch<Sym>& p, const ActionOracle& action, const Bits& x_pattern) {
  const VertexGraph& graph = p.graph;
  GenIndex gi = make_gen_index(graph);
  const size_t prefix_len = static_cast<size_t>(4 * p.radius + 16);
  const Bits x = cycle_pattern(x_pattern, prefix_len);

  std::vector<NormalWord> cells;
  for (const auto& [key, sym] : p.cells) {
    (void)sym;
    cells.push_back(parse_word(graph, key));
  }

  // Branch sets.
  for (const auto& g : cells) bush_mut(p.at_mut(g)).B = branch_set(graph, g);

  // D entries: seeded by branch edges, closed along both endpoints.
  detail::close_forward<Sym, ColoredEdge>(
      p, cells,
      [&](const NormalWord& g) {
        std::vector<ColoredEdge> out;
        const auto& s = bush_part(p.at(g));
        for (const auto& [u, v] : graph.edges)
          if (s.B.count(u) && s.B.count(v))
            out.push_back(make_colored_edge({u, opposite(s.rho.at(u).col)},
                                            {v, opposite(s.rho.at(v).col)}));
        return out;
      },
      [](const ColoredEdge& e) {
        return std::vector<ColoredVertex>{e.first, e.second};
      },
      [](Sym& s) -> std::set<ColoredEdge>& { return bush_mut(s).D; });

  // I entries: seeded by branch membership, closed along their vertex.
  using IEntry = std::pair<ColoredVertex, std::set<int>>;
  detail::close_forward<Sym, IEntry>(
      p, cells,
      [&](const NormalWord& g) {
        std::vector<IEntry> out;
        const auto& s = bush_part(p.at(g));
        for (int u : s.B) out.push_back({{u, opposite(s.rho.at(u).col)}, s.B});
        return out;
      },
      [](const IEntry& e) {
        return std::vector<ColoredVertex>{e.first};
      },
      [](Sym& s) -> std::set<IEntry>& { return bush_mut(s).I; });

  // L letters: one grid per root and branch edge.
  for (const auto& root : cells) {
    const std::set<int>& B = bush_part(p.at(root)).B;
    auto y = y_columns(graph, gi, action, x, root);
    for (const auto& [u, v] : graph.edges) {
      if (!B.count(u) || !B.count(v)) continue;
      auto key = std::make_pair(std::pair{u, v}, B);
      NormalWord hu = root;
      Color eu = opposite(path_part(p.at(root)).at(u).col);
      for (int n = 0; p.contains(hu); ++n) {
        NormalWord hv = hu;
        Color ev = opposite(path_part(p.at(hu)).at(v).col);
        for (int m = 0; p.contains(hv); ++m) {
          if (n + m >= 1) {
            auto& L = bush_mut(p.at_mut(hv)).L;
            const OmegaSymbol& val = y.at(static_cast<size_t>(n + m - 1));
            auto it = L.find(key);
            if (it != L.end()) {
              if (!(it->second == val))
                throw std::runtime_error("letter layer written twice with different letters at " +
                                         canonical_key(graph, hv));
            } else {
              L.emplace(key, val);
            }
          }
          hv = gamma_step(p, hv, v, ev);
        }
        hu = gamma_step(p, hu, u, eu);
      }
    }
  }
}

inline Patch<BushSymbol> bush_witness(const VertexGraph& graph, int radius,
                                      const ActionOracle& action, const Bits& x_pattern) {
  if (!is_atomic(graph))
    throw std::runtime_error("bush witnesses need an atomic vertex graph");
  Patch<PathSymbol> rho = path_witness(graph, radius);
  Patch<BushSymbol> p;
  p.graph = graph;
  p.radius = radius;
  for (const auto& [key, sym] : rho.cells) {
    BushSymbol b;
    b.rho = sym;
    p.cells.emplace(key, std::move(b));
  }
  fill_bush_layers(p, action, x_pattern);
  return p;
}

// ----- compute witness ---------------------------------------------------------------

// Lexicographically least graph edge inside a branch set.
inline std::pair<int, int> least_branch_edge(const VertexGraph& graph, const std::set<int>& B) {
  for (const auto& [u, v] : graph.edges)
    if (B.count(u) && B.count(v)) return {u, v};
  throw std::runtime_error("branch set contains no edge");
}

inline Patch<ComputeSymbol> compute_witness(const VertexGraph& graph, int radius,
                                            const ActionOracle& action, const Bits& x_pattern,
                                            const TuringMachine& machine) {
  if (!is_atomic(graph))
    throw std::runtime_error("compute witnesses need an atomic vertex graph");
  machine.validate();
  GenIndex gi = make_gen_index(graph);
  for (const auto& s : all_omega_tape_strings(gi))
    if (std::find(machine.alphabet.begin(), machine.alphabet.end(), s) == machine.alphabet.end())
      throw std::runtime_error("machine alphabet must contain every tape column, missing " + s);

  Patch<PathSymbol> rho = path_witness(graph, radius);
  Patch<ComputeSymbol> p;
  p.graph = graph;
  p.radius = radius;
  p.tileset = compile_tm_to_tiles(machine);
  for (const auto& [key, sym] : rho.cells) {
    ComputeSymbol c;
    c.bush.rho = sym;
    p.cells.emplace(key, std::move(c));
  }
  fill_bush_layers(p, action, x_pattern);

  const size_t prefix_len = static_cast<size_t>(4 * radius + 16);
  const Bits x = cycle_pattern(x_pattern, prefix_len);
  std::vector<NormalWord> cells;
  for (const auto& [key, sym] : p.cells) {
    (void)sym;
    cells.push_back(parse_word(graph, key));
  }

  // P entries: every root marks its least branch edge, closed forward.
  detail::close_forward<ComputeSymbol, ColoredEdge>(
      p, cells,
      [&](const NormalWord& g) {
        const auto& s = p.at(g);
        auto [u, v] = least_branch_edge(graph, s.bush.B);
        return std::vector<ColoredEdge>{make_colored_edge(
            {u, opposite(s.bush.rho.at(u).col)}, {v, opposite(s.bush.rho.at(v).col)})};
      },
      [](const ColoredEdge& e) {
        return std::vector<ColoredVertex>{e.first, e.second};
      },
      [](ComputeSymbol& s) -> std::set<ColoredEdge>& { return s.P; });

  // T tiles: one quarter plane per root.
  const WangTileset& ts = *p.tileset;
  auto find_wall = [&](const std::string& south) {
    for (const auto& t : ts.tiles)
      if (t.s == south && t.w == "x" && t.n == "wall") return t.id;
    throw std::runtime_error("tileset lacks a wall tile over '" + south + "'");
  };
  const int wall_start = find_wall("wall0");
  const int wall_rest = find_wall("wall");

  for (const auto& root : cells) {
    const ComputeSymbol& rs = p.at(root);
    auto [u, v] = least_branch_edge(graph, rs.bush.B);
    ColoredEdge ce = make_colored_edge({u, opposite(rs.bush.rho.at(u).col)},
                                       {v, opposite(rs.bush.rho.at(v).col)});

    // Extent of the quadrant along the u axis.
    std::vector<NormalWord> axis;
    NormalWord hu = root;
    Color eu = opposite(rs.bush.rho.at(u).col);
    while (p.contains(hu)) {
      axis.push_back(hu);
      hu = gamma_step(p, hu, u, eu);
    }
    const int max_n = static_cast<int>(axis.size()) - 1;

    TileGrid grid;
    if (max_n == 0) {
      // No room for an input row: the seed plus a bare wall column.
      grid[{0, 0}] = ts.seed;
      NormalWord hv = root;
      Color ev = opposite(path_part(p.at(root)).at(v).col);
      for (int m = 0; p.contains(hv); ++m) {
        if (m >= 1) grid[{0, m}] = m == 1 ? wall_start : wall_rest;
        hv = gamma_step(p, hv, v, ev);
      }
    } else {
      auto y = y_columns(graph, gi, action, x, root);
      std::vector<std::string> input;
      for (int n = 0; n < max_n; ++n)
        input.push_back(omega_to_tape_string(y.at(static_cast<size_t>(n))));
      int max_m = 0;
      for (const auto& h : axis) {
        NormalWord hv = h;
        Color ev = opposite(path_part(p.at(h)).at(v).col);
        int m = 0;
        while (p.contains(hv)) {
          hv = gamma_step(p, hv, v, ev);
          ++m;
        }
        max_m = std::max(max_m, m - 1);
      }
      grid = render_computation(ts, machine, input, max_n + 1, max_m + 1);
    }

    // Copy the in-patch part of the rectangle onto the T layer.
    for (int n = 0; n < static_cast<int>(axis.size()); ++n) {
      NormalWord hv = axis[static_cast<size_t>(n)];
      Color ev = opposite(path_part(p.at(hv)).at(v).col);
      for (int m = 0; p.contains(hv); ++m) {
        auto it = grid.find({n, m});
        if (it == grid.end())
          throw std::runtime_error("rendered rectangle misses a quadrant cell");
        auto& T = p.at_mut(hv).T;
        auto [pos, fresh] = T.emplace(ce, it->second);
        if (!fresh && pos->second != it->second)
          throw std::runtime_error("tile layer written twice with different tiles at " +
                                   canonical_key(graph, hv));
        hv = gamma_step(p, hv, v, ev);
      }
    }
  }
  return p;
}

// ----- readers -------------------------------------------------------------------------

// Reads the letters of one branch edge of the bush at the identity, walking
// n = 1..depth steps in the given direction and extracting the identity
// column of each letter.
template <typename Sym>
Bits read_edge_sequence(const Patch<Sym>& p, int direction,
                        std::optional<std::pair<int, int>> edge, int depth) {
  NormalWord id;
  if (!p.contains(id)) throw std::runtime_error("patch has no cell at the identity");
  const BushSymbol& s = bush_part(p.at(id));
  std::pair<int, int> e;
  if (edge) {
    e = {std::min(edge->first, edge->second), std::max(edge->first, edge->second)};
    if (e.first != direction && e.second != direction)
      throw std::runtime_error("edge must contain the reading direction");
    if (!p.graph.adjacent(e.first, e.second)) throw std::runtime_error("edge is not a graph edge");
  } else {
    bool found = false;
    for (const auto& [u, v] : p.graph.edges) {
      if ((u == direction || v == direction) && s.B.count(u) && s.B.count(v)) {
        e = {u, v};
        found = true;
        break;
      }
    }
    if (!found)
      throw std::runtime_error("no branch edge at the identity contains the reading direction");
  }
  auto key = std::make_pair(e, s.B);
  Bits out;
  NormalWord h = id;
  Color exponent = opposite(path_part(p.at(id)).at(direction).col);
  for (int n = 0; n < depth; ++n) {
    h = gamma_step(p, h, direction, exponent);
    if (!p.contains(h))
      throw std::runtime_error("path exits the patch after " + std::to_string(n) + " letters");
    const auto& L = bush_part(p.at(h)).L;
    auto it = L.find(key);
    if (it == L.end())
      throw std::runtime_error("letter missing at " + canonical_key(p.graph, h));
    out.push_back(it->second.at(0));
  }
  return out;
}

// The tape sequence of a compute patch: letters of the marked edge at the
// identity, read along both of its directions, which must agree.
inline Bits beta(const Patch<ComputeSymbol>& p, int depth) {
  NormalWord id;
  if (!p.contains(id)) throw std::runtime_error("patch has no cell at the identity");
  auto e = marked_edge_at(p, id);
  if (!e) throw std::runtime_error("identity cell has no unique marked edge");
  std::pair<int, int> edge{e->first.v, e->second.v};
  Bits a = read_edge_sequence(p, edge.first, edge, depth);
  Bits b = read_edge_sequence(p, edge.second, edge, depth);
  if (a != b) throw std::runtime_error("direction disagreement along the marked edge");
  return a;
}

}  // namespace selfsim
