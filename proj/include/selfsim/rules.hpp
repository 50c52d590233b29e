#pragma once
// Local rule systems for the path, bush and compute subshifts, plus the
// patch checker. Every rule carries a nominal window of relative offsets;
// a rule instance is evaluated at a cell only if every window offset lands
// inside the patch, and is otherwise counted as skipped, never failed.
// Rules are instantiated per vertex / generator / pointer value so that
// windows stay small and boundary losses are minimal.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selfsim/patch.hpp"

namespace selfsim {

// ----- pointer alphabets ------------------------------------------------------

// The finite pointer alphabet K_v used by path components: both steps for
// the integers, every non-identity element for finite kinds, and all freely
// reduced words of length 1 or 2 for free groups.
inline std::vector<GroupElem> k_elements(const VertexGroup& g) {
  switch (g.kind) {
    case GroupKind::Z:
    case GroupKind::Zn:
    case GroupKind::Table:
      return g.generators();
    case GroupKind::Free: {
      std::vector<GroupElem> out = g.generators();
      const auto singles = g.generators();
      for (const auto& a : singles)
        for (const auto& b : singles) {
          GroupElem p = g.mul(a, b);
          if (p.letters.size() == 2) out.push_back(p);
        }
      return out;
    }
    case GroupKind::Abstract:
      break;
  }
  throw std::runtime_error("abstract vertex group has no pointer alphabet");
}

// ----- layer accessors ----------------------------------------------------------

inline const PathSymbol& path_part(const PathSymbol& s) { return s; }
inline const PathSymbol& path_part(const BushSymbol& s) { return s.rho; }
inline const PathSymbol& path_part(const ComputeSymbol& s) { return s.bush.rho; }

inline const BushSymbol& bush_part(const BushSymbol& s) { return s; }
inline const BushSymbol& bush_part(const ComputeSymbol& s) { return s.bush; }

// ----- rule engine ---------------------------------------------------------------

template <typename Sym>
struct Rule {
  std::string name;
  std::vector<NormalWord> window;  // relative offsets; the identity comes first
  std::function<std::optional<std::string>(const Patch<Sym>&, const NormalWord&)> eval;
};

struct Violation {
  std::string rule;
  std::string base;
  std::vector<std::string> offsets;
  std::string detail;
};

struct ViolationReport {
  std::vector<Violation> violations;
  size_t checked_count = 0;
  size_t skipped_count = 0;
  bool ok() const { return violations.empty(); }
};

inline nlohmann::ordered_json report_to_json(const ViolationReport& rep) {
  nlohmann::ordered_json out;
  out["checked"] = rep.checked_count;
  out["skipped"] = rep.skipped_count;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : rep.violations) {
    nlohmann::ordered_json vj;
    vj["rule"] = v.rule;
    vj["base"] = v.base;
    vj["offsets"] = v.offsets;
    vj["detail"] = v.detail;
    arr.push_back(std::move(vj));
  }
  out["violations"] = std::move(arr);
  return out;
}

template <typename Sym>
ViolationReport check_patch(const std::vector<Rule<Sym>>& rules, const Patch<Sym>& p) {
  ViolationReport rep;
  for (const auto& [key, unused] : p.cells) {
    (void)unused;
    NormalWord g = parse_word(p.graph, key);
    for (const auto& rule : rules) {
      bool inside = true;
      for (const auto& off : rule.window)
        if (!p.contains(multiply(p.graph, g, off))) {
          inside = false;
          break;
        }
      if (!inside) {
        ++rep.skipped_count;
        continue;
      }
      ++rep.checked_count;
      if (auto detail = rule.eval(p, g)) {
        Violation v{rule.name, key, {}, *detail};
        for (const auto& off : rule.window)
          v.offsets.push_back(canonical_key(p.graph, multiply(p.graph, g, off)));
        rep.violations.push_back(std::move(v));
      }
    }
  }
  return rep;
}

// ----- small helpers shared by the rule bodies -----------------------------------

namespace detail {

inline NormalWord offset_of(int v, const GroupElem& e) {
  NormalWord w;
  w.syllables.push_back(Syllable{v, e});
  return w;
}

inline std::string cv_text(const ColoredVertex& cv) {
  return "(" + std::to_string(cv.v) + "," + color_to_string(cv.c) + ")";
}

inline std::string ce_text(const ColoredEdge& e) {
  return cv_text(e.first) + "-" + cv_text(e.second);
}

// Left pointer of a component under an entry color; two-color vertices have
// no pointer for color b, which the caller reports as a violation.
inline const std::string* left_pointer(const PathComponent& c, Color col) {
  if (c.colored_left && col == Color::B) return nullptr;
  return &c.left(col);
}

}  // namespace detail

// ----- path rules ------------------------------------------------------------------

// Rules, checked at every cell g (windows in parentheses):
//   path-1 (g, gk):   l(g) = k        implies r(gk) = k^-1          [one-pointer v]
//   path-2 (g, gk):   r(g) = k        implies l(gk) = k^-1          [one-pointer v]
//   path-3 (g, gk):   lr(g) = k       implies col(gk) = r, r(gk) = k^-1
//   path-4 (g, gk):   lc(g) = k       implies col(gk) = c, r(gk) = k^-1
//   path-5 (g, gk):   r(g) = k        implies left(gk, col(g)) = k^-1
//   path-6 (g, ga):   the component at u is constant along adjacent moves a at v
template <typename Sym>
std::vector<Rule<Sym>> make_path_rules(const VertexGraph& graph) {
  std::vector<Rule<Sym>> rules;
  NormalWord eps;

  for (int v : graph.ids) {
    const VertexGroup& gr = graph.group(v);
    const bool two = !gr.amenable();
    for (const auto& k : k_elements(gr)) {
      const std::string kt = gr.elem_to_string(k);
      const std::string it = gr.elem_to_string(gr.inv(k));
      const NormalWord off = detail::offset_of(v, k);
      const std::string tag = "[v=" + std::to_string(v) + ",k=" + kt + "]";
      if (!two) {
        rules.push_back({"path-1" + tag,
                         {eps, off},
                         [v, kt, it, off](const Patch<Sym>& p, const NormalWord& g)
                             -> std::optional<std::string> {
                           if (path_part(p.at(g)).at(v).l != kt) return std::nullopt;
                           const auto& d = path_part(p.at(multiply(p.graph, g, off))).at(v);
                           if (d.r != it)
                             return "left step " + kt + " not answered by right pointer " + it +
                                    " (found " + d.r + ")";
                           return std::nullopt;
                         }});
        rules.push_back({"path-2" + tag,
                         {eps, off},
                         [v, kt, it, off](const Patch<Sym>& p, const NormalWord& g)
                             -> std::optional<std::string> {
                           if (path_part(p.at(g)).at(v).r != kt) return std::nullopt;
                           const auto& d = path_part(p.at(multiply(p.graph, g, off))).at(v);
                           if (d.l != it)
                             return "right step " + kt + " not answered by left pointer " + it +
                                    " (found " + d.l + ")";
                           return std::nullopt;
                         }});
      } else {
        rules.push_back({"path-3" + tag,
                         {eps, off},
                         [v, kt, it, off](const Patch<Sym>& p, const NormalWord& g)
                             -> std::optional<std::string> {
                           if (path_part(p.at(g)).at(v).lr != kt) return std::nullopt;
                           const auto& d = path_part(p.at(multiply(p.graph, g, off))).at(v);
                           if (d.col != Color::R) return "target of an r-colored left step is not r-colored";
                           if (d.r != it)
                             return "r-colored left step " + kt + " not answered by " + it +
                                    " (found " + d.r + ")";
                           return std::nullopt;
                         }});
        rules.push_back({"path-4" + tag,
                         {eps, off},
                         [v, kt, it, off](const Patch<Sym>& p, const NormalWord& g)
                             -> std::optional<std::string> {
                           if (path_part(p.at(g)).at(v).lc != kt) return std::nullopt;
                           const auto& d = path_part(p.at(multiply(p.graph, g, off))).at(v);
                           if (d.col != Color::C) return "target of a c-colored left step is not c-colored";
                           if (d.r != it)
                             return "c-colored left step " + kt + " not answered by " + it +
                                    " (found " + d.r + ")";
                           return std::nullopt;
                         }});
        rules.push_back({"path-5" + tag,
                         {eps, off},
                         [v, kt, it, off](const Patch<Sym>& p, const NormalWord& g)
                             -> std::optional<std::string> {
                           const auto& c = path_part(p.at(g)).at(v);
                           if (c.r != kt) return std::nullopt;
                           const auto& d = path_part(p.at(multiply(p.graph, g, off))).at(v);
                           if (d.left(c.col) != it)
                             return "right step " + kt + " not answered by the " +
                                    color_to_string(c.col) + "-colored left pointer " + it +
                                    " (found " + d.left(c.col) + ")";
                           return std::nullopt;
                         }});
      }
    }
  }

  for (const auto& [a, b] : graph.edges) {
    for (const auto& [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      for (const auto& gen : graph.group(v).generators()) {
        const NormalWord off = detail::offset_of(v, gen);
        const std::string tag = "[u=" + std::to_string(u) + ",v=" + std::to_string(v) +
                                ",a=" + graph.group(v).elem_to_string(gen) + "]";
        rules.push_back({"path-6" + tag,
                         {eps, off},
                         [u, off](const Patch<Sym>& p, const NormalWord& g)
                             -> std::optional<std::string> {
                           const auto& here = path_part(p.at(g)).at(u);
                           const auto& there = path_part(p.at(multiply(p.graph, g, off))).at(u);
                           if (here != there)
                             return "component at vertex " + std::to_string(u) +
                                    " changes along an adjacent move";
                           return std::nullopt;
                         }});
      }
    }
  }
  return rules;
}

// ----- bush rules -----------------------------------------------------------------

// Rules, checked at every cell g on top of the path rules:
//   bush-2 (g):           |B(g)| >= 2 and B(g) induces a connected subgraph
//   bush-3 (g, ga):       B(ga), B(g) share a vertex adjacent to the move vertex
//   bush-4 (g):           adjacent B-vertices put a root-opposite edge in D(g)
//   bush-5 (g, gk):       D entries follow their colored left pointers
//   bush-6 (g):           every B-vertex puts its incidence entry in I(g)
//   bush-7 (g, gk):       I entries follow their colored left pointers
//   bush-8 (g, gku, gkv): around a D edge, the two forward cells agree on every
//                         L key of that edge (blank agrees only with blank)
//   bush-9 (g, ga):       I entries at g and at an adjacent ga synchronize the
//                         letters of their L layers (when both are written)
template <typename Sym>
std::vector<Rule<Sym>> make_bush_rules(const VertexGraph& graph) {
  std::vector<Rule<Sym>> rules = make_path_rules<Sym>(graph);
  NormalWord eps;
  GenIndex gi = make_gen_index(graph);

  rules.push_back({"bush-2",
                   {eps},
                   [](const Patch<Sym>& p, const NormalWord& g) -> std::optional<std::string> {
                     const auto& B = bush_part(p.at(g)).B;
                     if (B.size() < 2) return "branch set has fewer than two vertices";
                     if (component_count(p.graph, B) != 1)
                       return "branch set induces a disconnected subgraph";
                     return std::nullopt;
                   }});

  for (int v : graph.ids) {
    for (const auto& gen : graph.group(v).generators()) {
      const NormalWord off = detail::offset_of(v, gen);
      const std::string tag =
          "[v=" + std::to_string(v) + ",a=" + graph.group(v).elem_to_string(gen) + "]";
      rules.push_back({"bush-3" + tag,
                       {eps, off},
                       [v, off](const Patch<Sym>& p, const NormalWord& g)
                           -> std::optional<std::string> {
                         const auto& here = bush_part(p.at(g)).B;
                         const auto& there = bush_part(p.at(multiply(p.graph, g, off))).B;
                         for (int u : p.graph.link(v))
                           if (here.count(u) && there.count(u)) return std::nullopt;
                         return "branch sets share no vertex adjacent to the move vertex";
                       }});
    }
  }

  rules.push_back(
      {"bush-4",
       {eps},
       [](const Patch<Sym>& p, const NormalWord& g) -> std::optional<std::string> {
         const auto& s = bush_part(p.at(g));
         for (const auto& [u, v] : p.graph.edges) {
           if (!s.B.count(u) || !s.B.count(v)) continue;
           ColoredEdge want = make_colored_edge({u, opposite(path_part(p.at(g)).at(u).col)},
                                                {v, opposite(path_part(p.at(g)).at(v).col)});
           if (!s.D.count(want))
             return "branch edge " + detail::ce_text(want) + " missing from the D layer";
         }
         return std::nullopt;
       }});

  // D and I entries march along the colored left pointer of their vertex.
  for (int v : graph.ids) {
    const VertexGroup& gr = graph.group(v);
    for (const auto& k : k_elements(gr)) {
      const std::string kt = gr.elem_to_string(k);
      const NormalWord off = detail::offset_of(v, k);
      const std::string tag = "[v=" + std::to_string(v) + ",k=" + kt + "]";
      rules.push_back(
          {"bush-5" + tag,
           {eps, off},
           [v, kt, off](const Patch<Sym>& p, const NormalWord& g) -> std::optional<std::string> {
             const auto& s = bush_part(p.at(g));
             for (const auto& e : s.D) {
               for (const auto& end : {e.first, e.second}) {
                 if (end.v != v) continue;
                 const auto* lp = detail::left_pointer(path_part(p.at(g)).at(v), end.c);
                 if (!lp) return "D entry colors a two-pointer vertex with b";
                 if (*lp != kt) continue;
                 if (!bush_part(p.at(multiply(p.graph, g, off))).D.count(e))
                   return "D entry " + detail::ce_text(e) + " not carried along its left pointer";
               }
             }
             return std::nullopt;
           }});
      rules.push_back(
          {"bush-7" + tag,
           {eps, off},
           [v, kt, off](const Patch<Sym>& p, const NormalWord& g) -> std::optional<std::string> {
             const auto& s = bush_part(p.at(g));
             for (const auto& entry : s.I) {
               if (entry.first.v != v) continue;
               const auto* lp = detail::left_pointer(path_part(p.at(g)).at(v), entry.first.c);
               if (!lp) return "I entry colors a two-pointer vertex with b";
               if (*lp != kt) continue;
               if (!bush_part(p.at(multiply(p.graph, g, off))).I.count(entry))
                 return "I entry at " + detail::cv_text(entry.first) +
                        " not carried along its left pointer";
             }
             return std::nullopt;
           }});
    }
  }

  rules.push_back({"bush-6",
                   {eps},
                   [](const Patch<Sym>& p, const NormalWord& g) -> std::optional<std::string> {
                     const auto& s = bush_part(p.at(g));
                     for (int u : s.B) {
                       ColoredVertex cv{u, opposite(path_part(p.at(g)).at(u).col)};
                       if (!s.I.count({cv, s.B}))
                         return "incidence entry for " + detail::cv_text(cv) + " missing";
                     }
                     return std::nullopt;
                   }});

  for (const auto& [u, v] : graph.edges) {
    for (const auto& ku : k_elements(graph.group(u))) {
      for (const auto& kv : k_elements(graph.group(v))) {
        const std::string kut = graph.group(u).elem_to_string(ku);
        const std::string kvt = graph.group(v).elem_to_string(kv);
        const NormalWord off_u = detail::offset_of(u, ku);
        const NormalWord off_v = detail::offset_of(v, kv);
        const std::string tag = "[u=" + std::to_string(u) + ",ku=" + kut +
                                ",v=" + std::to_string(v) + ",kv=" + kvt + "]";
        int uu = u, vv = v;
        rules.push_back(
            {"bush-8" + tag,
             {eps, off_u, off_v},
             [uu, vv, kut, kvt, off_u, off_v](const Patch<Sym>& p, const NormalWord& g)
                 -> std::optional<std::string> {
               const auto& s = bush_part(p.at(g));
               for (const auto& e : s.D) {
                 if (e.first.v != uu || e.second.v != vv) continue;
                 const auto* lu = detail::left_pointer(path_part(p.at(g)).at(uu), e.first.c);
                 const auto* lv = detail::left_pointer(path_part(p.at(g)).at(vv), e.second.c);
                 if (!lu || !lv) return "D entry colors a two-pointer vertex with b";
                 if (*lu != kut || *lv != kvt) continue;
                 const auto& L1 = bush_part(p.at(multiply(p.graph, g, off_u))).L;
                 const auto& L2 = bush_part(p.at(multiply(p.graph, g, off_v))).L;
                 std::set<std::set<int>> keys;
                 for (const auto& [key, val] : L1)
                   if (key.first == std::pair{uu, vv}) keys.insert(key.second);
                 for (const auto& [key, val] : L2)
                   if (key.first == std::pair{uu, vv}) keys.insert(key.second);
                 for (const auto& C : keys) {
                   auto k = std::make_pair(std::pair{uu, vv}, C);
                   auto i1 = L1.find(k), i2 = L2.find(k);
                   const bool b1 = i1 != L1.end(), b2 = i2 != L2.end();
                   if (b1 != b2) return "diagonal neighbors disagree on whether an L key is written";
                   if (b1 && !(i1->second == i2->second))
                     return "diagonal neighbors disagree on an L letter";
                 }
               }
               return std::nullopt;
             }});
      }
    }
  }

  for (int up : graph.ids) {
    for (const auto& a : graph.group(up).generators()) {
      const NormalWord off = detail::offset_of(up, a);
      const int col_inv = gi.position.at(
          std::to_string(up) + ":" + graph.group(up).elem_to_string(graph.group(up).inv(a)));
      const std::string tag =
          "[v=" + std::to_string(up) + ",a=" + graph.group(up).elem_to_string(a) + "]";
      rules.push_back(
          {"bush-9" + tag,
           {eps, off},
           [up, off, col_inv](const Patch<Sym>& p, const NormalWord& g)
               -> std::optional<std::string> {
             const auto& here = bush_part(p.at(g));
             const auto& there = bush_part(p.at(multiply(p.graph, g, off)));
             for (int u : p.graph.link(up)) {
               for (const auto& [cv1, C1] : here.I) {
                 if (cv1.v != u) continue;
                 for (const auto& [cv2, C2] : there.I) {
                   if (!(cv2 == cv1)) continue;
                   for (int v1 : C1) {
                     if (!p.graph.adjacent(u, v1)) continue;
                     auto i1 = here.L.find({{std::min(u, v1), std::max(u, v1)}, C1});
                     if (i1 == here.L.end()) continue;
                     for (int v2 : C2) {
                       if (!p.graph.adjacent(u, v2)) continue;
                       auto i2 = there.L.find({{std::min(u, v2), std::max(u, v2)}, C2});
                       if (i2 == there.L.end()) continue;
                       if (i2->second.at(0) != i1->second.at(col_inv))
                         return "adjacent incidence entries at " + detail::cv_text(cv1) +
                                " carry desynchronized letters";
                     }
                   }
                 }
               }
             }
             return std::nullopt;
           }});
    }
  }
  return rules;
}

// ----- compute rules ----------------------------------------------------------------

// Rules, checked at every cell g on top of the bush rules:
//   compute-2 (g):        exactly one branch edge is marked root-opposite in P(g)
//   compute-3 (g, gk):    P entries follow their colored left pointers
//   compute-4 (g):        the marked edge carries the seed tile at its root
//   compute-5 (g):        where a marked plane meets an incidence entry of its
//                         own key, a tape tile equals the stored L letter and
//                         a blank tile forbids one (walls and interior
//                         computation tiles are unconstrained here; they are
//                         tied to the tape row by compute-4 and compute-6)
//   compute-6 (g, 4 nbrs): tiles along a marked plane match as Wang tiles
inline std::optional<ColoredEdge> marked_edge_at(const Patch<ComputeSymbol>& p,
                                                 const NormalWord& g, int* count = nullptr) {
  const ComputeSymbol& s = p.at(g);
  std::optional<ColoredEdge> found;
  int n = 0;
  for (const auto& [u, v] : p.graph.edges) {
    if (!s.bush.B.count(u) || !s.bush.B.count(v)) continue;
    ColoredEdge want = make_colored_edge({u, opposite(s.bush.rho.at(u).col)},
                                         {v, opposite(s.bush.rho.at(v).col)});
    if (s.P.count(want)) {
      ++n;
      found = want;
    }
  }
  if (count) *count = n;
  return n == 1 ? found : std::nullopt;
}

inline std::vector<Rule<ComputeSymbol>> make_compute_rules(const VertexGraph& graph) {
  std::vector<Rule<ComputeSymbol>> rules = make_bush_rules<ComputeSymbol>(graph);
  NormalWord eps;

  rules.push_back({"compute-2",
                   {eps},
                   [](const Patch<ComputeSymbol>& p, const NormalWord& g)
                       -> std::optional<std::string> {
                     int n = 0;
                     marked_edge_at(p, g, &n);
                     if (n != 1)
                       return "expected exactly one root-opposite marked branch edge, found " +
                              std::to_string(n);
                     return std::nullopt;
                   }});

  for (int v : graph.ids) {
    const VertexGroup& gr = graph.group(v);
    for (const auto& k : k_elements(gr)) {
      const std::string kt = gr.elem_to_string(k);
      const NormalWord off = detail::offset_of(v, k);
      const std::string tag = "[v=" + std::to_string(v) + ",k=" + kt + "]";
      rules.push_back(
          {"compute-3" + tag,
           {eps, off},
           [v, kt, off](const Patch<ComputeSymbol>& p, const NormalWord& g)
               -> std::optional<std::string> {
             const ComputeSymbol& s = p.at(g);
             for (const auto& e : s.P) {
               for (const auto& end : {e.first, e.second}) {
                 if (end.v != v) continue;
                 const auto* lp = detail::left_pointer(s.bush.rho.at(v), end.c);
                 if (!lp) return "P entry colors a two-pointer vertex with b";
                 if (*lp != kt) continue;
                 if (!p.at(multiply(p.graph, g, off)).P.count(e))
                   return "P entry " + detail::ce_text(e) + " not carried along its left pointer";
               }
             }
             return std::nullopt;
           }});
    }
  }

  rules.push_back({"compute-4",
                   {eps},
                   [](const Patch<ComputeSymbol>& p, const NormalWord& g)
                       -> std::optional<std::string> {
                     auto e = marked_edge_at(p, g);
                     if (!e) return std::nullopt;  // compute-2 reports the miscount
                     const ComputeSymbol& s = p.at(g);
                     auto it = s.T.find(*e);
                     if (it == s.T.end() || it->second != p.tileset->seed)
                       return "marked edge " + detail::ce_text(*e) +
                              " does not carry the seed tile at its root";
                     return std::nullopt;
                   }});

  rules.push_back(
      {"compute-5",
       {eps},
       [](const Patch<ComputeSymbol>& p, const NormalWord& g) -> std::optional<std::string> {
         const ComputeSymbol& s = p.at(g);
         const WangTileset& ts = *p.tileset;
         for (const auto& e : s.P) {
           const int u = e.first.v, v = e.second.v;
           auto it = s.T.find(e);
           const int tile = it == s.T.end() ? ts.blank : it->second;
           if (tile == ts.seed) continue;
           for (const auto& end : {e.first, e.second}) {
             for (const auto& [cv, C] : s.bush.I) {
               if (!(cv == end)) continue;
               if (!C.count(u) || !C.count(v)) continue;
               auto lit = s.bush.L.find({{u, v}, C});
               if (tile == ts.blank) {
                 if (lit != s.bush.L.end())
                   return "letter written where the marked plane carries a blank tile";
                 continue;
               }
               auto sym = ts.omega_symbol_of(tile);
               if (!sym) continue;  // wall or interior computation tile
               if (lit == s.bush.L.end())
                 return "marked plane carries tape tile " + *sym + " but no letter is written";
               if (omega_to_tape_string(lit->second) != *sym)
                 return "marked plane tile " + *sym + " disagrees with the written letter " +
                        omega_to_tape_string(lit->second);
             }
           }
         }
         return std::nullopt;
       }});

  for (const auto& [u, v] : graph.edges) {
    for (const auto& ku : k_elements(graph.group(u))) {
      for (const auto& kv : k_elements(graph.group(v))) {
        const std::string kut = graph.group(u).elem_to_string(ku);
        const std::string kvt = graph.group(v).elem_to_string(kv);
        const NormalWord fwd_u = detail::offset_of(u, ku);
        const NormalWord fwd_v = detail::offset_of(v, kv);
        const NormalWord back_u = detail::offset_of(u, graph.group(u).inv(ku));
        const NormalWord back_v = detail::offset_of(v, graph.group(v).inv(kv));
        const std::string tag = "[u=" + std::to_string(u) + ",ku=" + kut +
                                ",v=" + std::to_string(v) + ",kv=" + kvt + "]";
        int uu = u, vv = v;
        rules.push_back(
            {"compute-6" + tag,
             {eps, fwd_u, fwd_v, back_u, back_v},
             [uu, vv, kut, kvt, fwd_u, fwd_v, back_u, back_v](const Patch<ComputeSymbol>& p,
                                                              const NormalWord& g)
                 -> std::optional<std::string> {
               const ComputeSymbol& s = p.at(g);
               const WangTileset& ts = *p.tileset;
               auto tile_at = [&](const NormalWord& h, const ColoredEdge& e) {
                 const auto& T = p.at(h).T;
                 auto it = T.find(e);
                 return ts.tile(it == T.end() ? ts.blank : it->second);
               };
               for (const auto& e : s.P) {
                 if (e.first.v != uu || e.second.v != vv) continue;
                 const auto* lu = detail::left_pointer(s.bush.rho.at(uu), e.first.c);
                 const auto* lv = detail::left_pointer(s.bush.rho.at(vv), e.second.c);
                 if (!lu || !lv) return "P entry colors a two-pointer vertex with b";
                 if (*lu != kut || *lv != kvt) continue;
                 const WangTile c = tile_at(g, e);
                 const WangTile fu = tile_at(multiply(p.graph, g, fwd_u), e);
                 const WangTile fv = tile_at(multiply(p.graph, g, fwd_v), e);
                 const WangTile bu = tile_at(multiply(p.graph, g, back_u), e);
                 const WangTile bv = tile_at(multiply(p.graph, g, back_v), e);
                 if (c.e != fu.w)
                   return "east edge '" + c.e + "' does not meet west edge '" + fu.w + "'";
                 if (c.n != fv.s)
                   return "north edge '" + c.n + "' does not meet south edge '" + fv.s + "'";
                 if (c.w != bu.e)
                   return "west edge '" + c.w + "' does not meet east edge '" + bu.e + "'";
                 if (c.s != bv.n)
                   return "south edge '" + c.s + "' does not meet north edge '" + bv.n + "'";
               }
               return std::nullopt;
             }});
      }
    }
  }
  return rules;
}

// ----- alphabet validation ------------------------------------------------------------

namespace detail {

inline void validate_component(const VertexGraph& g, int v, const PathComponent& c,
                               const std::set<std::string>& k_texts) {
  const bool two = !g.group(v).amenable();
  if (c.colored_left != two)
    throw std::runtime_error("vertex " + std::to_string(v) +
                             (two ? " needs two left pointers" : " needs one left pointer"));
  if (two) {
    if (c.col == Color::B)
      throw std::runtime_error("two-pointer vertex " + std::to_string(v) + " cannot be b-colored");
    if (!k_texts.count(c.lr) || !k_texts.count(c.lc))
      throw std::runtime_error("left pointer outside the pointer alphabet at vertex " +
                               std::to_string(v));
  } else {
    if (c.col != Color::B)
      throw std::runtime_error("one-pointer vertex " + std::to_string(v) + " must be b-colored");
    if (!k_texts.count(c.l))
      throw std::runtime_error("left pointer outside the pointer alphabet at vertex " +
                               std::to_string(v));
  }
  if (!k_texts.count(c.r))
    throw std::runtime_error("right pointer outside the pointer alphabet at vertex " +
                             std::to_string(v));
}

inline void validate_colored_edge(const VertexGraph& g, const ColoredEdge& e) {
  if (!g.adjacent(e.first.v, e.second.v))
    throw std::runtime_error("colored edge " + ce_text(e) + " is not a graph edge");
}

}  // namespace detail

inline void validate_symbol(const VertexGraph& g,
                            const std::map<int, std::set<std::string>>& k_texts,
                            const PathSymbol& s) {
  if (static_cast<int>(s.comps.size()) != static_cast<int>(g.ids.size()))
    throw std::runtime_error("path symbol must assign every vertex exactly once");
  for (int v : g.ids) detail::validate_component(g, v, s.at(v), k_texts.at(v));
}

inline void validate_symbol(const VertexGraph& g,
                            const std::map<int, std::set<std::string>>& k_texts,
                            const BushSymbol& s) {
  validate_symbol(g, k_texts, s.rho);
  for (int v : s.B)
    if (!g.has_vertex(v))
      throw std::runtime_error("branch set mentions unknown vertex " + std::to_string(v));
  for (const auto& e : s.D) detail::validate_colored_edge(g, e);
  for (const auto& [cv, C] : s.I) {
    if (!g.has_vertex(cv.v))
      throw std::runtime_error("incidence entry mentions unknown vertex " + std::to_string(cv.v));
    for (int v : C)
      if (!g.has_vertex(v))
        throw std::runtime_error("incidence set mentions unknown vertex " + std::to_string(v));
  }
  for (const auto& [key, val] : s.L) {
    (void)val;
    if (!g.adjacent(key.first.first, key.first.second))
      throw std::runtime_error("L key edge is not a graph edge");
    for (int v : key.second)
      if (!g.has_vertex(v))
        throw std::runtime_error("L key set mentions unknown vertex " + std::to_string(v));
  }
}

inline void validate_symbol(const VertexGraph& g,
                            const std::map<int, std::set<std::string>>& k_texts,
                            const ComputeSymbol& s) {
  validate_symbol(g, k_texts, s.bush);
  for (const auto& e : s.P) detail::validate_colored_edge(g, e);
  for (const auto& [e, tile] : s.T) {
    (void)tile;
    detail::validate_colored_edge(g, e);
  }
}

template <typename Sym>
void validate_patch(const Patch<Sym>& p) {
  std::map<int, std::set<std::string>> k_texts;
  for (int v : p.graph.ids) {
    auto& set = k_texts[v];
    for (const auto& k : k_elements(p.graph.group(v)))
      set.insert(p.graph.group(v).elem_to_string(k));
  }
  GenIndex gi = make_gen_index(p.graph);
  for (const auto& [key, sym] : p.cells) {
    (void)key;
    validate_symbol(p.graph, k_texts, sym);
  }
  if constexpr (std::is_same_v<Sym, ComputeSymbol>) {
    if (!p.tileset) throw std::runtime_error("compute patch lacks a tileset");
    for (const auto& [key, sym] : p.cells) {
      (void)key;
      for (const auto& [e, tile] : sym.T) {
        (void)e;
        p.tileset->tile(tile);
      }
    }
  }
  for (const auto& [key, sym] : p.cells) {
    (void)key;
    const BushSymbol* b = nullptr;
    if constexpr (std::is_same_v<Sym, BushSymbol>) b = &sym;
    if constexpr (std::is_same_v<Sym, ComputeSymbol>) b = &sym.bush;
    if (b)
      for (const auto& [lkey, om] : b->L) {
        (void)lkey;
        if (om.bits.size() != gi.columns())
          throw std::runtime_error("L letter has the wrong number of columns");
      }
  }
}

}  // namespace selfsim
