#pragma once
// Disconnecting-clique search: brute-force enumeration (the test oracle),
// a polynomial clique-separator search over a minimal elimination ordering,
// atomicity, and the classification verdicts.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selfsim/graph.hpp"

namespace selfsim {

// All cliques C inside `restrict` with is_disconnecting(G, C), ordered by
// size then lexicographically on sorted vertex ids. The empty set and
// non-maximal cliques are enumerated on purpose: disconnection is not
// monotone under adding vertices to C.
inline std::vector<std::set<int>> find_disconnecting_cliques(const VertexGraph& g,
                                                             const std::set<int>& restrict_to,
                                                             bool first_only) {
  for (int v : restrict_to)
    if (!g.has_vertex(v))
      throw std::runtime_error("unknown vertex id " + std::to_string(v) + " in restrict set");
  std::vector<int> pool(restrict_to.begin(), restrict_to.end());
  const int n = static_cast<int>(pool.size());
  std::vector<std::set<int>> found;

  std::vector<int> pick;
  auto emit = [&](const std::set<int>& c) {
    if (is_disconnecting(g, c)) found.push_back(c);
    return first_only && !found.empty();
  };
  // Enumerate subsets of a fixed size in lexicographic order on sorted ids.
  std::function<bool(int, int, size_t)> combos = [&](int start, int remaining, size_t) -> bool {
    if (remaining == 0) {
      std::set<int> c(pick.begin(), pick.end());
      if (!g.is_clique(c)) return false;
      return emit(c);
    }
    for (int i = start; i <= n - remaining; ++i) {
      bool compatible = true;
      for (int chosen : pick)
        if (!g.adjacent(chosen, pool[i])) { compatible = false; break; }
      if (!compatible) continue;
      pick.push_back(pool[i]);
      bool done = combos(i + 1, remaining - 1, pick.size());
      pick.pop_back();
      if (done) return true;
    }
    return false;
  };
  for (int size = 0; size <= n; ++size)
    if (combos(0, size, 0)) break;
  return found;
}

namespace detail {

// LEX-M (minimal elimination ordering) fill computation. Returns the
// elimination order alpha (position -> vertex, position 1 is eliminated
// first) and the fill-augmented adjacency.
struct LexMResult {
  std::vector<int> order;
  std::set<std::pair<int, int>> filled_edges;
};

inline LexMResult lex_m(const VertexGraph& g) {
  const int n = static_cast<int>(g.ids.size());
  std::vector<int> verts = g.ids;
  std::map<int, std::vector<int>> label;  // decreasing-number lists
  std::map<int, bool> numbered;
  for (int v : verts) numbered[v] = false;

  LexMResult res;
  res.filled_edges = g.edges;
  res.order.assign(n + 1, 0);

  for (int i = n; i >= 1; --i) {
    int pick = -1;
    for (int v : verts)
      if (!numbered[v] && (pick == -1 || label[v] > label[pick] ||
                           (label[v] == label[pick] && v < pick)))
        pick = v;
    res.order[i] = pick;
    numbered[pick] = true;

    // Find unnumbered u reachable from pick through unnumbered vertices
    // whose labels are all strictly smaller than label(u). k(w) tracks the
    // lexicographically least possible "largest intermediate label" over
    // paths from pick to w; direct neighbors carry a bottom sentinel.
    std::map<int, std::vector<int>> k;
    std::map<int, bool> has_k;
    const std::vector<int> bottom;  // empty = strictly smaller than anything nonempty
    std::map<int, bool> direct;
    for (int v : verts) { has_k[v] = false; direct[v] = false; }
    for (int v : verts)
      if (!numbered[v] && g.adjacent(v, pick)) {
        k[v] = bottom;
        has_k[v] = true;
        direct[v] = true;
      }
    for (int round = 0; round < n; ++round) {
      bool changed = false;
      for (int x : verts) {
        if (numbered[x] || !has_k[x]) continue;
        for (int w : verts) {
          if (numbered[w] || w == pick || !g.adjacent(x, w)) continue;
          std::vector<int> cand = std::max(k[x], label[x]);
          if (!has_k[w] || cand < k[w]) {
            k[w] = cand;
            has_k[w] = true;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    for (int u : verts) {
      if (numbered[u] || u == pick || !has_k[u]) continue;
      if (direct[u] || k[u] < label[u]) {
        label[u].push_back(i);
        res.filled_edges.insert({std::min(u, pick), std::max(u, pick)});
      }
    }
  }
  return res;
}

}  // namespace detail

// Polynomial-path search for a disconnecting clique. Specials first
// (disconnected graph -> empty set, complete graph -> everything), then the
// minimal-elimination-ordering candidates, each verified by component count.
inline std::optional<std::set<int>> clique_separator_exists(const VertexGraph& g) {
  std::set<int> all(g.ids.begin(), g.ids.end());
  if (component_count(g, all) != 1) return std::set<int>{};
  if (g.is_complete()) return all;

  auto lex = detail::lex_m(g);
  const int n = static_cast<int>(g.ids.size());
  std::map<int, int> position;
  for (int i = 1; i <= n; ++i) position[lex.order[i]] = i;
  for (int i = 1; i <= n; ++i) {
    int v = lex.order[i];
    std::set<int> madj;
    for (int u : g.ids)
      if (u != v && position[u] > i &&
          lex.filled_edges.count({std::min(u, v), std::max(u, v)}))
        madj.insert(u);
    if (!g.is_clique(madj)) continue;
    if (is_disconnecting(g, madj)) return madj;
  }
  return std::nullopt;
}

// Atomic: no disconnecting clique made solely of amenable vertices, and
// either at least two non-amenable vertices or G is not a complete graph.
inline bool is_atomic(const VertexGraph& g) {
  for (int v : g.ids)
    if (!g.group(v).infinite())
      throw std::runtime_error("is_atomic: finite vertex group at vertex " + std::to_string(v) +
                               " is out of theorem scope");
  std::set<int> amenable;
  int non_amenable = 0;
  for (int v : g.ids) {
    if (g.group(v).amenable()) amenable.insert(v);
    else ++non_amenable;
  }
  if (!find_disconnecting_cliques(g, amenable, /*first_only=*/true).empty()) return false;
  if (non_amenable < 2 && g.is_complete()) return false;
  return true;
}

// ----- classification ----------------------------------------------------------

enum class Answer { Yes, No, OutOfTheoremScope };

struct Verdict {
  Answer self_simulable = Answer::OutOfTheoremScope;
  Answer splits_over_amenable = Answer::OutOfTheoremScope;
  std::optional<std::set<int>> witness;  // a disconnecting amenable clique
  std::string reason;                    // set when out of scope
};

inline Verdict classify(const VertexGraph& g) {
  Verdict out;
  for (int v : g.ids)
    if (!g.group(v).infinite()) {
      out.reason = "finite vertex group at vertex " + std::to_string(v);
      return out;
    }
  std::set<int> amenable;
  int non_amenable = 0;
  for (int v : g.ids) {
    if (g.group(v).amenable()) amenable.insert(v);
    else ++non_amenable;
  }
  if (g.is_complete() && non_amenable == 1) {
    out.reason = "clique with one non-amenable node";
    return out;
  }
  auto cliques = find_disconnecting_cliques(g, amenable, /*first_only=*/true);
  if (cliques.empty()) {
    out.self_simulable = Answer::Yes;
    out.splits_over_amenable = Answer::No;
  } else {
    out.self_simulable = Answer::No;
    out.splits_over_amenable = Answer::Yes;
    out.witness = cliques.front();
  }
  return out;
}

inline std::string answer_to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::OutOfTheoremScope: return "OutOfTheoremScope";
  }
  return "";
}

inline json verdict_to_json(const Verdict& v) {
  json out;
  out["self_simulable"] = answer_to_string(v.self_simulable);
  out["splits_over_amenable"] = answer_to_string(v.splits_over_amenable);
  if (v.witness) out["witness"] = std::vector<int>(v.witness->begin(), v.witness->end());
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

}  // namespace selfsim
