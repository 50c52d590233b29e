#pragma once
// Independent oracles used by the tests. Everything here is written against
// first principles (exhaustive move closures, subset enumeration, plain
// breadth-first search) rather than against the library's own algorithms, so
// the two routes can disagree when one of them is wrong.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfsim/graph.hpp"
#include "selfsim/word.hpp"

namespace oracle {

using selfsim::NormalWord;
using selfsim::Syllable;
using selfsim::VertexGraph;

inline std::string serialize(const VertexGraph& g, const std::vector<Syllable>& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += selfsim::syllable_to_string(g, s);
  }
  return out;
}

// The full closure of a syllable sequence under the three elementary moves:
// swapping adjacent syllables on adjacent vertices, merging adjacent
// syllables on the same vertex, and deleting identity syllables. Two words
// are equal in the graph product exactly when their closures intersect.
inline std::set<std::string> closure(const VertexGraph& g, const std::vector<Syllable>& start,
                                     size_t limit = 2000000) {
  std::set<std::string> seen;
  std::deque<std::vector<Syllable>> work;
  auto push = [&](const std::vector<Syllable>& w) {
    if (seen.insert(serialize(g, w)).second) {
      if (seen.size() > limit) throw std::runtime_error("closure oracle: state limit exceeded");
      work.push_back(w);
    }
  };
  push(start);
  while (!work.empty()) {
    std::vector<Syllable> w = work.front();
    work.pop_front();
    for (size_t i = 0; i < w.size(); ++i) {
      if (g.group(w[i].vertex).is_identity(w[i].elem)) {
        std::vector<Syllable> next = w;
        next.erase(next.begin() + static_cast<long>(i));
        push(next);
      }
      if (i + 1 >= w.size()) continue;
      if (w[i].vertex == w[i + 1].vertex) {
        const auto& gr = g.group(w[i].vertex);
        std::vector<Syllable> next = w;
        next[i].elem = gr.mul(w[i].elem, w[i + 1].elem);
        next.erase(next.begin() + static_cast<long>(i) + 1);
        if (gr.is_identity(next[i].elem)) next.erase(next.begin() + static_cast<long>(i));
        push(next);
      } else if (g.adjacent(w[i].vertex, w[i + 1].vertex)) {
        std::vector<Syllable> next = w;
        std::swap(next[i], next[i + 1]);
        push(next);
      }
    }
  }
  return seen;
}

// Canonical representative: the lexicographically least of the minimum-
// syllable-count members of the closure. The moves only contract, so longer
// spellings keep their unmerged ancestors in the closure and the least
// string overall would depend on the starting spelling; the shortest members
// are the reduced spellings, which every starting spelling reaches.
inline std::string canon(const VertexGraph& g, const std::vector<Syllable>& w) {
  const auto cl = closure(g, w);
  auto syllables = [](const std::string& s) {
    return s.empty() ? size_t{0}
                     : static_cast<size_t>(std::count(s.begin(), s.end(), ' ')) + 1;
  };
  size_t best = SIZE_MAX;
  for (const auto& s : cl) best = std::min(best, syllables(s));
  for (const auto& s : cl)  // set order is lexicographic
    if (syllables(s) == best) return s;
  throw std::runtime_error("closure oracle: empty closure");
}

inline std::string canon(const VertexGraph& g, const NormalWord& w) {
  return canon(g, w.syllables);
}

inline bool words_equal(const VertexGraph& g, const NormalWord& a, const NormalWord& b) {
  return canon(g, a) == canon(g, b);
}

// Tail oracle: the vertices that own the last syllable of some minimum-length
// member of the closure.
inline std::set<int> tail_set(const VertexGraph& g, const NormalWord& w) {
  std::set<int> out;
  const auto cl = closure(g, w.syllables);
  size_t best = SIZE_MAX;
  std::vector<std::vector<Syllable>> parsed;
  for (const auto& text : cl) {
    auto syls = selfsim::parse_syllables(g, text);
    best = std::min(best, syls.size());
    parsed.push_back(std::move(syls));
  }
  for (const auto& syls : parsed)
    if (syls.size() == best && !syls.empty()) out.insert(syls.back().vertex);
  return out;
}

// Every minimum-length member of the closure, reserialized; used to check
// that normal forms are constant on the whole commutation class.
inline std::vector<std::vector<Syllable>> reduced_members(const VertexGraph& g,
                                                          const NormalWord& w) {
  std::vector<std::vector<Syllable>> out;
  const auto cl = closure(g, w.syllables);
  size_t best = SIZE_MAX;
  std::vector<std::vector<Syllable>> parsed;
  for (const auto& text : cl) {
    auto syls = selfsim::parse_syllables(g, text);
    best = std::min(best, syls.size());
    parsed.push_back(std::move(syls));
  }
  for (auto& syls : parsed)
    if (syls.size() == best) out.push_back(std::move(syls));
  return out;
}

// Ball census by plain breadth-first search with closure-canonical keys.
struct BallCensus {
  std::map<std::string, int> depth;  // canonical key -> geodesic length
  size_t size() const { return depth.size(); }
};

inline BallCensus ball_census(const VertexGraph& g, int radius) {
  BallCensus out;
  std::vector<std::pair<int, selfsim::GroupElem>> gens;
  for (int v : g.ids)
    for (const auto& e : g.group(v).generators()) gens.push_back({v, e});

  std::deque<std::vector<Syllable>> frontier;
  out.depth[canon(g, std::vector<Syllable>{})] = 0;
  frontier.push_back({});
  for (int d = 1; d <= radius; ++d) {
    std::deque<std::vector<Syllable>> next;
    for (const auto& w : frontier) {
      for (const auto& [v, e] : gens) {
        std::vector<Syllable> cand = w;
        cand.push_back({v, e});
        std::string key = canon(g, cand);
        if (out.depth.count(key)) continue;
        out.depth[key] = d;
        next.push_back(cand);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// All disconnecting cliques by subset enumeration, ordered by size and then
// lexicographically; connectivity by its own breadth-first search.
inline int component_count_bfs(const VertexGraph& g, const std::set<int>& removed) {
  std::set<int> left;
  for (int v : g.ids)
    if (!removed.count(v)) left.insert(v);
  int comps = 0;
  std::set<int> seen;
  for (int v : left) {
    if (seen.count(v)) continue;
    ++comps;
    std::deque<int> work{v};
    seen.insert(v);
    while (!work.empty()) {
      int u = work.front();
      work.pop_front();
      for (int t : left)
        if (!seen.count(t) && g.adjacent(u, t)) {
          seen.insert(t);
          work.push_back(t);
        }
    }
  }
  return comps;
}

inline bool is_clique_direct(const VertexGraph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (!g.adjacent(verts[i], verts[j])) return false;
  return true;
}

inline std::vector<std::set<int>> brute_disconnecting_cliques(const VertexGraph& g,
                                                              bool first_only = false) {
  const int n = static_cast<int>(g.ids.size());
  if (n > 20) throw std::runtime_error("brute clique oracle: too many vertices");
  std::vector<std::set<int>> found;
  std::vector<int> pick;
  // Sizes ascending, subsets in lexicographic order on the sorted id list.
  auto rec = [&](auto&& self, int start, int remaining) -> bool {
    if (remaining == 0) {
      if (!is_clique_direct(g, pick)) return false;
      std::set<int> c(pick.begin(), pick.end());
      if (component_count_bfs(g, c) != 1) {
        found.push_back(c);
        if (first_only) return true;
      }
      return false;
    }
    for (int i = start; i <= n - remaining; ++i) {
      pick.push_back(g.ids[static_cast<size_t>(i)]);
      if (self(self, i + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= n; ++size)
    if (rec(rec, 0, size)) break;
  return found;
}

}  // namespace oracle
