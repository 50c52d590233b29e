#pragma once
// Cayley-ball enumeration for graph products under the standard generating
// set (union of the per-vertex generating sets), with canonical-form
// deduplication.

#include <map>
#include <string>
#include <vector>

#include "selfsim/word.hpp"

namespace selfsim {

// All generator syllables of the graph product, in canonical order
// (ascending vertex id, then element text).
inline std::vector<Syllable> product_generators(const VertexGraph& g) {
  std::vector<Syllable> out;
  for (int v : g.ids) {
    const VertexGroup& gr = g.group(v);
    std::vector<std::pair<std::string, GroupElem>> elems;
    for (const auto& e : gr.generators()) elems.emplace_back(gr.elem_to_string(e), e);
    std::sort(elems.begin(), elems.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [_, e] : elems) out.push_back(Syllable{v, e});
  }
  return out;
}

struct Ball {
  int radius = 0;
  std::vector<NormalWord> words;          // sorted by canonical string
  std::map<std::string, int> index;       // canonical string -> position
  std::map<std::string, int> depth;       // canonical string -> BFS depth

  bool contains(const std::string& key) const { return index.count(key) != 0; }
  const NormalWord& at(const std::string& key) const {
    return words[static_cast<size_t>(index.at(key))];
  }
};

inline Ball cayley_ball(const VertexGraph& g, int radius) {
  if (radius < 0) throw std::runtime_error("ball radius must be >= 0");
  Ball ball;
  ball.radius = radius;
  const auto gens = product_generators(g);

  std::map<std::string, NormalWord> seen;
  std::vector<NormalWord> frontier{NormalWord{}};
  seen[""] = NormalWord{};
  ball.depth[""] = 0;
  for (int d = 1; d <= radius; ++d) {
    std::vector<NormalWord> next;
    for (const auto& w : frontier) {
      for (const auto& s : gens) {
        NormalWord t = multiply_syllable(g, w, s.vertex, s.elem);
        std::string key = word_to_string(g, t);
        if (seen.count(key)) continue;
        seen.emplace(key, t);
        ball.depth[key] = d;
        next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  for (auto& [key, w] : seen) {
    ball.index[key] = static_cast<int>(ball.words.size());
    ball.words.push_back(std::move(w));
  }
  return ball;
}

inline json ball_to_json(const VertexGraph& g, const Ball& b) {
  json out;
  out["radius"] = b.radius;
  out["size"] = b.words.size();
  json words = json::array();
  for (const auto& w : b.words) words.push_back(word_to_string(g, w));
  out["words"] = std::move(words);
  return out;
}

}  // namespace selfsim
