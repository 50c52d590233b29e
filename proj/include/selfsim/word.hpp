#pragma once
// Syllable words over a graph product: graphical reduction, canonical normal
// forms, multiplication, inversion, tails, and vertex projections.
//
// A word is a sequence of syllables (vertex, non-identity vertex-group
// element). Three moves preserve the represented element: swapping adjacent
// syllables at adjacent vertices, merging adjacent syllables at one vertex,
// and deleting identity syllables. The canonical form first reduces to a
// graphically reduced word and then emits, among the syllables whose
// predecessors (same vertex or non-adjacent vertex, earlier in the word) are
// all emitted, the one with the least vertex id. Two syllables can never be
// simultaneously available at the same vertex, so no further tiebreak exists.

#include <string>
#include <vector>

#include "selfsim/graph.hpp"

namespace selfsim {

struct Syllable {
  int vertex = 0;
  GroupElem elem;
};

struct NormalWord {
  std::vector<Syllable> syllables;
  bool empty() const { return syllables.empty(); }
  size_t size() const { return syllables.size(); }
};

inline std::string syllable_to_string(const VertexGraph& g, const Syllable& s) {
  return std::to_string(s.vertex) + ":" + g.group(s.vertex).elem_to_string(s.elem);
}

inline std::string word_to_string(const VertexGraph& g, const NormalWord& w) {
  std::string out;
  for (const auto& s : w.syllables) {
    if (!out.empty()) out += ' ';
    out += syllable_to_string(g, s);
  }
  return out;
}

// Whitespace-separated "v:element" tokens; the empty string is the identity.
inline std::vector<Syllable> parse_syllables(const VertexGraph& g, const std::string& text) {
  std::vector<Syllable> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
      ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != '\r')
      ++j;
    std::string tok = text.substr(i, j - i);
    i = j;
    size_t colon = tok.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("syllable '" + tok + "' is missing ':'");
    int v = 0;
    try {
      size_t used = 0;
      v = std::stoi(tok.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::runtime_error("bad vertex id in syllable '" + tok + "'");
    }
    if (!g.has_vertex(v)) throw std::runtime_error("unknown vertex id in syllable '" + tok + "'");
    out.push_back(Syllable{v, g.group(v).elem_from_string(tok.substr(colon + 1))});
  }
  return out;
}

namespace detail {

// Reduce in place until no identity deletion or merge applies. A merge of
// positions i < j is allowed when the syllables share a vertex and every
// intermediate syllable's vertex is adjacent to it.
inline void graphically_reduce(const VertexGraph& g, std::vector<Syllable>& w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < w.size(); ++i) {
      if (g.group(w[i].vertex).is_identity(w[i].elem)) {
        w.erase(w.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (size_t i = 0; i < w.size() && !changed; ++i) {
      for (size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].vertex == w[i].vertex) {
          w[i].elem = g.group(w[i].vertex).mul(w[i].elem, w[j].elem);
          w.erase(w.begin() + static_cast<long>(j));
          changed = true;
          break;
        }
        if (!g.adjacent(w[j].vertex, w[i].vertex)) break;
      }
    }
  }
}

}  // namespace detail

inline NormalWord normal_form(const VertexGraph& g, std::vector<Syllable> input) {
  for (const auto& s : input) {
    if (!g.has_vertex(s.vertex))
      throw std::runtime_error("unknown vertex id " + std::to_string(s.vertex));
    if (!g.group(s.vertex).arithmetic())
      throw std::runtime_error("vertex " + std::to_string(s.vertex) +
                               " has an abstract group; no word arithmetic");
  }
  detail::graphically_reduce(g, input);

  // Canonical linearization: repeatedly emit the available syllable with the
  // least vertex id, where "available" means every earlier syllable at the
  // same or a non-adjacent vertex has been emitted.
  const size_t n = input.size();
  std::vector<bool> emitted(n, false);
  NormalWord out;
  out.syllables.reserve(n);
  for (size_t step = 0; step < n; ++step) {
    int best = -1;
    for (size_t i = 0; i < n; ++i) {
      if (emitted[i]) continue;
      bool available = true;
      for (size_t k = 0; k < i && available; ++k)
        if (!emitted[k] &&
            (input[k].vertex == input[i].vertex || !g.adjacent(input[k].vertex, input[i].vertex)))
          available = false;
      if (!available) continue;
      if (best == -1 || input[i].vertex < input[best].vertex) best = static_cast<int>(i);
    }
    emitted[static_cast<size_t>(best)] = true;
    out.syllables.push_back(input[static_cast<size_t>(best)]);
  }
  return out;
}

inline NormalWord normal_form(const VertexGraph& g, const NormalWord& w) {
  return normal_form(g, w.syllables);
}

inline NormalWord parse_word(const VertexGraph& g, const std::string& text) {
  return normal_form(g, parse_syllables(g, text));
}

// Canonical text key for a group element given by any word spelling it.
inline std::string canonical_key(const VertexGraph& g, const NormalWord& w) {
  return word_to_string(g, normal_form(g, w));
}

inline NormalWord multiply(const VertexGraph& g, const NormalWord& a, const NormalWord& b) {
  std::vector<Syllable> cat = a.syllables;
  cat.insert(cat.end(), b.syllables.begin(), b.syllables.end());
  return normal_form(g, std::move(cat));
}

inline NormalWord invert(const VertexGraph& g, const NormalWord& a) {
  std::vector<Syllable> rev;
  rev.reserve(a.size());
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
    rev.push_back(Syllable{it->vertex, g.group(it->vertex).inv(it->elem)});
  return normal_form(g, std::move(rev));
}

inline bool words_equal(const VertexGraph& g, const NormalWord& a, const NormalWord& b) {
  return word_to_string(g, a) == word_to_string(g, b);
}

// Vertices at which some graphically reduced writing of the word can end:
// v is in the tail iff the word has a v-syllable followed only by syllables
// at vertices adjacent to v.
inline std::set<int> tail(const VertexGraph& g, const NormalWord& a) {
  std::set<int> out;
  const auto& w = a.syllables;
  for (size_t i = 0; i < w.size(); ++i) {
    bool movable = true;
    for (size_t k = i + 1; k < w.size() && movable; ++k)
      if (!g.adjacent(w[k].vertex, w[i].vertex)) movable = false;
    if (movable) out.insert(w[i].vertex);
  }
  return out;
}

// Canonical projection onto the vertex group at v: keep v-syllables,
// multiply in order.
inline GroupElem project(const VertexGraph& g, const NormalWord& a, int v) {
  const VertexGroup& gr = g.group(v);
  GroupElem acc = gr.identity();
  for (const auto& s : a.syllables)
    if (s.vertex == v) acc = gr.mul(acc, s.elem);
  return acc;
}

// Multiply a word by a single group element at one vertex (a "move").
inline NormalWord multiply_syllable(const VertexGraph& g, const NormalWord& a, int vertex,
                                    const GroupElem& e) {
  std::vector<Syllable> cat = a.syllables;
  cat.push_back(Syllable{vertex, e});
  return normal_form(g, std::move(cat));
}

}  // namespace selfsim
