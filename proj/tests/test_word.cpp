// Word grammar, normal forms, multiplication, inverses, tails and vertex
// projections, cross-checked against the exhaustive move-closure oracle on
// random words over the square and the mixed square.

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "selfsim/gallery.hpp"
#include "selfsim/word.hpp"

using namespace selfsim;

namespace {

std::vector<Syllable> random_syllables(const VertexGraph& g, std::mt19937& rng, int max_len) {
  std::vector<Syllable> out;
  int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int i = 0; i < len; ++i) {
    int v = g.ids[rng() % g.ids.size()];
    const VertexGroup& gr = g.group(v);
    GroupElem e;
    switch (gr.kind) {
      case GroupKind::Z:
        e.z = static_cast<long long>(rng() % 5) - 2;
        break;
      case GroupKind::Free: {
        const auto gens = gr.generators();
        e = gr.identity();
        int l = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < l; ++k) e = gr.mul(e, gens[rng() % gens.size()]);
        break;
      }
      default: {
        const auto gens = gr.generators();
        e = gens[rng() % gens.size()];
        break;
      }
    }
    out.push_back({v, e});
  }
  return out;
}

}  // namespace

TEST_CASE("word grammar round trips") {
  auto g = gallery_graph("mixed_square");
  for (const std::string text : {"", "1:+2", "1:-1", "2:a", "2:ab^-1", "2:a^-1b 3:+1",
                                 "1:+1 2:ab 3:-2 4:b^-1a^-1"}) {
    auto w = parse_word(g, text);
    auto again = parse_word(g, word_to_string(g, w));
    REQUIRE(word_to_string(g, again) == word_to_string(g, w));
  }
  REQUIRE(parse_word(g, "").empty());
  REQUIRE_THROWS(parse_word(g, "7:+1"));       // unknown vertex
  REQUIRE_THROWS(parse_word(g, "1:a"));        // wrong element grammar for Z
  REQUIRE_THROWS(parse_word(g, "2:+1"));       // wrong element grammar for a free group
}

TEST_CASE("normal form is a fixpoint and drops identity syllables") {
  auto g = gallery_graph("square");
  auto w = parse_word(g, "1:+1 1:-1 2:+3");
  REQUIRE(word_to_string(g, w) == "2:+3");
  auto again = normal_form(g, w);
  REQUIRE(word_to_string(g, again) == "2:+3");

  // Adjacent vertices commute: the normal form sorts what can be sorted.
  auto a = parse_word(g, "2:+1 1:+1");
  REQUIRE(word_to_string(g, a) == "1:+1 2:+1");
  auto b = parse_word(g, "3:+1 1:+1");  // 1 and 3 do not commute
  REQUIRE(word_to_string(g, b) == "3:+1 1:+1");
}

TEST_CASE("normal form merges across commuting separators") {
  auto g = gallery_graph("square");
  // 1 commutes with 2; the two 1-syllables merge and cancel.
  auto w = parse_word(g, "1:+1 2:+1 1:-1");
  REQUIRE(word_to_string(g, w) == "2:+1");
  // 1 does not commute with 3: nothing merges.
  auto v = parse_word(g, "1:+1 3:+1 1:-1");
  REQUIRE(v.size() == 3);
}

TEST_CASE("multiplication, inverse and equality on random words") {
  std::mt19937 rng(911);
  for (const char* name : {"square", "mixed_square"}) {
    auto g = gallery_graph(name);
    for (int trial = 0; trial < 100; ++trial) {
      NormalWord a = normal_form(g, random_syllables(g, rng, 4));
      NormalWord b = normal_form(g, random_syllables(g, rng, 4));

      // Product against the oracle: concatenate then canonicalize.
      NormalWord ab = multiply(g, a, b);
      std::vector<Syllable> cat = a.syllables;
      cat.insert(cat.end(), b.syllables.begin(), b.syllables.end());
      REQUIRE(oracle::canon(g, ab.syllables) == oracle::canon(g, cat));

      // Inverse: the product with it collapses to the identity.
      NormalWord ainv = invert(g, a);
      REQUIRE(multiply(g, a, ainv).empty());
      REQUIRE(multiply(g, ainv, a).empty());

      // Equality matches the closure oracle for both orders of the pair.
      REQUIRE(words_equal(g, ab, ab));
      bool lib_eq = words_equal(g, a, b);
      bool ora_eq = oracle::words_equal(g, a, b);
      REQUIRE(lib_eq == ora_eq);
    }
  }
}

TEST_CASE("normal form is constant on the commutation class") {
  std::mt19937 rng(613);
  auto g = gallery_graph("square");
  for (int trial = 0; trial < 40; ++trial) {
    NormalWord w = normal_form(g, random_syllables(g, rng, 4));
    for (const auto& member : oracle::reduced_members(g, w)) {
      REQUIRE(word_to_string(g, normal_form(g, member)) == word_to_string(g, w));
    }
  }
}

TEST_CASE("tail matches the closure oracle") {
  std::mt19937 rng(4242);
  for (const char* name : {"square", "pentagon"}) {
    auto g = gallery_graph(name);
    for (int trial = 0; trial < 60; ++trial) {
      NormalWord w = normal_form(g, random_syllables(g, rng, 5));
      REQUIRE(tail(g, w) == oracle::tail_set(g, w));
    }
  }
}

TEST_CASE("tail on fixed examples") {
  auto g = gallery_graph("square");
  REQUIRE(tail(g, parse_word(g, "")) == std::set<int>{});
  REQUIRE(tail(g, parse_word(g, "1:+1")) == std::set<int>{1});
  REQUIRE(tail(g, parse_word(g, "1:+1 2:+1")) == std::set<int>{1, 2});
  REQUIRE(tail(g, parse_word(g, "1:+1 3:+1")) == std::set<int>{3});
  REQUIRE(tail(g, parse_word(g, "1:+1 3:+1 1:+1")) == std::set<int>{1});
}

TEST_CASE("projection folds one vertex and is multiplicative") {
  std::mt19937 rng(77);
  auto g = gallery_graph("mixed_square");
  REQUIRE(g.group(1).kind == GroupKind::Z);
  auto w = parse_word(g, "1:+1 2:a 1:+2 4:b");
  REQUIRE(project(g, w, 1).z == 3);
  REQUIRE(g.group(2).elem_to_string(project(g, w, 2)) == "a");
  REQUIRE(project(g, w, 3).z == 0);

  for (int trial = 0; trial < 50; ++trial) {
    NormalWord a = normal_form(g, random_syllables(g, rng, 4));
    NormalWord b = normal_form(g, random_syllables(g, rng, 4));
    NormalWord ab = multiply(g, a, b);
    for (int v : g.ids) {
      const VertexGroup& gr = g.group(v);
      GroupElem expect = gr.mul(project(g, a, v), project(g, b, v));
      REQUIRE(gr.elem_to_string(project(g, ab, v)) == gr.elem_to_string(expect));
    }
  }
}

TEST_CASE("multiply by one syllable agrees with full multiplication") {
  std::mt19937 rng(3131);
  auto g = gallery_graph("square");
  for (int trial = 0; trial < 50; ++trial) {
    NormalWord a = normal_form(g, random_syllables(g, rng, 4));
    int v = g.ids[rng() % g.ids.size()];
    GroupElem e;
    e.z = static_cast<long long>(rng() % 5) - 2;
    NormalWord lib = multiply_syllable(g, a, v, e);
    NormalWord ref = multiply(g, a, NormalWord{{Syllable{v, e}}});
    REQUIRE(word_to_string(g, lib) == word_to_string(g, ref));
  }
}

TEST_CASE("canonical key is the serialized normal form") {
  auto g = gallery_graph("square");
  auto w = parse_word(g, "2:+1 1:+1");
  REQUIRE(canonical_key(g, w) == "1:+1 2:+1");
  REQUIRE(canonical_key(g, parse_word(g, "")) == "");
}
