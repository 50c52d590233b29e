#pragma once
// Action oracles: deterministic per-generator prefix transformers standing in
// for a group action on bit sequences. A transformer maps a prefix of the
// point x to the same-length prefix of the generator's image of x. Includes
// the identity action, the odometer action (every generator adds one with
// carry, least significant bit first), and the finite-depth set
// representation check.

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "selfsim/omega.hpp"

namespace selfsim {

using Bits = std::vector<uint8_t>;

struct ActionOracle {
  std::string name;
  // gen is a one-syllable word string such as "1:+1" or "2:a^-1".
  std::function<Bits(const std::string& gen, const Bits& prefix)> apply;
};

inline ActionOracle identity_action() {
  ActionOracle a;
  a.name = "identity";
  a.apply = [](const std::string&, const Bits& p) { return p; };
  return a;
}

namespace detail {

inline Bits bits_increment(Bits p) {
  for (auto& b : p) {
    if (b == 0) { b = 1; return p; }
    b = 0;  // carry
  }
  return p;  // carry left the prefix; all observable bits are 0
}

inline Bits bits_decrement(Bits p) {
  for (auto& b : p) {
    if (b == 1) { b = 0; return p; }
    b = 1;  // borrow
  }
  return p;  // borrow left the prefix; all observable bits are 1
}

// True when the single-generator word is an inverse generator: negative for
// integer vertices, an uppercase-reduced inverse letter for free vertices.
inline bool generator_is_inverse(const std::string& gen) {
  auto colon = gen.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("bad generator name '" + gen + "'");
  std::string payload = gen.substr(colon + 1);
  if (!payload.empty() && (payload[0] == '-')) return true;
  if (payload.find("^-1") != std::string::npos) return true;
  return false;
}

}  // namespace detail

// Every positive generator adds 1 (with carry, LSB first); every inverse
// generator subtracts 1. This factors through the total-exponent
// homomorphism to the integers, so it is a genuine action of any graph
// product and adjacent generators commute on all prefixes.
inline ActionOracle odometer_action() {
  ActionOracle a;
  a.name = "odometer";
  a.apply = [](const std::string& gen, const Bits& p) {
    return detail::generator_is_inverse(gen) ? detail::bits_decrement(p)
                                             : detail::bits_increment(p);
  };
  return a;
}

inline ActionOracle action_by_name(const std::string& name) {
  if (name == "identity") return identity_action();
  if (name == "odometer") return odometer_action();
  throw std::runtime_error("unknown action '" + name + "' (expected identity|odometer)");
}

// Splits a normal word into generator syllables (a syllable (v:+3) becomes
// three copies of (v:+1); free syllables split into letters; finite kinds
// are rejected since actions here are indexed by Z / free generators only).
inline std::vector<std::string> generator_factors(const VertexGraph& g, const NormalWord& w) {
  std::vector<std::string> out;
  for (const auto& s : w.syllables) {
    const VertexGroup& gr = g.group(s.vertex);
    switch (gr.kind) {
      case GroupKind::Z: {
        GroupElem step{.z = s.elem.z > 0 ? 1 : -1};
        for (long long i = 0; i < std::abs(s.elem.z); ++i)
          out.push_back(syllable_to_string(g, Syllable{s.vertex, step}));
        break;
      }
      case GroupKind::Free: {
        for (char c : s.elem.letters)
          out.push_back(syllable_to_string(g, Syllable{s.vertex, GroupElem{.letters = std::string(1, c)}}));
        break;
      }
      default:
        throw std::runtime_error("action oracles support Z and free vertices only");
    }
  }
  return out;
}

inline std::string invert_generator_name(const VertexGraph& g, const std::string& gen) {
  auto colon = gen.find(':');
  int v = std::stoi(gen.substr(0, colon));
  const VertexGroup& gr = g.group(v);
  return syllable_to_string(g, Syllable{v, gr.inv(gr.elem_from_string(gen.substr(colon + 1)))});
}

// The prefix of g^{-1}.x: with g = s_1 ... s_k as generator factors, the
// inverse product s_k^{-1} ... s_1^{-1} acts with s_1^{-1} applied first.
inline Bits apply_inverse_of_word(const ActionOracle& a, const VertexGraph& g,
                                  const NormalWord& w, Bits prefix) {
  for (const auto& gen : generator_factors(g, w))
    prefix = a.apply(invert_generator_name(g, gen), prefix);
  return prefix;
}

// ----- set representation ---------------------------------------------------

// Columns of a set-representation sequence y: y(n)(identity) carries a point
// of the space and y(n)(s) the s-image of that point, bit by bit.
struct SetRepresentationIssue {
  std::string column;
  int bit = 0;
  std::string detail;
};

// Verifies, to the available depth, that the identity column passes the
// x-predicate and that every generator column equals the oracle image of the
// identity column. The x-predicate receives a prefix and may return false
// only when the prefix is already inadmissible.
inline std::vector<SetRepresentationIssue> set_representation_check(
    const GenIndex& idx, const std::vector<OmegaSymbol>& y, const ActionOracle& action,
    const std::function<bool(const Bits&)>& x_oracle) {
  std::vector<SetRepresentationIssue> issues;
  Bits ident;
  ident.reserve(y.size());
  for (const auto& sym : y) ident.push_back(sym.at(0));
  if (!x_oracle(ident))
    issues.push_back({"", 0, "identity column rejected by the x predicate"});
  for (size_t col = 1; col < idx.columns(); ++col) {
    Bits expect = action.apply(idx.names[col], ident);
    for (size_t n = 0; n < y.size() && n < expect.size(); ++n) {
      if (y[n].at(static_cast<int>(col)) != expect[n]) {
        issues.push_back({idx.names[col], static_cast<int>(n),
                          "column disagrees with the action image of the identity column"});
        break;
      }
    }
  }
  return issues;
}

}  // namespace selfsim
