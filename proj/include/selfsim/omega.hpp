#pragma once
// Omega symbols: one bit per column, where the columns are the identity
// followed by every generator of the graph product in canonical order. These
// are the letters stored on the L layer of bush patches, and they double as
// Turing tape symbols (serialized as fixed-length bit strings).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "selfsim/ball.hpp"

namespace selfsim {

struct GenIndex {
  // names[0] is "" (the identity column); the rest are generator syllables
  // rendered as one-syllable words ("1:+1", "2:a", ...).
  std::vector<std::string> names;
  std::vector<Syllable> gens;            // aligned with names[1..]
  std::map<std::string, int> position;   // name -> column

  size_t columns() const { return names.size(); }
};

inline GenIndex make_gen_index(const VertexGraph& g) {
  GenIndex idx;
  idx.names.push_back("");
  idx.position[""] = 0;
  for (const auto& s : product_generators(g)) {
    std::string name = syllable_to_string(g, s);
    idx.position[name] = static_cast<int>(idx.names.size());
    idx.names.push_back(name);
    idx.gens.push_back(s);
  }
  return idx;
}

struct OmegaSymbol {
  std::vector<uint8_t> bits;  // aligned with GenIndex columns

  bool operator==(const OmegaSymbol& o) const { return bits == o.bits; }
  bool operator!=(const OmegaSymbol& o) const { return bits != o.bits; }
  bool operator<(const OmegaSymbol& o) const { return bits < o.bits; }

  uint8_t at(int column) const { return bits.at(static_cast<size_t>(column)); }
};

inline std::string omega_to_tape_string(const OmegaSymbol& s) {
  std::string out;
  out.reserve(s.bits.size());
  for (uint8_t b : s.bits) out += b ? '1' : '0';
  return out;
}

inline OmegaSymbol omega_from_tape_string(const GenIndex& idx, const std::string& s) {
  if (s.size() != idx.columns())
    throw std::runtime_error("omega bit string '" + s + "' has wrong length");
  OmegaSymbol out;
  out.bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw std::runtime_error("omega bit string must be 0/1");
    out.bits.push_back(c == '1');
  }
  return out;
}

inline json omega_to_json(const GenIndex& idx, const OmegaSymbol& s) {
  json out = json::object();
  for (size_t i = 0; i < idx.names.size(); ++i)
    out[idx.names[i]] = static_cast<int>(s.bits.at(i));
  return out;
}

inline OmegaSymbol omega_from_json(const GenIndex& idx, const json& j) {
  OmegaSymbol out;
  out.bits.assign(idx.columns(), 0);
  for (const auto& [key, val] : j.items()) {
    auto it = idx.position.find(key);
    if (it == idx.position.end())
      throw std::runtime_error("omega symbol references unknown column '" + key + "'");
    out.bits[static_cast<size_t>(it->second)] = val.get<int>() ? 1 : 0;
  }
  if (j.size() != idx.columns())
    throw std::runtime_error("omega symbol must assign every column exactly once");
  return out;
}

// All omega tape strings in lexicographic order (used to build machine
// alphabets over a graph's generator index).
inline std::vector<std::string> all_omega_tape_strings(const GenIndex& idx) {
  const size_t n = idx.columns();
  if (n > 20) throw std::runtime_error("omega alphabet too large to enumerate");
  std::vector<std::string> out;
  out.reserve(size_t{1} << n);
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::string s(n, '0');
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << (n - 1 - i))) s[i] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace selfsim
