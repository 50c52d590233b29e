#pragma once
// Vertex-group descriptors for graph products, and exact arithmetic in the
// kinds that support it: the integer group, free groups of rank >= 2, finite
// cyclic groups, and finite groups given by an explicit multiplication table.
// The abstract kind only carries classification flags.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace selfsim {

enum class GroupKind { Z, Free, Zn, Table, Abstract };

// One element of a vertex group. Which field is meaningful depends on the
// owning group's kind: `z` for Z (any integer) and Zn (residue 0..order-1),
// `letters` for free groups (freely reduced; 'a'..'z' are the positive
// letters, 'A'..'Z' their inverses), `idx` for table groups.
struct GroupElem {
  long long z = 0;
  std::string letters;
  int idx = 0;
};

struct VertexGroup {
  GroupKind kind = GroupKind::Z;
  int rank = 0;                             // Free
  int order = 0;                            // Zn
  std::vector<std::string> elements;        // Table: names, identity at 0
  std::vector<std::vector<int>> table;      // Table: index multiplication
  bool abstract_infinite = true;            // Abstract
  bool abstract_amenable = true;            // Abstract

  bool amenable() const {
    switch (kind) {
      case GroupKind::Z:
      case GroupKind::Zn:
      case GroupKind::Table: return true;
      case GroupKind::Free: return false;
      case GroupKind::Abstract: return abstract_amenable;
    }
    return false;
  }

  bool infinite() const {
    switch (kind) {
      case GroupKind::Z:
      case GroupKind::Free: return true;
      case GroupKind::Zn:
      case GroupKind::Table: return false;
      case GroupKind::Abstract: return abstract_infinite;
    }
    return false;
  }

  bool arithmetic() const { return kind != GroupKind::Abstract; }

  void validate() const {
    switch (kind) {
      case GroupKind::Z:
        break;
      case GroupKind::Free:
        if (rank < 2) throw std::runtime_error("free group rank must be >= 2 (use Z for rank 1)");
        if (rank > 26) throw std::runtime_error("free group rank must be <= 26");
        break;
      case GroupKind::Zn:
        if (order < 2) throw std::runtime_error("cyclic group order must be >= 2");
        break;
      case GroupKind::Table: {
        const int n = static_cast<int>(elements.size());
        if (n < 1) throw std::runtime_error("table group needs at least one element");
        if (static_cast<int>(table.size()) != n)
          throw std::runtime_error("table group: multiplication table has wrong height");
        for (const auto& row : table) {
          if (static_cast<int>(row.size()) != n)
            throw std::runtime_error("table group: multiplication table has wrong width");
          for (int v : row)
            if (v < 0 || v >= n) throw std::runtime_error("table group: index out of range");
        }
        for (int i = 0; i < n; ++i)
          if (table[0][i] != i || table[i][0] != i)
            throw std::runtime_error("table group: identity must sit at index 0");
        for (int i = 0; i < n; ++i) {
          bool has_inverse = false;
          for (int j = 0; j < n; ++j)
            if (table[i][j] == 0 && table[j][i] == 0) has_inverse = true;
          if (!has_inverse) throw std::runtime_error("table group: missing inverse");
        }
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
              if (table[table[i][j]][k] != table[i][table[j][k]])
                throw std::runtime_error("table group: multiplication is not associative");
        break;
      }
      case GroupKind::Abstract:
        break;
    }
  }

  // ----- element arithmetic ------------------------------------------------

  GroupElem identity() const { return GroupElem{}; }

  bool is_identity(const GroupElem& e) const {
    switch (kind) {
      case GroupKind::Z: return e.z == 0;
      case GroupKind::Free: return e.letters.empty();
      case GroupKind::Zn: return e.z == 0;
      case GroupKind::Table: return e.idx == 0;
      case GroupKind::Abstract: require_arithmetic();
    }
    return false;
  }

  GroupElem mul(const GroupElem& a, const GroupElem& b) const {
    GroupElem out;
    switch (kind) {
      case GroupKind::Z: out.z = a.z + b.z; break;
      case GroupKind::Free: out.letters = free_reduce(a.letters + b.letters); break;
      case GroupKind::Zn: out.z = ((a.z + b.z) % order + order) % order; break;
      case GroupKind::Table: out.idx = table[a.idx][b.idx]; break;
      case GroupKind::Abstract: require_arithmetic();
    }
    return out;
  }

  GroupElem inv(const GroupElem& a) const {
    GroupElem out;
    switch (kind) {
      case GroupKind::Z: out.z = -a.z; break;
      case GroupKind::Free: {
        std::string r(a.letters.rbegin(), a.letters.rend());
        for (char& c : r) c = toggle_case(c);
        out.letters = r;
        break;
      }
      case GroupKind::Zn: out.z = (order - a.z) % order; break;
      case GroupKind::Table: {
        const int n = static_cast<int>(elements.size());
        for (int j = 0; j < n; ++j)
          if (table[a.idx][j] == 0) { out.idx = j; break; }
        break;
      }
      case GroupKind::Abstract: require_arithmetic();
    }
    return out;
  }

  // Generators used for Cayley balls and subshift move sets: Z -> {+1,-1};
  // Free(k) -> the 2k letters; finite kinds -> every non-identity element.
  std::vector<GroupElem> generators() const {
    std::vector<GroupElem> out;
    switch (kind) {
      case GroupKind::Z:
        out.push_back(GroupElem{.z = 1});
        out.push_back(GroupElem{.z = -1});
        break;
      case GroupKind::Free:
        for (int i = 0; i < rank; ++i) {
          out.push_back(GroupElem{.letters = std::string(1, static_cast<char>('a' + i))});
          out.push_back(GroupElem{.letters = std::string(1, static_cast<char>('A' + i))});
        }
        break;
      case GroupKind::Zn:
        for (int v = 1; v < order; ++v) out.push_back(GroupElem{.z = v});
        break;
      case GroupKind::Table:
        for (int v = 1; v < static_cast<int>(elements.size()); ++v)
          out.push_back(GroupElem{.idx = v});
        break;
      case GroupKind::Abstract:
        require_arithmetic();
    }
    return out;
  }

  // ----- element text form --------------------------------------------------
  // Z: "+3" / "-2"; free: letters with "^-1" marking inverses ("ab^-1");
  // finite kinds: "#index".

  std::string elem_to_string(const GroupElem& e) const {
    switch (kind) {
      case GroupKind::Z:
        return (e.z >= 0 ? "+" : "") + std::to_string(e.z);
      case GroupKind::Free: {
        std::string out;
        for (char c : e.letters) {
          if (c >= 'a' && c <= 'z') out += c;
          else { out += static_cast<char>(c - 'A' + 'a'); out += "^-1"; }
        }
        return out;
      }
      case GroupKind::Zn:
      case GroupKind::Table:
        return "#" + std::to_string(e.z ? e.z : e.idx);
      case GroupKind::Abstract:
        require_arithmetic();
    }
    return "";
  }

  GroupElem elem_from_string(const std::string& s) const {
    GroupElem e;
    switch (kind) {
      case GroupKind::Z: {
        try {
          size_t used = 0;
          e.z = std::stoll(s, &used);
          if (used != s.size()) throw std::invalid_argument(s);
        } catch (const std::exception&) {
          throw std::runtime_error("bad integer element '" + s + "'");
        }
        break;
      }
      case GroupKind::Free: {
        std::string raw;
        size_t i = 0;
        while (i < s.size()) {
          char c = s[i];
          if (c < 'a' || c >= static_cast<char>('a' + rank))
            throw std::runtime_error("bad free-group letter in '" + s + "'");
          if (s.compare(i + 1, 3, "^-1") == 0) {
            raw += static_cast<char>(c - 'a' + 'A');
            i += 4;
          } else {
            raw += c;
            i += 1;
          }
        }
        e.letters = free_reduce(raw);
        break;
      }
      case GroupKind::Zn:
      case GroupKind::Table: {
        if (s.empty() || s[0] != '#')
          throw std::runtime_error("finite-group element must look like '#k', got '" + s + "'");
        int v = 0;
        try {
          size_t used = 0;
          v = std::stoi(s.substr(1), &used);
          if (used + 1 != s.size()) throw std::invalid_argument(s);
        } catch (const std::exception&) {
          throw std::runtime_error("bad finite-group element '" + s + "'");
        }
        const int n = kind == GroupKind::Zn ? order : static_cast<int>(elements.size());
        if (v < 0 || v >= n) throw std::runtime_error("element index out of range in '" + s + "'");
        if (kind == GroupKind::Zn) e.z = v; else e.idx = v;
        break;
      }
      case GroupKind::Abstract:
        require_arithmetic();
    }
    return e;
  }

  static std::string free_reduce(std::string w) {
    std::string out;
    for (char c : w) {
      if (!out.empty() && out.back() == toggle_case(c)) out.pop_back();
      else out += c;
    }
    return out;
  }

 private:
  static char toggle_case(char c) {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A')
                                  : static_cast<char>(c - 'A' + 'a');
  }

  [[noreturn]] void require_arithmetic() const {
    throw std::runtime_error("abstract vertex kind supports no arithmetic");
  }
};

}  // namespace selfsim
