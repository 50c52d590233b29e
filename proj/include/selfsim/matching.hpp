#pragma once
// Deterministic maximum bipartite matching with augmentation entry points on
// both sides. Adjacency lists keep insertion order and augmenting searches
// scan them in that order, so results are reproducible across runs.

#include <vector>

namespace selfsim {

struct BipartiteMatcher {
  std::vector<std::vector<int>> adj;      // left index -> right indices
  std::vector<std::vector<int>> adj_rev;  // right index -> left indices
  std::vector<int> match_left;            // left index -> right index or -1
  std::vector<int> match_right;           // right index -> left index or -1

  BipartiteMatcher(int left_size, int right_size)
      : adj(static_cast<size_t>(left_size)),
        adj_rev(static_cast<size_t>(right_size)),
        match_left(static_cast<size_t>(left_size), -1),
        match_right(static_cast<size_t>(right_size), -1) {}

  void add_edge(int left, int right) {
    adj[static_cast<size_t>(left)].push_back(right);
    adj_rev[static_cast<size_t>(right)].push_back(left);
  }

  // Tries to match the given left node, possibly re-routing existing pairs.
  bool augment_left(int left) {
    if (match_left[static_cast<size_t>(left)] >= 0) return true;
    std::vector<char> seen(adj_rev.size(), 0);
    return try_left(left, seen);
  }

  // Tries to match the given right node, possibly re-routing existing pairs.
  bool augment_right(int right) {
    if (match_right[static_cast<size_t>(right)] >= 0) return true;
    std::vector<char> seen(adj.size(), 0);
    return try_right(right, seen);
  }

 private:
  bool try_left(int left, std::vector<char>& seen_right) {
    for (int r : adj[static_cast<size_t>(left)]) {
      if (seen_right[static_cast<size_t>(r)]) continue;
      seen_right[static_cast<size_t>(r)] = 1;
      int other = match_right[static_cast<size_t>(r)];
      if (other < 0 || try_left(other, seen_right)) {
        match_left[static_cast<size_t>(left)] = r;
        match_right[static_cast<size_t>(r)] = left;
        return true;
      }
    }
    return false;
  }

  bool try_right(int right, std::vector<char>& seen_left) {
    for (int l : adj_rev[static_cast<size_t>(right)]) {
      if (seen_left[static_cast<size_t>(l)]) continue;
      seen_left[static_cast<size_t>(l)] = 1;
      int other = match_left[static_cast<size_t>(l)];
      if (other < 0 || try_right(other, seen_left)) {
        match_right[static_cast<size_t>(right)] = l;
        match_left[static_cast<size_t>(l)] = right;
        return true;
      }
    }
    return false;
  }
};

}  // namespace selfsim
