#pragma once

#include <vector>

namespace timcoop {

/// Maximum bipartite matching by repeated augmenting-path search (Kuhn).
/// Left vertices are 0..n_left-1, right vertices 0..n_right-1. Left vertices
/// are processed in index order and adjacency lists in the given order, so
/// the result is deterministic.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int n_left, int n_right);

  void add_edge(int left, int right);
  /// Runs the search and returns the matching size.
  int solve();

  /// Right partner of `left`, or -1.
  int mate_of_left(int left) const { return mate_left_[static_cast<std::size_t>(left)]; }
  int mate_of_right(int right) const { return mate_right_[static_cast<std::size_t>(right)]; }

  /// After solve(): if some left vertex is unmatched, the set of left
  /// vertices reachable from it by alternating paths. That set has strictly
  /// fewer neighbours than members (a Hall violator). Empty when the
  /// matching saturates the left side.
  std::vector<int> deficient_left_set() const;

 private:
  bool augment(int left, std::vector<char>& seen);

  int n_left_;
  int n_right_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_left_;
  std::vector<int> mate_right_;
};

}  // namespace timcoop
