#include "timcoop/matching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace timcoop {

BipartiteMatcher::BipartiteMatcher(int n_left, int n_right)
    : n_left_(n_left),
      n_right_(n_right),
      adj_(static_cast<std::size_t>(n_left)),
      mate_left_(static_cast<std::size_t>(n_left), -1),
      mate_right_(static_cast<std::size_t>(n_right), -1) {
  if (n_left < 0 || n_right < 0) throw std::invalid_argument("negative partition size");
}

void BipartiteMatcher::add_edge(int left, int right) {
  if (left < 0 || left >= n_left_ || right < 0 || right >= n_right_) {
    throw std::out_of_range("matching edge out of bounds");
  }
  adj_[static_cast<std::size_t>(left)].push_back(right);
}

bool BipartiteMatcher::augment(int left, std::vector<char>& seen) {
  for (int right : adj_[static_cast<std::size_t>(left)]) {
    auto r = static_cast<std::size_t>(right);
    if (seen[r]) continue;
    seen[r] = 1;
    if (mate_right_[r] < 0 || augment(mate_right_[r], seen)) {
      mate_right_[r] = left;
      mate_left_[static_cast<std::size_t>(left)] = right;
      return true;
    }
  }
  return false;
}

int BipartiteMatcher::solve() {
  std::fill(mate_left_.begin(), mate_left_.end(), -1);
  std::fill(mate_right_.begin(), mate_right_.end(), -1);
  int size = 0;
  std::vector<char> seen(static_cast<std::size_t>(n_right_));
  for (int left = 0; left < n_left_; ++left) {
    std::fill(seen.begin(), seen.end(), 0);
    if (augment(left, seen)) ++size;
  }
  return size;
}

std::vector<int> BipartiteMatcher::deficient_left_set() const {
  int root = -1;
  for (int left = 0; left < n_left_; ++left) {
    if (mate_left_[static_cast<std::size_t>(left)] < 0) {
      root = left;
      break;
    }
  }
  if (root < 0) return {};

  // Alternating BFS: unmatched edges left->right, matched edges right->left.
  // Every right vertex reached is matched (else the matching was not
  // maximum), so |reached right| = |reached left| - 1.
  std::vector<char> in_set(static_cast<std::size_t>(n_left_), 0);
  std::vector<char> right_seen(static_cast<std::size_t>(n_right_), 0);
  std::queue<int> q;
  q.push(root);
  in_set[static_cast<std::size_t>(root)] = 1;
  while (!q.empty()) {
    int left = q.front();
    q.pop();
    for (int right : adj_[static_cast<std::size_t>(left)]) {
      auto r = static_cast<std::size_t>(right);
      if (right_seen[r]) continue;
      right_seen[r] = 1;
      int next = mate_right_[r];
      if (next >= 0 && !in_set[static_cast<std::size_t>(next)]) {
        in_set[static_cast<std::size_t>(next)] = 1;
        q.push(next);
      }
    }
  }
  std::vector<int> out;
  for (int left = 0; left < n_left_; ++left) {
    if (in_set[static_cast<std::size_t>(left)]) out.push_back(left);
  }
  return out;
}

}  // namespace timcoop
