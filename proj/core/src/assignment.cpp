#include "timcoop/assignment.hpp"

#include <algorithm>
#include <stdexcept>

namespace timcoop {

MessageAssignment::MessageAssignment(int k, std::vector<std::vector<int>> transmit_sets)
    : k_(k), sets_(std::move(transmit_sets)) {
  if (k < 1) throw std::invalid_argument("assignment: K must be >= 1");
  if (sets_.size() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("assignment: expected " + std::to_string(k) + " transmit sets, got " +
                                std::to_string(sets_.size()));
  }
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

const std::vector<int>& MessageAssignment::transmit_set(int msg) const {
  if (msg < 1 || msg > k_) throw std::out_of_range("message " + std::to_string(msg) + " out of range");
  return sets_[static_cast<std::size_t>(msg - 1)];
}

bool MessageAssignment::carries(int msg, int tx) const {
  const auto& s = transmit_set(msg);
  return std::binary_search(s.begin(), s.end(), tx);
}

int cooperation_order(const MessageAssignment& a) {
  std::size_t n = 0;
  for (const auto& s : a.transmit_sets()) n = std::max(n, s.size());
  return static_cast<int>(n);
}

MessageAssignment mod3_assignment(int k) {
  if (k < 1) throw std::invalid_argument("mod3_assignment: K must be >= 1");
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    switch (i % 3) {
      case 1: sets[static_cast<std::size_t>(i - 1)] = {i}; break;
      case 0: sets[static_cast<std::size_t>(i - 1)] = {i - 1}; break;
      default: break;
    }
  }
  return MessageAssignment(k, std::move(sets));
}

MessageAssignment connected_assignment(const Topology& t) {
  std::vector<std::vector<int>> sets;
  for (int rx = 1; rx <= t.k(); ++rx) {
    auto nb = t.neighbors(rx);
    sets.emplace_back(nb.begin(), nb.end());
  }
  return MessageAssignment(t.k(), std::move(sets));
}

std::optional<AssignmentViolation> validate(const MessageAssignment& a, const Topology& t, int n_max) {
  if (a.k() != t.k()) {
    throw std::invalid_argument("assignment K=" + std::to_string(a.k()) + " does not match topology K=" +
                                std::to_string(t.k()));
  }
  for (int i = 1; i <= a.k(); ++i) {
    const auto& s = a.transmit_set(i);
    for (int tx : s) {
      if (tx < 1 || tx > a.k()) {
        return AssignmentViolation{AssignmentViolation::Kind::index_out_of_range, i,
                                   "transmitter " + std::to_string(tx) + " outside 1.." + std::to_string(a.k())};
      }
    }
    if (static_cast<int>(s.size()) > n_max) {
      return AssignmentViolation{AssignmentViolation::Kind::cooperation_order_exceeded, i,
                                 "|T_" + std::to_string(i) + "| = " + std::to_string(s.size()) + " > N = " +
                                     std::to_string(n_max)};
    }
  }
  return std::nullopt;
}

}  // namespace timcoop
