#pragma once

#include <optional>
#include <string>
#include <vector>

#include "timcoop/topology.hpp"

namespace timcoop {

/// Transmit sets for each message. Entry i-1 holds the transmitters carrying
/// message i; an empty set means the message is not sent.
///
/// Construction only normalizes (sorts, dedups). Range checking is left to
/// validate() so that out-of-range inputs can be reported, not just rejected.
class MessageAssignment {
 public:
  MessageAssignment(int k, std::vector<std::vector<int>> transmit_sets);

  int k() const { return k_; }
  const std::vector<int>& transmit_set(int msg) const;
  const std::vector<std::vector<int>>& transmit_sets() const { return sets_; }
  bool carries(int msg, int tx) const;

  friend bool operator==(const MessageAssignment&, const MessageAssignment&) = default;

 private:
  int k_;
  std::vector<std::vector<int>> sets_;
};

/// Largest transmit set size; 0 iff nothing is transmitted.
int cooperation_order(const MessageAssignment& a);

/// N = 1 interference-avoidance assignment for the Wyner chain: message i is
/// carried by transmitter i when i = 1 (mod 3), by transmitter i-1 when
/// i = 0 (mod 3), and dropped when i = 2 (mod 3).
MessageAssignment mod3_assignment(int k);

/// Every message carried by all transmitters its receiver hears. On the Wyner
/// chain this is T_i = {i-1, i}, cooperation order 2.
MessageAssignment connected_assignment(const Topology& t);

struct AssignmentViolation {
  enum class Kind { index_out_of_range, cooperation_order_exceeded };
  Kind kind;
  int message;  // 1-based
  std::string detail;
};

/// Checks ranges and |T_i| <= n_max message by message and reports the first
/// offender. Throws std::invalid_argument when a.k() != t.k().
std::optional<AssignmentViolation> validate(const MessageAssignment& a, const Topology& t, int n_max);

}  // namespace timcoop
