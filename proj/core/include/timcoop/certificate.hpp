#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "timcoop/rational.hpp"
#include "timcoop/topology.hpp"

namespace timcoop {

/// Message `msg` served by transmitter `tx` in a one-shot schedule.
struct ScheduledPair {
  int msg = 0;
  int tx = 0;
  friend auto operator<=>(const ScheduledPair&, const ScheduledPair&) = default;
};

/// One-shot interference-avoidance schedule. Pairs are sorted by message.
struct Schedule {
  int k = 0;
  std::vector<ScheduledPair> pairs;
  std::size_t size() const { return pairs.size(); }
  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Transmitter `tx` of N(A) matched to receiver `rx` outside A.
struct MatchedPair {
  int tx = 0;
  int rx = 0;
  friend auto operator<=>(const MatchedPair&, const MatchedPair&) = default;
};

/// Evidence that receiver set A has pairwise-disjoint neighborhoods and that
/// the graph left after deleting A and every transmitter outside N(A) has a
/// matching covering N(A). Implies sum DoF <= K - |A| for any cooperation order.
struct Condition1Certificate {
  ReceiverSet a;
  std::vector<MatchedPair> matching;  // sorted by tx, one entry per element of N(A)
  Rational bound;
  friend bool operator==(const Condition1Certificate&, const Condition1Certificate&) = default;
};

/// Receivers partitioned into classes of identical neighborhoods.
struct NeighborGrouping {
  std::vector<std::vector<int>> groups;
  friend bool operator==(const NeighborGrouping&, const NeighborGrouping&) = default;
};

enum class CertificateKind { schedule, condition1, identical_neighbors, trivial };

struct DofCertificate {
  CertificateKind kind = CertificateKind::trivial;
  Rational value;
  std::variant<std::monostate, Schedule, Condition1Certificate, NeighborGrouping> evidence;
  friend bool operator==(const DofCertificate&, const DofCertificate&) = default;
};

std::string to_string(CertificateKind kind);
std::optional<CertificateKind> certificate_kind_from_string(const std::string& s);

/// Independent re-check of a schedule: ranges, distinct messages and
/// transmitters, links present, and no scheduled transmitter reaching another
/// scheduled receiver. Returns the first problem found.
std::optional<std::string> schedule_violation(const Topology& t, const Schedule& s);

/// Independent re-check of a Condition 1 certificate. Note the signature: no
/// message assignment or cooperation order is involved.
std::optional<std::string> condition1_violation(const Topology& t, const Condition1Certificate& c);

/// Re-validates any certificate against `t`, including that its value follows
/// from its evidence.
std::optional<std::string> certificate_violation(const Topology& t, const DofCertificate& c);

}  // namespace timcoop
