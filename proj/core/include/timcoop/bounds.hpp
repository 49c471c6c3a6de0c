#pragma once

#include <string>
#include <variant>
#include <vector>

#include "timcoop/certificate.hpp"
#include "timcoop/topology.hpp"

namespace timcoop {

inline constexpr int kDefaultExhaustiveLimit = 12;

struct Condition1Failure {
  enum class Reason { overlap, matching_deficiency };
  Reason reason;
  /// overlap: the two receivers of A and a shared transmitter.
  /// matching_deficiency: transmitters of N(A) with too few receivers left.
  std::vector<int> witness;
  std::string detail;
};

using Condition1Outcome = std::variant<Condition1Certificate, Condition1Failure>;

/// Tests receiver set `a` against Condition 1 and, on success, returns the
/// covering matching found by augmenting paths.
Condition1Outcome check_condition1(const Topology& t, const ReceiverSet& a);

/// Smallest K - |A| over receiver sets satisfying Condition 1. Exhaustive DFS
/// when K <= exhaustive_limit, otherwise a single greedy pass. Among optimal
/// sets the exhaustive search prefers larger |N(A)|, then lexicographically
/// smaller A. Falls back to the trivial certificate when only A = {} works.
DofCertificate best_condition1_bound(const Topology& t, int exhaustive_limit = kDefaultExhaustiveLimit);

/// K minus (|g| - 1) for every group of receivers sharing a neighborhood,
/// minus |g| for a group with an empty neighborhood.
DofCertificate identical_neighbors_bound(const Topology& t);

DofCertificate trivial_bound(const Topology& t);

/// Minimum of the trivial, Condition 1 and identical-neighbor bounds. Ties go
/// to condition1, then identical_neighbors, then trivial.
DofCertificate upper_bound(const Topology& t, int exhaustive_limit = kDefaultExhaustiveLimit);

}  // namespace timcoop
