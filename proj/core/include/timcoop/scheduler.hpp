#pragma once

#include "timcoop/certificate.hpp"
#include "timcoop/scheme.hpp"
#include "timcoop/topology.hpp"

namespace timcoop {

/// Largest K the exact search accepts without an explicit override.
inline constexpr int kExactScheduleLimit = 12;

/// Maximum-cardinality conflict-free schedule by branch and bound over
/// receivers in index order (serve with the lowest feasible transmitter
/// first, then skip). Returns the lexicographically smallest optimum.
/// Throws std::length_error when K > kExactScheduleLimit and !allow_large.
Schedule schedule_exact(const Topology& t, bool allow_large = false);

/// Scans receivers in increasing index and serves each with its
/// lowest-index transmitter that keeps the schedule conflict-free.
Schedule schedule_greedy(const Topology& t);

/// One-slot scheme realizing `s`: m_i = 1 with a unit precoder on the serving
/// transmitter for scheduled messages, nothing otherwise.
LinearScheme schedule_to_scheme(const Schedule& s, const Topology& t);

/// |schedule| as a certified lower bound. Exact search for K <= 12, greedy above.
DofCertificate achievable_dof(const Topology& t);

}  // namespace timcoop
