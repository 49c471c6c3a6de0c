#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "timcoop/channel.hpp"
#include "timcoop/linalg.hpp"
#include "timcoop/rational.hpp"
#include "timcoop/scheme.hpp"
#include "timcoop/topology.hpp"

namespace timcoop {

/// Message `msg`'s contribution at receiver `rx`: the n x m_msg matrix
/// sum over j in T_msg reaching rx of diag(H_{rx,j}) V_{j,msg}.
/// Zero when no carrying transmitter reaches rx.
Matrix footprint(const Topology& t, const LinearScheme& s, const ChannelRealization& h, int msg, int rx);

/// Outcome of the interference-rank check on one message of a Wyner chain.
struct Lemma2Report {
  int message = 0;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  /// Trials whose desired matrix fell short of full column rank, so the
  /// claim was not tested.
  int hypothesis_not_met = 0;
  /// Trials where rank([A B]) < rank(A + B) for the first-hop interference
  /// terms; a sanity check that should never fire.
  int monotonicity_failures = 0;
  std::vector<std::uint64_t> counterexample_seeds;
};

/// For message i of a Wyner chain (3 <= i <= K-1, T_i within {i-1, i},
/// m_i >= 1), draws `trials` channels with seeds seed, seed+1, ... and
/// checks that whenever the desired matrix at receiver i has rank m_i, the
/// interference stack [I_{i,i-1} I_{i,i+1}] has rank >= m_i.
/// Throws std::invalid_argument on precondition violations.
Lemma2Report check_lemma2(const Topology& t, const LinearScheme& s, int msg, int trials, std::uint64_t seed);

enum class ReceiverStatus { inactive, decodable, undecodable };

struct ZfResult {
  std::vector<ReceiverStatus> status;  // index rx-1
  Rational dof;
  friend bool operator==(const ZfResult&, const ZfResult&) = default;
};

/// Generic zero-forcing test. Receiver i (m_i > 0) decodes iff its desired
/// footprint D has rank m_i and rank([D | J]) = m_i + rank(J), with J all
/// other messages' footprints at i. DoF counts m_i of decodable receivers
/// over n.
ZfResult zf_decodability(const Topology& t, const LinearScheme& s, const ChannelRealization& h);

struct MonteCarloVerdict {
  int trials = 0;
  std::uint64_t seed = 0;
  /// The most frequent outcome (earliest on ties).
  ZfResult outcome;
  bool generic = true;
  /// Seeds whose outcome differs from `outcome`.
  std::vector<std::uint64_t> dissenting_seeds;
  Rational min_dof;
  Rational max_dof;
  /// Trials in which every active receiver decoded.
  int all_decodable_trials = 0;
};

/// Runs zf_decodability on channels drawn with seeds seed + trial index.
MonteCarloVerdict monte_carlo_dof(const Topology& t, const LinearScheme& s, int trials, std::uint64_t seed);

/// n x m matrix with i.i.d. standard normal real entries, redrawn until its
/// rank is min(n, m).
Matrix random_full_rank(int n, int m, std::mt19937_64& rng);

/// Scheme on assignment `a` with m_i = `m` for every message with a nonempty
/// transmit set, and random full-rank precoders.
LinearScheme random_scheme(const MessageAssignment& a, int n, int m, std::uint64_t seed);

}  // namespace timcoop
