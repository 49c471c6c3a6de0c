#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace timcoop {

/// A directed channel from transmitter `tx` to receiver `rx`. Indices are 1-based.
struct Link {
  int rx = 0;
  int tx = 0;
  friend auto operator<=>(const Link&, const Link&) = default;
};

/// Number of consecutive slots a coefficient stays fixed before an
/// independent redraw. `constant()` pins it for the whole block.
class Coherence {
 public:
  constexpr Coherence() = default;
  static Coherence slots(int c);
  static constexpr Coherence constant() { return Coherence(kConstant); }

  constexpr bool is_constant() const { return value_ == kConstant; }
  /// Block length in slots; meaningless when is_constant().
  constexpr int period() const { return value_; }

  friend constexpr bool operator==(Coherence, Coherence) = default;

 private:
  static constexpr int kConstant = 0;
  constexpr explicit Coherence(int v) : value_(v) {}
  int value_ = 1;
};

/// Sorted, duplicate-free set of receiver indices in 1..K.
class ReceiverSet {
 public:
  ReceiverSet() = default;
  /// Throws std::invalid_argument on an index outside 1..k.
  ReceiverSet(int k, std::vector<int> members);

  std::span<const int> members() const { return members_; }
  bool contains(int rx) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const ReceiverSet&, const ReceiverSet&) = default;

 private:
  std::vector<int> members_;
};

/// Bipartite receiver/transmitter connectivity with per-link coherence times.
/// Immutable after construction.
class Topology {
 public:
  /// Validates indices, rejects duplicates, and requires every coherence entry
  /// to name a present link. Missing coherence entries default to 1.
  Topology(int k, std::vector<Link> links, const std::map<Link, Coherence>& coherence = {});

  int k() const { return k_; }
  std::span<const Link> links() const { return links_; }
  bool has_link(int rx, int tx) const;
  Coherence coherence(int rx, int tx) const;

  /// Transmitters heard by receiver `rx`, ascending.
  std::span<const int> neighbors(int rx) const;
  /// Receivers reached by transmitter `tx`, ascending.
  std::span<const int> reach(int tx) const;
  std::size_t degree(int rx) const { return neighbors(rx).size(); }

  /// Same topology with every coherence time replaced by `c`.
  Topology with_uniform_coherence(Coherence c) const;

  friend bool operator==(const Topology& a, const Topology& b);

 private:
  int k_;
  std::vector<Link> links_;
  std::vector<Coherence> coherence_;  // parallel to links_
  std::vector<std::uint8_t> dense_;   // k*k row-major, rx-major
  std::vector<std::vector<int>> rx_neighbors_;
  std::vector<std::vector<int>> tx_reach_;
};

/// Receiver i hears transmitters i and i-1.
Topology wyner(int k);
/// wyner(k) plus the wrap-around link from transmitter k to receiver 1.
Topology cyclic_wyner(int k);
Topology fully_connected(int k);
/// Three-user triangle: receiver r hears transmitters 1..r. Receiver 3's
/// interfering links hold for two slots; all others redraw every slot.
Topology figure4_example();
/// Each of the k*k links present independently with probability `density`.
Topology random_topology(int k, double density, std::uint64_t seed);

/// Union of the neighborhoods of receivers in `a`, ascending.
std::vector<int> neighbors(const Topology& t, const ReceiverSet& a);

/// Receivers grouped by identical neighborhoods; groups ordered by smallest member.
std::vector<std::vector<int>> identical_neighbor_groups(const Topology& t);

}  // namespace timcoop
