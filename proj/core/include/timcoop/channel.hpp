#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "timcoop/topology.hpp"

namespace timcoop {

/// One draw of every link coefficient over an n-slot block. Absent links are
/// identically zero.
class ChannelRealization {
 public:
  ChannelRealization(int k, int n, std::uint64_t seed);

  int k() const { return k_; }
  int n() const { return n_; }
  std::uint64_t seed() const { return seed_; }

  /// Coefficients of link (rx, tx) for slots 0..n-1.
  std::span<const double> sequence(int rx, int tx) const;
  std::span<double> sequence(int rx, int tx);

 private:
  std::size_t offset(int rx, int tx) const;

  int k_;
  int n_;
  std::uint64_t seed_;
  std::vector<double> coeff_;
};

/// Draws every present link i.i.d. standard normal per coherence block.
/// Blocks are aligned to slot 0: a link with coherence c redraws at slots
/// 0, c, 2c, ...; a constant link draws once. Exact zeros are redrawn.
/// Deterministic in (t, n, seed).
ChannelRealization sample_channel(const Topology& t, int n, std::uint64_t seed);

}  // namespace timcoop
