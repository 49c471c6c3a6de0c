#include "timcoop/channel.hpp"

#include <random>
#include <stdexcept>

namespace timcoop {

ChannelRealization::ChannelRealization(int k, int n, std::uint64_t seed)
    : k_(k), n_(n), seed_(seed), coeff_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k) * static_cast<std::size_t>(n), 0.0) {
  if (k < 1 || n < 1) throw std::invalid_argument("channel: K and n must be >= 1");
}

std::size_t ChannelRealization::offset(int rx, int tx) const {
  if (rx < 1 || rx > k_ || tx < 1 || tx > k_) throw std::out_of_range("channel: link index out of range");
  const auto kk = static_cast<std::size_t>(k_);
  return (static_cast<std::size_t>(rx - 1) * kk + static_cast<std::size_t>(tx - 1)) * static_cast<std::size_t>(n_);
}

std::span<const double> ChannelRealization::sequence(int rx, int tx) const {
  return std::span<const double>(coeff_).subspan(offset(rx, tx), static_cast<std::size_t>(n_));
}

std::span<double> ChannelRealization::sequence(int rx, int tx) {
  return std::span<double>(coeff_).subspan(offset(rx, tx), static_cast<std::size_t>(n_));
}

ChannelRealization sample_channel(const Topology& t, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_channel: n must be >= 1");
  ChannelRealization h(t.k(), n, seed);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&] {
    double v = 0.0;
    while (v == 0.0) v = normal(rng);
    return v;
  };
  for (const Link& l : t.links()) {
    const Coherence c = t.coherence(l.rx, l.tx);
    const int block = c.is_constant() ? n : c.period();
    auto seq = h.sequence(l.rx, l.tx);
    double value = 0.0;
    for (int slot = 0; slot < n; ++slot) {
      if (slot % block == 0) value = draw();
      seq[static_cast<std::size_t>(slot)] = value;
    }
  }
  return h;
}

}  // namespace timcoop
