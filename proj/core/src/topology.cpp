#include "timcoop/topology.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace timcoop {

namespace {

std::string link_str(const Link& l) {
  return "(" + std::to_string(l.rx) + ", " + std::to_string(l.tx) + ")";
}

}  // namespace

Coherence Coherence::slots(int c) {
  if (c < 1) throw std::invalid_argument("coherence time must be >= 1, got " + std::to_string(c));
  return Coherence(c);
}

ReceiverSet::ReceiverSet(int k, std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int rx : members_) {
    if (rx < 1 || rx > k) {
      throw std::invalid_argument("receiver " + std::to_string(rx) + " outside 1.." + std::to_string(k));
    }
  }
}

bool ReceiverSet::contains(int rx) const {
  return std::binary_search(members_.begin(), members_.end(), rx);
}

Topology::Topology(int k, std::vector<Link> links, const std::map<Link, Coherence>& coherence)
    : k_(k), links_(std::move(links)) {
  if (k < 1) throw std::invalid_argument("K must be >= 1, got " + std::to_string(k));
  std::sort(links_.begin(), links_.end());
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const Link& l = links_[i];
    if (l.rx < 1 || l.rx > k || l.tx < 1 || l.tx > k) {
      throw std::invalid_argument("link " + link_str(l) + " outside 1.." + std::to_string(k));
    }
    if (i > 0 && links_[i - 1] == l) throw std::invalid_argument("duplicate link " + link_str(l));
  }

  const auto kk = static_cast<std::size_t>(k);
  dense_.assign(kk * kk, 0);
  rx_neighbors_.assign(kk + 1, {});
  tx_reach_.assign(kk + 1, {});
  coherence_.assign(links_.size(), Coherence{});
  for (std::size_t i = 0; i < links_.size(); ++i) {
    const Link& l = links_[i];
    dense_[static_cast<std::size_t>(l.rx - 1) * kk + static_cast<std::size_t>(l.tx - 1)] = 1;
    rx_neighbors_[static_cast<std::size_t>(l.rx)].push_back(l.tx);
  }
  for (int tx = 1; tx <= k; ++tx) {
    for (int rx = 1; rx <= k; ++rx) {
      if (has_link(rx, tx)) tx_reach_[static_cast<std::size_t>(tx)].push_back(rx);
    }
  }
  for (const auto& [link, c] : coherence) {
    auto it = std::lower_bound(links_.begin(), links_.end(), link);
    if (it == links_.end() || *it != link) {
      throw std::invalid_argument("coherence given for absent link " + link_str(link));
    }
    coherence_[static_cast<std::size_t>(it - links_.begin())] = c;
  }
}

bool Topology::has_link(int rx, int tx) const {
  if (rx < 1 || rx > k_ || tx < 1 || tx > k_) return false;
  const auto kk = static_cast<std::size_t>(k_);
  return dense_[static_cast<std::size_t>(rx - 1) * kk + static_cast<std::size_t>(tx - 1)] != 0;
}

Coherence Topology::coherence(int rx, int tx) const {
  const Link key{rx, tx};
  auto it = std::lower_bound(links_.begin(), links_.end(), key);
  if (it == links_.end() || *it != key) {
    throw std::out_of_range("no link " + link_str(key));
  }
  return coherence_[static_cast<std::size_t>(it - links_.begin())];
}

std::span<const int> Topology::neighbors(int rx) const {
  if (rx < 1 || rx > k_) throw std::out_of_range("receiver " + std::to_string(rx) + " out of range");
  return rx_neighbors_[static_cast<std::size_t>(rx)];
}

std::span<const int> Topology::reach(int tx) const {
  if (tx < 1 || tx > k_) throw std::out_of_range("transmitter " + std::to_string(tx) + " out of range");
  return tx_reach_[static_cast<std::size_t>(tx)];
}

Topology Topology::with_uniform_coherence(Coherence c) const {
  std::map<Link, Coherence> coh;
  for (const Link& l : links_) coh.emplace(l, c);
  return Topology(k_, links_, coh);
}

bool operator==(const Topology& a, const Topology& b) {
  return a.k_ == b.k_ && a.links_ == b.links_ && a.coherence_ == b.coherence_;
}

Topology wyner(int k) {
  if (k < 1) throw std::invalid_argument("wyner: K must be >= 1");
  std::vector<Link> links;
  for (int i = 1; i <= k; ++i) {
    if (i >= 2) links.push_back({i, i - 1});
    links.push_back({i, i});
  }
  return Topology(k, std::move(links));
}

Topology cyclic_wyner(int k) {
  if (k < 2) throw std::invalid_argument("cyclic_wyner: K must be >= 2");
  Topology base = wyner(k);
  std::vector<Link> links(base.links().begin(), base.links().end());
  links.push_back({1, k});
  return Topology(k, std::move(links));
}

Topology fully_connected(int k) {
  if (k < 1) throw std::invalid_argument("fully_connected: K must be >= 1");
  std::vector<Link> links;
  for (int rx = 1; rx <= k; ++rx) {
    for (int tx = 1; tx <= k; ++tx) links.push_back({rx, tx});
  }
  return Topology(k, std::move(links));
}

Topology figure4_example() {
  std::vector<Link> links{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
  std::map<Link, Coherence> coh{
      {{3, 1}, Coherence::slots(2)},
      {{3, 2}, Coherence::slots(2)},
  };
  return Topology(3, std::move(links), coh);
}

Topology random_topology(int k, double density, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_topology: K must be >= 1");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("random_topology: density outside [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Link> links;
  for (int rx = 1; rx <= k; ++rx) {
    for (int tx = 1; tx <= k; ++tx) {
      if (coin(rng)) links.push_back({rx, tx});
    }
  }
  return Topology(k, std::move(links));
}

std::vector<int> neighbors(const Topology& t, const ReceiverSet& a) {
  std::vector<int> out;
  for (int rx : a.members()) {
    if (rx > t.k()) throw std::out_of_range("receiver set exceeds K");
    auto nb = t.neighbors(rx);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> identical_neighbor_groups(const Topology& t) {
  // Receivers are visited in ascending order, so each group's first member is
  // its smallest and first-appearance order is the required group order.
  std::map<std::vector<int>, std::size_t> slot;
  std::vector<std::vector<int>> groups;
  for (int rx = 1; rx <= t.k(); ++rx) {
    auto nb = t.neighbors(rx);
    std::vector<int> key(nb.begin(), nb.end());
    auto [it, inserted] = slot.emplace(std::move(key), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(rx);
  }
  return groups;
}

}  // namespace timcoop
