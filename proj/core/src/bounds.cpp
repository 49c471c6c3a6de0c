#include "timcoop/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "timcoop/matching.hpp"

namespace timcoop {

namespace {

// Tracks which member of A hears each transmitter.
class ReceiverSetState {
 public:
  explicit ReceiverSetState(const Topology& t)
      : t_(t), owner_(static_cast<std::size_t>(t.k()) + 1, 0), in_a_(static_cast<std::size_t>(t.k()) + 1, 0) {}

  bool disjoint_from(int rx) const {
    return std::ranges::none_of(t_.neighbors(rx), [&](int tx) { return owner_[static_cast<std::size_t>(tx)] != 0; });
  }
  void push(int rx) {
    for (int tx : t_.neighbors(rx)) owner_[static_cast<std::size_t>(tx)] = rx;
    in_a_[static_cast<std::size_t>(rx)] = 1;
    members_.push_back(rx);
    n_size_ += t_.degree(rx);
  }
  void pop() {
    const int rx = members_.back();
    for (int tx : t_.neighbors(rx)) owner_[static_cast<std::size_t>(tx)] = 0;
    in_a_[static_cast<std::size_t>(rx)] = 0;
    members_.pop_back();
    n_size_ -= t_.degree(rx);
  }

  const std::vector<int>& members() const { return members_; }
  std::size_t n_size() const { return n_size_; }
  std::size_t complement_size() const { return static_cast<std::size_t>(t_.k()) - members_.size(); }

  // Whether the reduced graph (receivers outside A vs N(A)) has a matching
  // covering N(A).
  bool covers() const {
    std::vector<int> txs;
    for (int tx = 1; tx <= t_.k(); ++tx) {
      if (owner_[static_cast<std::size_t>(tx)] != 0) txs.push_back(tx);
    }
    BipartiteMatcher m(static_cast<int>(txs.size()), t_.k());
    for (std::size_t i = 0; i < txs.size(); ++i) {
      for (int rx : t_.reach(txs[i])) {
        if (!in_a_[static_cast<std::size_t>(rx)]) m.add_edge(static_cast<int>(i), rx - 1);
      }
    }
    return m.solve() == static_cast<int>(txs.size());
  }

  // Both prunes are monotone: once violated, every superset of A violates them.
  bool admits(int rx) const {
    return disjoint_from(rx) && complement_size() - 1 >= n_size_ + t_.degree(rx);
  }

 private:
  const Topology& t_;
  std::vector<int> owner_;
  std::vector<char> in_a_;
  std::vector<int> members_;
  std::size_t n_size_ = 0;
};

class ExhaustiveCondition1Search {
 public:
  explicit ExhaustiveCondition1Search(const Topology& t) : t_(t), state_(t) {}

  std::vector<int> run() {
    visit(1);
    return best_;
  }

 private:
  // Receivers are included before being skipped, so sets are met in
  // lexicographic order and only strict improvements replace the incumbent.
  void visit(int rx) {
    const auto size = state_.members().size();
    if (size > best_.size() || (size == best_.size() && state_.n_size() > best_n_size_)) {
      best_ = state_.members();
      best_n_size_ = state_.n_size();
    }
    if (rx > t_.k() || size + static_cast<std::size_t>(t_.k() - rx + 1) < best_.size()) return;
    if (state_.admits(rx)) {
      state_.push(rx);
      if (state_.covers()) visit(rx + 1);
      state_.pop();
    }
    visit(rx + 1);
  }

  const Topology& t_;
  ReceiverSetState state_;
  std::vector<int> best_;
  std::size_t best_n_size_ = 0;
};

std::vector<int> greedy_condition1_set(const Topology& t) {
  ReceiverSetState state(t);
  for (int rx = 1; rx <= t.k(); ++rx) {
    if (!state.admits(rx)) continue;
    state.push(rx);
    if (!state.covers()) state.pop();
  }
  return state.members();
}

DofCertificate checked(const Topology& t, DofCertificate cert) {
  if (auto err = certificate_violation(t, cert)) {
    throw std::logic_error("bound search produced an invalid " + to_string(cert.kind) + " certificate: " + *err);
  }
  return cert;
}

}  // namespace

Condition1Outcome check_condition1(const Topology& t, const ReceiverSet& a) {
  for (int rx : a.members()) {
    if (rx < 1 || rx > t.k()) throw std::out_of_range("check_condition1: receiver " + std::to_string(rx) + " outside 1..K");
  }
  std::vector<int> owner(static_cast<std::size_t>(t.k()) + 1, 0);
  for (int rx : a.members()) {
    for (int tx : t.neighbors(rx)) {
      int& o = owner[static_cast<std::size_t>(tx)];
      if (o != 0) {
        return Condition1Failure{Condition1Failure::Reason::overlap,
                                 {o, rx, tx},
                                 "receivers " + std::to_string(o) + " and " + std::to_string(rx) +
                                     " both hear transmitter " + std::to_string(tx)};
      }
      o = rx;
    }
  }

  std::vector<int> txs;
  for (int tx = 1; tx <= t.k(); ++tx) {
    if (owner[static_cast<std::size_t>(tx)] != 0) txs.push_back(tx);
  }
  BipartiteMatcher matcher(static_cast<int>(txs.size()), t.k());
  for (std::size_t i = 0; i < txs.size(); ++i) {
    for (int rx : t.reach(txs[i])) {
      if (!a.contains(rx)) matcher.add_edge(static_cast<int>(i), rx - 1);
    }
  }
  if (matcher.solve() < static_cast<int>(txs.size())) {
    std::vector<int> witness;
    for (int i : matcher.deficient_left_set()) witness.push_back(txs[static_cast<std::size_t>(i)]);
    std::string detail = "no matching covers N(A): transmitters {";
    for (std::size_t i = 0; i < witness.size(); ++i) detail += (i ? ", " : "") + std::to_string(witness[i]);
    detail += "} reach fewer receivers outside A than their number";
    return Condition1Failure{Condition1Failure::Reason::matching_deficiency, std::move(witness), std::move(detail)};
  }

  Condition1Certificate cert;
  cert.a = a;
  for (std::size_t i = 0; i < txs.size(); ++i) {
    cert.matching.push_back({txs[i], matcher.mate_of_left(static_cast<int>(i)) + 1});
  }
  cert.bound = Rational(t.k() - static_cast<std::int64_t>(a.size()));
  return cert;
}

DofCertificate trivial_bound(const Topology& t) {
  return DofCertificate{CertificateKind::trivial, Rational(t.k()), std::monostate{}};
}

DofCertificate best_condition1_bound(const Topology& t, int exhaustive_limit) {
  std::vector<int> best = t.k() <= exhaustive_limit ? ExhaustiveCondition1Search(t).run() : greedy_condition1_set(t);
  if (best.empty()) return trivial_bound(t);
  auto outcome = check_condition1(t, ReceiverSet(t.k(), std::move(best)));
  auto* cert = std::get_if<Condition1Certificate>(&outcome);
  if (cert == nullptr) {
    throw std::logic_error("condition1 search returned a set that fails: " + std::get<Condition1Failure>(outcome).detail);
  }
  const Rational value = cert->bound;
  return checked(t, DofCertificate{CertificateKind::condition1, value, std::move(*cert)});
}

DofCertificate identical_neighbors_bound(const Topology& t) {
  NeighborGrouping grouping{identical_neighbor_groups(t)};
  std::int64_t value = t.k();
  for (const auto& g : grouping.groups) {
    const bool unreachable = t.neighbors(g.front()).empty();
    value -= static_cast<std::int64_t>(g.size()) - (unreachable ? 0 : 1);
  }
  return checked(t, DofCertificate{CertificateKind::identical_neighbors, Rational(value), std::move(grouping)});
}

DofCertificate upper_bound(const Topology& t, int exhaustive_limit) {
  DofCertificate best = best_condition1_bound(t, exhaustive_limit);
  DofCertificate grouped = identical_neighbors_bound(t);
  if (grouped.value < best.value || (grouped.value == best.value && best.kind == CertificateKind::trivial)) {
    best = std::move(grouped);
  }
  return best;
}

}  // namespace timcoop
