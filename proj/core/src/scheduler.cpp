#include "timcoop/scheduler.hpp"

#include <stdexcept>
#include <string>

namespace timcoop {

namespace {

class ScheduleState {
 public:
  explicit ScheduleState(const Topology& t) : t_(t), tx_used_(static_cast<std::size_t>(t.k()) + 1, 0) {}

  // Adding (msg, tx) keeps the schedule conflict-free.
  bool compatible(int msg, int tx) const {
    if (tx_used_[static_cast<std::size_t>(tx)]) return false;
    for (const auto& p : pairs_) {
      if (t_.has_link(msg, p.tx) || t_.has_link(p.msg, tx)) return false;
    }
    return true;
  }
  void push(int msg, int tx) {
    pairs_.push_back({msg, tx});
    tx_used_[static_cast<std::size_t>(tx)] = 1;
  }
  void pop() {
    tx_used_[static_cast<std::size_t>(pairs_.back().tx)] = 0;
    pairs_.pop_back();
  }
  const std::vector<ScheduledPair>& pairs() const { return pairs_; }

 private:
  const Topology& t_;
  std::vector<char> tx_used_;
  std::vector<ScheduledPair> pairs_;
};

class ExactSearch {
 public:
  explicit ExactSearch(const Topology& t) : t_(t), state_(t) {}

  std::vector<ScheduledPair> run() {
    visit(1);
    return best_;
  }

 private:
  // Options are explored in lexicographic order of the resulting pair
  // sequence, so only a strictly larger schedule replaces the incumbent.
  void visit(int rx) {
    const auto size = state_.pairs().size();
    if (size > best_.size()) best_ = state_.pairs();
    const auto remaining = static_cast<std::size_t>(t_.k() - rx + 1);
    if (rx > t_.k() || size + remaining <= best_.size()) return;
    for (int tx : t_.neighbors(rx)) {
      if (!state_.compatible(rx, tx)) continue;
      state_.push(rx, tx);
      visit(rx + 1);
      state_.pop();
    }
    visit(rx + 1);
  }

  const Topology& t_;
  ScheduleState state_;
  std::vector<ScheduledPair> best_;
};

}  // namespace

Schedule schedule_exact(const Topology& t, bool allow_large) {
  if (t.k() > kExactScheduleLimit && !allow_large) {
    throw std::length_error("schedule_exact: K=" + std::to_string(t.k()) + " exceeds the exact-search limit of " +
                            std::to_string(kExactScheduleLimit));
  }
  return Schedule{t.k(), ExactSearch(t).run()};
}

Schedule schedule_greedy(const Topology& t) {
  ScheduleState state(t);
  for (int rx = 1; rx <= t.k(); ++rx) {
    for (int tx : t.neighbors(rx)) {
      if (state.compatible(rx, tx)) {
        state.push(rx, tx);
        break;
      }
    }
  }
  return Schedule{t.k(), state.pairs()};
}

LinearScheme schedule_to_scheme(const Schedule& s, const Topology& t) {
  if (auto err = schedule_violation(t, s)) throw std::invalid_argument("schedule_to_scheme: " + *err);
  std::vector<int> m(static_cast<std::size_t>(t.k()), 0);
  std::vector<std::vector<int>> sets(static_cast<std::size_t>(t.k()));
  std::map<PrecoderKey, Matrix> precoders;
  for (const auto& p : s.pairs) {
    m[static_cast<std::size_t>(p.msg - 1)] = 1;
    sets[static_cast<std::size_t>(p.msg - 1)] = {p.tx};
    precoders.emplace(PrecoderKey{p.tx, p.msg}, Matrix::Ones(1, 1));
  }
  return LinearScheme(1, std::move(m), MessageAssignment(t.k(), std::move(sets)), std::move(precoders));
}

DofCertificate achievable_dof(const Topology& t) {
  Schedule s = t.k() <= kExactScheduleLimit ? schedule_exact(t) : schedule_greedy(t);
  DofCertificate cert{CertificateKind::schedule, Rational(static_cast<std::int64_t>(s.size())), std::move(s)};
  if (auto err = certificate_violation(t, cert)) {
    throw std::logic_error("achievable_dof produced an invalid schedule: " + *err);
  }
  return cert;
}

}  // namespace timcoop
