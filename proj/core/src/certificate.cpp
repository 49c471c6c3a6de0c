#include "timcoop/certificate.hpp"

#include <algorithm>
#include <set>

namespace timcoop {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

std::optional<std::string> grouping_violation(const Topology& t, const NeighborGrouping& g, const Rational& value) {
  std::vector<int> seen(static_cast<std::size_t>(t.k()) + 1, 0);
  std::int64_t expected = t.k();
  for (const auto& group : g.groups) {
    if (group.empty()) return "empty group in grouping";
    for (int rx : group) {
      if (rx < 1 || rx > t.k()) return "grouping names receiver " + std::to_string(rx) + " outside 1..K";
      if (seen[static_cast<std::size_t>(rx)]++) return "receiver " + std::to_string(rx) + " appears twice in grouping";
      if (!std::ranges::equal(t.neighbors(rx), t.neighbors(group.front()))) {
        return "receivers " + std::to_string(group.front()) + " and " + std::to_string(rx) +
               " are grouped but have different neighborhoods";
      }
    }
    const bool unreachable = t.neighbors(group.front()).empty();
    expected -= static_cast<std::int64_t>(group.size()) - (unreachable ? 0 : 1);
  }
  for (int rx = 1; rx <= t.k(); ++rx) {
    if (!seen[static_cast<std::size_t>(rx)]) return "receiver " + std::to_string(rx) + " missing from grouping";
  }
  if (value != Rational(expected)) return "grouping implies " + std::to_string(expected) + ", certificate claims " + to_string(value);
  return std::nullopt;
}

}  // namespace

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::schedule: return "schedule";
    case CertificateKind::condition1: return "condition1";
    case CertificateKind::identical_neighbors: return "identical-neighbors";
    case CertificateKind::trivial: return "trivial";
  }
  return "unknown";
}

std::optional<CertificateKind> certificate_kind_from_string(const std::string& s) {
  for (auto k : {CertificateKind::schedule, CertificateKind::condition1, CertificateKind::identical_neighbors,
                 CertificateKind::trivial}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::optional<std::string> schedule_violation(const Topology& t, const Schedule& s) {
  if (s.k != t.k()) return "schedule K=" + std::to_string(s.k) + " does not match topology K=" + std::to_string(t.k());
  if (s.pairs.size() > static_cast<std::size_t>(t.k())) return "schedule has more than K pairs";
  std::set<int> msgs, txs;
  for (const auto& p : s.pairs) {
    if (p.msg < 1 || p.msg > t.k() || p.tx < 1 || p.tx > t.k()) return "pair " + pair_str(p.msg, p.tx) + " out of range";
    if (!msgs.insert(p.msg).second) return "message " + std::to_string(p.msg) + " scheduled twice";
    if (!txs.insert(p.tx).second) return "transmitter " + std::to_string(p.tx) + " used twice";
    if (!t.has_link(p.msg, p.tx)) return "pair " + pair_str(p.msg, p.tx) + " uses an absent link";
  }
  for (const auto& p : s.pairs) {
    for (const auto& q : s.pairs) {
      if (p.msg != q.msg && t.has_link(p.msg, q.tx)) {
        return "transmitter " + std::to_string(q.tx) + " (serving " + std::to_string(q.msg) + ") interferes at receiver " +
               std::to_string(p.msg);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> condition1_violation(const Topology& t, const Condition1Certificate& c) {
  const auto members = c.a.members();
  for (int rx : members) {
    if (rx < 1 || rx > t.k()) return "A contains receiver " + std::to_string(rx) + " outside 1..K";
  }
  // Disjoint neighborhoods: each transmitter heard by at most one member of A.
  std::vector<int> owner(static_cast<std::size_t>(t.k()) + 1, 0);
  for (int rx : members) {
    for (int tx : t.neighbors(rx)) {
      int& o = owner[static_cast<std::size_t>(tx)];
      if (o != 0) {
        return "receivers " + std::to_string(o) + " and " + std::to_string(rx) + " share transmitter " + std::to_string(tx);
      }
      o = rx;
    }
  }
  std::set<int> covered, used_rx;
  for (const auto& m : c.matching) {
    if (m.tx < 1 || m.tx > t.k() || owner[static_cast<std::size_t>(m.tx)] == 0) {
      return "matched transmitter " + std::to_string(m.tx) + " is not in N(A)";
    }
    if (m.rx < 1 || m.rx > t.k() || c.a.contains(m.rx)) {
      return "transmitter " + std::to_string(m.tx) + " matched to receiver " + std::to_string(m.rx) + " not outside A";
    }
    if (!t.has_link(m.rx, m.tx)) return "matched pair tx " + std::to_string(m.tx) + " -> rx " + std::to_string(m.rx) + " is not a link";
    if (!covered.insert(m.tx).second) return "transmitter " + std::to_string(m.tx) + " matched twice";
    if (!used_rx.insert(m.rx).second) return "receiver " + std::to_string(m.rx) + " matched twice";
  }
  for (int tx = 1; tx <= t.k(); ++tx) {
    if (owner[static_cast<std::size_t>(tx)] != 0 && !covered.contains(tx)) {
      return "transmitter " + std::to_string(tx) + " of N(A) is not covered by the matching";
    }
  }
  const Rational expected(t.k() - static_cast<std::int64_t>(members.size()));
  if (c.bound != expected) return "bound " + to_string(c.bound) + " differs from K - |A| = " + to_string(expected);
  return std::nullopt;
}

std::optional<std::string> certificate_violation(const Topology& t, const DofCertificate& c) {
  switch (c.kind) {
    case CertificateKind::schedule: {
      const auto* s = std::get_if<Schedule>(&c.evidence);
      if (s == nullptr) return "schedule certificate without schedule evidence";
      if (auto err = schedule_violation(t, *s)) return err;
      if (c.value != Rational(static_cast<std::int64_t>(s->size()))) return "value differs from schedule size";
      return std::nullopt;
    }
    case CertificateKind::condition1: {
      const auto* cc = std::get_if<Condition1Certificate>(&c.evidence);
      if (cc == nullptr) return "condition1 certificate without condition1 evidence";
      if (auto err = condition1_violation(t, *cc)) return err;
      if (c.value != cc->bound) return "value differs from condition1 bound";
      return std::nullopt;
    }
    case CertificateKind::identical_neighbors: {
      const auto* g = std::get_if<NeighborGrouping>(&c.evidence);
      if (g == nullptr) return "identical-neighbors certificate without grouping evidence";
      return grouping_violation(t, *g, c.value);
    }
    case CertificateKind::trivial:
      if (!std::holds_alternative<std::monostate>(c.evidence)) return "trivial certificate carries evidence";
      if (c.value != Rational(t.k())) return "trivial certificate value must be K";
      return std::nullopt;
  }
  return "unknown certificate kind";
}

}  // namespace timcoop
