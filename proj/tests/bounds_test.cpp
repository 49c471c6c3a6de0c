#include <gtest/gtest.h>

#include "oracles.hpp"
#include "timcoop/bounds.hpp"
#include "timcoop/scheduler.hpp"

namespace timcoop {
namespace {

std::vector<char> membership(int k, std::span<const int> a) {
  std::vector<char> in(static_cast<std::size_t>(k) + 1, 0);
  for (int rx : a) in[static_cast<std::size_t>(rx)] = 1;
  return in;
}

TEST(Condition1, WynerSixPair) {
  const Topology t = wyner(6);
  const auto out = check_condition1(t, ReceiverSet(6, {2, 5}));
  ASSERT_TRUE(std::holds_alternative<Condition1Certificate>(out));
  const auto& c = std::get<Condition1Certificate>(out);
  EXPECT_EQ(c.bound, Rational(4));
  ASSERT_EQ(c.matching.size(), 4u);
  std::vector<int> txs;
  for (const auto& p : c.matching) {
    txs.push_back(p.tx);
    EXPECT_TRUE(t.has_link(p.rx, p.tx));
    EXPECT_NE(p.rx, 2);
    EXPECT_NE(p.rx, 5);
  }
  EXPECT_EQ(txs, (std::vector<int>{1, 2, 4, 5}));
  EXPECT_TRUE(oracle::covering_injection_exists(t, txs, membership(6, c.a.members())));
  EXPECT_FALSE(condition1_violation(t, c).has_value());
}

TEST(Condition1, EmptySetIsTrivial) {
  const auto out = check_condition1(wyner(4), ReceiverSet());
  ASSERT_TRUE(std::holds_alternative<Condition1Certificate>(out));
  EXPECT_EQ(std::get<Condition1Certificate>(out).bound, Rational(4));
  EXPECT_TRUE(std::get<Condition1Certificate>(out).matching.empty());
}

TEST(Condition1, FullyConnectedSingletonDeficient) {
  const auto out = check_condition1(fully_connected(3), ReceiverSet(3, {1}));
  ASSERT_TRUE(std::holds_alternative<Condition1Failure>(out));
  const auto& f = std::get<Condition1Failure>(out);
  EXPECT_EQ(f.reason, Condition1Failure::Reason::matching_deficiency);
  EXPECT_FALSE(f.witness.empty());
  EXPECT_FALSE(f.detail.empty());
}

TEST(Condition1, OverlapReported) {
  const auto out = check_condition1(wyner(6), ReceiverSet(6, {2, 3}));
  ASSERT_TRUE(std::holds_alternative<Condition1Failure>(out));
  const auto& f = std::get<Condition1Failure>(out);
  EXPECT_EQ(f.reason, Condition1Failure::Reason::overlap);
  EXPECT_EQ(f.witness, (std::vector<int>{2, 3, 2}));
}

TEST(Condition1, TamperedCertificatesRejected) {
  const Topology t = wyner(6);
  auto c = std::get<Condition1Certificate>(check_condition1(t, ReceiverSet(6, {2, 5})));
  auto wrong_bound = c;
  wrong_bound.bound = Rational(3);
  EXPECT_TRUE(condition1_violation(t, wrong_bound).has_value());
  auto into_a = c;
  into_a.matching[0].rx = 2;
  EXPECT_TRUE(condition1_violation(t, into_a).has_value());
  auto missing = c;
  missing.matching.pop_back();
  EXPECT_TRUE(condition1_violation(t, missing).has_value());
  auto overlapping = c;
  overlapping.a = ReceiverSet(6, {2, 3});
  overlapping.bound = Rational(4);
  EXPECT_TRUE(condition1_violation(t, overlapping).has_value());
}

TEST(Bounds, BestConditionOneWynerSix) {
  const DofCertificate c = best_condition1_bound(wyner(6));
  EXPECT_EQ(c.kind, CertificateKind::condition1);
  EXPECT_EQ(c.value, Rational(4));
  EXPECT_EQ(std::get<Condition1Certificate>(c.evidence).a, ReceiverSet(6, {2, 5}));
}

TEST(Bounds, BestConditionOneGreedyThirty) {
  const DofCertificate c = best_condition1_bound(wyner(30));
  EXPECT_EQ(c.value, Rational(20));
  EXPECT_FALSE(certificate_violation(wyner(30), c).has_value());
}

TEST(Bounds, FullyConnectedFallsBackToTrivial) {
  const DofCertificate c = best_condition1_bound(fully_connected(5));
  EXPECT_EQ(c.kind, CertificateKind::trivial);
  EXPECT_EQ(c.value, Rational(5));
}

TEST(Bounds, IdenticalNeighbors) {
  EXPECT_EQ(identical_neighbors_bound(fully_connected(5)).value, Rational(1));
  EXPECT_EQ(identical_neighbors_bound(wyner(5)).value, Rational(5));
  EXPECT_EQ(identical_neighbors_bound(Topology(3, {})).value, Rational(0));
  EXPECT_EQ(identical_neighbors_bound(Topology(3, {{1, 1}, {2, 1}})).value, Rational(1));
}

TEST(Bounds, UpperBoundSelection) {
  const DofCertificate full = upper_bound(fully_connected(4));
  EXPECT_EQ(full.kind, CertificateKind::identical_neighbors);
  EXPECT_EQ(full.value, Rational(1));
  const DofCertificate chain = upper_bound(wyner(6));
  EXPECT_EQ(chain.kind, CertificateKind::condition1);
  EXPECT_EQ(chain.value, Rational(4));
  const DofCertificate single = upper_bound(wyner(1));
  EXPECT_EQ(single.value, Rational(1));
  EXPECT_EQ(trivial_bound(wyner(7)).value, Rational(7));
}

TEST(Bounds, TamperedValueRejected) {
  DofCertificate c = upper_bound(wyner(6));
  c.value = Rational(3);
  EXPECT_TRUE(certificate_violation(wyner(6), c).has_value());
  DofCertificate g = identical_neighbors_bound(fully_connected(3));
  g.value = Rational(0);
  EXPECT_TRUE(certificate_violation(fully_connected(3), g).has_value());
}

TEST(BoundsProperty, ExhaustiveMatchesOracle) {
  for (int idx = 0; idx < 200; ++idx) {
    const int k = 1 + idx % 8;
    const Topology t = random_topology(k, std::array{0.15, 0.3, 0.5}[idx % 3], 500 + idx);
    const DofCertificate best = best_condition1_bound(t);
    EXPECT_FALSE(certificate_violation(t, best).has_value()) << idx;
    EXPECT_EQ(best.value, Rational(k - oracle::max_condition1_size(t))) << idx;
    const DofCertificate greedy = best_condition1_bound(t, 0);
    EXPECT_FALSE(certificate_violation(t, greedy).has_value()) << idx;
    EXPECT_LE(best.value, greedy.value) << idx;
  }
}

TEST(BoundsProperty, SandwichAndRevalidation) {
  for (int idx = 0; idx < 200; ++idx) {
    const int k = 1 + idx % 9;
    const Topology t = random_topology(k, std::array{0.2, 0.4, 0.7}[idx % 3], 9000 + idx);
    const DofCertificate lo = achievable_dof(t);
    const DofCertificate hi = upper_bound(t);
    EXPECT_FALSE(certificate_violation(t, lo).has_value()) << idx;
    EXPECT_FALSE(certificate_violation(t, hi).has_value()) << idx;
    EXPECT_LE(lo.value, hi.value) << idx;
    EXPECT_LE(hi.value, Rational(k)) << idx;
  }
}

// A set with disjoint neighborhoods whose covering matching fails must be rejected.
TEST(BoundsProperty, MatchingIsNecessary) {
  int exercised = 0;
  for (int idx = 0; idx < 300; ++idx) {
    const int k = 2 + idx % 6;
    const Topology t = random_topology(k, 0.35, 42 + idx);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> a;
      for (int rx = 1; rx <= k; ++rx)
        if (mask >> (rx - 1) & 1u) a.push_back(rx);
      const auto out = check_condition1(t, ReceiverSet(k, a));
      const bool oracle_ok = oracle::satisfies_condition1(t, mask);
      EXPECT_EQ(std::holds_alternative<Condition1Certificate>(out), oracle_ok) << idx << " mask " << mask;
      if (const auto* f = std::get_if<Condition1Failure>(&out);
          f && f->reason == Condition1Failure::Reason::matching_deficiency)
        ++exercised;
    }
  }
  EXPECT_GT(exercised, 0);
}

}  // namespace
}  // namespace timcoop
