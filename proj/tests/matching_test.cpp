#include <gtest/gtest.h>

#include <random>
#include <set>

#include "timcoop/matching.hpp"

namespace timcoop {
namespace {

TEST(Matching, PerfectOnPath) {
  BipartiteMatcher m(3, 3);
  m.add_edge(0, 0);
  m.add_edge(0, 1);
  m.add_edge(1, 1);
  m.add_edge(1, 2);
  m.add_edge(2, 2);
  EXPECT_EQ(m.solve(), 3);
  EXPECT_EQ(m.mate_of_left(0), 0);
  EXPECT_EQ(m.mate_of_left(1), 1);
  EXPECT_EQ(m.mate_of_left(2), 2);
  EXPECT_TRUE(m.deficient_left_set().empty());
}

TEST(Matching, AugmentingPathReroutes) {
  BipartiteMatcher m(2, 2);
  m.add_edge(0, 0);
  m.add_edge(0, 1);
  m.add_edge(1, 0);
  EXPECT_EQ(m.solve(), 2);
  EXPECT_EQ(m.mate_of_left(1), 0);
  EXPECT_EQ(m.mate_of_left(0), 1);
}

TEST(Matching, HallViolatorReported) {
  BipartiteMatcher m(3, 3);
  m.add_edge(0, 0);
  m.add_edge(1, 0);
  m.add_edge(2, 1);
  EXPECT_EQ(m.solve(), 2);
  EXPECT_EQ(m.deficient_left_set(), (std::vector<int>{0, 1}));
}

TEST(Matching, EmptySides) {
  BipartiteMatcher m(0, 4);
  EXPECT_EQ(m.solve(), 0);
  EXPECT_TRUE(m.deficient_left_set().empty());
  BipartiteMatcher lonely(1, 0);
  EXPECT_EQ(lonely.solve(), 0);
  EXPECT_EQ(lonely.deficient_left_set(), (std::vector<int>{0}));
}

// Brute force over all injections from left to right (or largest partial).
int brute_max_matching(int nl, int nr, const std::vector<std::pair<int, int>>& edges) {
  int best = 0;
  const std::size_t e = edges.size();
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    std::set<int> l, r;
    bool ok = true;
    for (std::size_t i = 0; i < e && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      ok = l.insert(edges[i].first).second && r.insert(edges[i].second).second;
    }
    if (ok) best = std::max(best, static_cast<int>(l.size()));
  }
  (void)nl;
  (void)nr;
  return best;
}

TEST(MatchingProperty, MaximumAndWitnessSound) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int nl = 1 + static_cast<int>(rng() % 5);
    const int nr = 1 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < nl; ++a)
      for (int b = 0; b < nr; ++b)
        if (rng() % 3 == 0) edges.emplace_back(a, b);
    if (edges.size() > 14) edges.resize(14);
    BipartiteMatcher m(nl, nr);
    for (auto [a, b] : edges) m.add_edge(a, b);
    const int size = m.solve();
    EXPECT_EQ(size, brute_max_matching(nl, nr, edges));

    // Mates are consistent and use real edges.
    for (int a = 0; a < nl; ++a) {
      const int b = m.mate_of_left(a);
      if (b < 0) continue;
      EXPECT_EQ(m.mate_of_right(b), a);
      EXPECT_NE(std::find(edges.begin(), edges.end(), std::make_pair(a, b)), edges.end());
    }

    const auto witness = m.deficient_left_set();
    EXPECT_EQ(witness.empty(), size == nl);
    std::set<int> nbrs;
    for (auto [a, b] : edges)
      if (std::find(witness.begin(), witness.end(), a) != witness.end()) nbrs.insert(b);
    if (!witness.empty()) EXPECT_LT(nbrs.size(), witness.size());
  }
}

}  // namespace
}  // namespace timcoop
