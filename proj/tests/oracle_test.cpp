#include <gtest/gtest.h>

#include <random>
#include <set>

#include "degseq/error.hpp"
#include "degseq/graph_io.hpp"
#include "degseq/oracle.hpp"
#include "support.hpp"

using namespace degseq;

namespace {

DegreeSequence seq(std::vector<int> v) { return normalize(v); }

}  // namespace

TEST(Enumerate, Counts) {
  EXPECT_EQ(count_realizations(seq({2, 2, 2})), 1u);
  EXPECT_EQ(count_realizations(seq({1, 1, 1, 1})), 3u);
  EXPECT_EQ(count_realizations(seq({3, 3, 1, 1})), 0u);
  EXPECT_EQ(count_realizations(seq({2, 2, 2, 2})), 3u);
  EXPECT_EQ(count_realizations(seq({0, 0})), 1u);
}

TEST(Enumerate, AgreesWithSubsetCount) {
  for (auto d : std::vector<std::vector<int>>{{2, 2, 2, 2, 2}, {3, 3, 2, 2, 2}, {3, 2, 2, 2, 1}, {4, 3, 3, 2, 2, 2},
                                               {2, 2, 2, 2, 2, 2}, {3, 3, 3, 3, 3, 3}, {5, 3, 3, 3, 2, 2}}) {
    EXPECT_EQ(count_realizations(seq(d)), testing_support::brute_count(d)) << to_string(seq(d));
  }
}

TEST(Enumerate, DistinctRealizations) {
  std::set<std::string> seen;
  const auto pi = seq({3, 3, 2, 2, 2});
  enumerate_realizations(pi, [&](const Graph& g) {
    EXPECT_EQ(g.degrees(), pi.vector());
    EXPECT_TRUE(seen.insert(encode_graph6(g)).second);
    return true;
  });
  EXPECT_EQ(seen.size(), testing_support::brute_count(pi.vector()));
}

TEST(Enumerate, StopsEarlyAndBudget) {
  int visited = 0;
  enumerate_realizations(seq({2, 2, 2, 2, 2, 2}), [&](const Graph&) { return ++visited < 2; });
  EXPECT_EQ(visited, 2);
  try {
    count_realizations(seq(std::vector<int>(9, 2)));
    FAIL() << "expected OracleTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OracleTooLarge);
  }
}

TEST(KFactor, Examples) {
  EXPECT_TRUE(has_k_factor(complete_graph(4), 1));
  EXPECT_FALSE(has_k_factor(cycle_graph(5), 1));
  EXPECT_TRUE(has_k_factor(complete_bipartite(3, 3), 3));
  const auto m = find_k_factor(complete_bipartite(3, 3), 1);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(m->is_regular(1));
  EXPECT_TRUE(complete_bipartite(3, 3).contains(*m));
}

TEST(KFactor, AgreesWithMatchingSearch) {
  std::mt19937_64 rng(41);
  OracleBudget b;
  b.max_n = 10;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 * std::uniform_int_distribution<int>(1, 5)(rng);
    const Graph g = testing_support::random_graph(n, 0.35, rng);
    for (int k = 1; k <= 2; ++k)
      EXPECT_EQ(has_k_factor(g, k, b), testing_support::brute_k_factor(g, k)) << "n=" << n << " k=" << k;
  }
}

TEST(KFactor, InvariantUnderRelabelling) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(4, 9)(rng);
    const Graph g = testing_support::random_graph(n, 0.5, rng);
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int k = 1; k <= 3; ++k) {
      OracleBudget b;
      b.max_n = 9;
      EXPECT_EQ(has_k_factor(g, k, b), has_k_factor(relabel(g, perm), k, b));
    }
  }
}

TEST(RealizationWithFactor, Examples) {
  EXPECT_TRUE(exists_realization_with_kfactor(seq({3, 3, 3, 3}), 1));
  EXPECT_FALSE(exists_realization_with_kfactor(seq({2, 2, 2, 2, 2}), 1));
  // removing a 2-factor leaves degrees (2,2,0,0,0,0), which no simple graph has
  EXPECT_FALSE(exists_realization_with_kfactor(seq({4, 4, 2, 2, 2, 2}), 2));
  const auto r = find_realization_with_kfactor(seq({3, 3, 3, 3}), 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->graph.contains(r->factor));
  EXPECT_TRUE(r->factor.is_regular(1));
}

TEST(MinEquitable, Examples) {
  EXPECT_EQ(min_equitable_colors(complete_graph(5)), 5);
  EXPECT_EQ(min_equitable_colors(cycle_graph(7)), 3);
  EXPECT_EQ(min_equitable_colors(split_graph(2, 2)), 4);
  EXPECT_EQ(min_equitable_colors(independent_set(6)), 1);
}
