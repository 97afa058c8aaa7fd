#include <gtest/gtest.h>

#include <random>

#include "degseq/coloring.hpp"
#include "degseq/error.hpp"
#include "support.hpp"

using namespace degseq;

namespace {

EquitableColoring assign(std::vector<int> a, int c) { return EquitableColoring{std::move(a), c, std::nullopt}; }

}  // namespace

TEST(CheckColoring, Examples) {
  const auto c4 = check_coloring(cycle_graph(4), assign({0, 1, 0, 1}, 2));
  EXPECT_TRUE(c4.proper);
  EXPECT_TRUE(c4.equitable);
  EXPECT_EQ(c4.class_sizes, (std::vector<int>{2, 2}));

  // every 2-assignment of C5 has a monochromatic edge
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<int> a(5);
    for (int i = 0; i < 5; ++i) a[i] = (mask >> i) & 1;
    EXPECT_FALSE(check_coloring(cycle_graph(5), assign(a, 2)).proper);
  }

  EXPECT_FALSE(check_coloring(complete_graph(4), assign({0, 0, 1, 1}, 2)).proper);
  const auto lopsided = check_coloring(independent_set(4), assign({0, 0, 0, 1}, 2));
  EXPECT_TRUE(lopsided.proper);
  EXPECT_FALSE(lopsided.equitable);
}

TEST(HsColoring, Examples) {
  const auto i7 = hs_coloring(independent_set(7), 2);
  auto sizes = i7.class_sizes();
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{3, 4}));

  const auto k5 = hs_coloring(complete_graph(5), 5);
  EXPECT_EQ(k5.class_sizes(), (std::vector<int>(5, 1)));

  const Graph cube = [] {
    Graph g(8);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 3; ++b) g.add_edge(a, a ^ (1 << b));
    return g;
  }();
  EXPECT_TRUE(check_coloring(cube, hs_coloring(cube, 4)).ok());
}

TEST(HsColoring, RandomGraphs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    const int cap = std::uniform_int_distribution<int>(0, 6)(rng);
    const Graph g = testing_support::random_bounded(n, cap, 0.7, rng);
    const int c = g.max_degree() + 1;
    const auto f = hs_coloring(g, c, trial);
    const auto chk = check_coloring(g, f);
    ASSERT_TRUE(chk.proper) << "trial " << trial;
    ASSERT_TRUE(chk.equitable) << "trial " << trial;
    EXPECT_EQ(f.colors, c);
  }
}

TEST(HsColoring, MoreColoursThanNeeded) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing_support::random_bounded(20, 4, 0.6, rng);
    for (int c = g.max_degree() + 1; c <= 12; ++c) EXPECT_TRUE(check_coloring(g, hs_coloring(g, c, trial)).ok());
  }
}

TEST(HsColoring, Precondition) { EXPECT_THROW(hs_coloring(complete_graph(4), 3), Error); }

TEST(EquitableExact, Examples) {
  EXPECT_FALSE(equitable_exact(complete_bipartite(3, 3), 3).has_value());
  EXPECT_FALSE(equitable_exact(cycle_graph(7), 2).has_value());
  const auto split = equitable_exact(split_graph(2, 2), 4);
  ASSERT_TRUE(split.has_value());
  EXPECT_TRUE(check_coloring(split_graph(2, 2), *split).ok());
  EXPECT_TRUE(equitable_exact(cycle_graph(7), 3).has_value());
}

TEST(EquitableExact, OracleBound) {
  ExactColoringOptions opt;
  opt.max_n = 10;
  try {
    equitable_exact(cycle_graph(12), 3, opt);
    FAIL() << "expected OracleTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OracleTooLarge);
  }
}

TEST(EquitableExact, AgreesWithBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const Graph g = testing_support::random_graph(n, 0.5, rng);
    for (int c = 1; c <= n; ++c) {
      const auto f = equitable_exact(g, c);
      ASSERT_EQ(f.has_value(), testing_support::brute_equitable(g, c)) << "n=" << n << " c=" << c;
      if (f) EXPECT_TRUE(check_coloring(g, *f).ok());
    }
  }
}

TEST(EquitableExact, MonotoneInColoursAtSmallScale) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const Graph g = testing_support::random_graph(n, 0.45, rng);
    bool before = false;
    for (int c = 1; c <= n; ++c) {
      const bool now = equitable_exact(g, c).has_value();
      if (before) EXPECT_TRUE(now) << "n=" << n << " c=" << c;
      before = now;
    }
  }
}

TEST(EquitableExact, SplitGraphSharpness) {
  for (int s = 1; s <= 4; ++s)
    for (int t = 1; t <= 3; ++t) {
      const Graph g = split_graph(s, t);
      EXPECT_FALSE(equitable_exact(g, s + t - 1).has_value()) << "s=" << s << " t=" << t;
      EXPECT_TRUE(equitable_exact(g, s + t).has_value()) << "s=" << s << " t=" << t;
    }
}

TEST(ColoringJson, RoundTrip) {
  const auto f = assign({0, 1, 2, 0, 1}, 3);
  const auto text = coloring_to_json(f);
  EXPECT_EQ(text, "[1,2,3,1,2]");
  EXPECT_EQ(coloring_from_json(text, 3).assignment, f.assignment);
  EXPECT_THROW(coloring_from_json("[1,0]"), Error);
  EXPECT_THROW(coloring_from_json("{"), Error);
}
