#include <gtest/gtest.h>

#include <functional>

#include "degseq/construct.hpp"
#include "degseq/error.hpp"
#include "degseq/oracle.hpp"
#include "support.hpp"

using namespace degseq;

namespace {

DegreeSequence seq(std::vector<int> v) { return normalize(v); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

void expect_factor_realization(const DegreeSequence& pi, int k, const RealizationResult& r) {
  EXPECT_EQ(degree_sequence_of(r.graph), pi);
  ASSERT_TRUE(r.factors.has_value());
  ASSERT_EQ(r.factors->factor_count(), 1);
  const Graph f = r.factors->factor(0);
  EXPECT_TRUE(f.is_regular(k));
  EXPECT_TRUE(r.graph.contains(f));
  EXPECT_EQ(r.factors->check(), "");
  EXPECT_TRUE(r.all_passed());
}

void for_each_graphic(int n, const std::function<void(const DegreeSequence&)>& visit) {
  std::vector<int> d(n, 0);
  std::function<void(int, int)> go = [&](int i, int cap) {
    if (i == n) {
      const auto pi = normalize(d);
      if (is_graphic(pi)) visit(pi);
      return;
    }
    for (int x = cap; x >= 0; --x) {
      d[i] = x;
      go(i + 1, x);
    }
  };
  go(0, n - 1);
}

}  // namespace

TEST(HavelHakimi, Examples) {
  EXPECT_EQ(havel_hakimi(seq({2, 2, 2})), complete_graph(3));
  const Graph m = havel_hakimi(seq({1, 1, 1, 1}));
  EXPECT_EQ(m.edge_count(), 2u);
  EXPECT_TRUE(m.is_regular(1));
  EXPECT_EQ(havel_hakimi(seq({4, 4, 2, 2, 2})), split_graph(2, 2));
  EXPECT_EQ(kind_of([] { havel_hakimi(seq({3, 3, 1, 1})); }), ErrorKind::NotGraphic);
}

TEST(HavelHakimi, RealizesEveryGraphicSequence) {
  for (int n = 1; n <= 7; ++n)
    for_each_graphic(n, [](const DegreeSequence& pi) {
      const Graph g = havel_hakimi(pi);
      EXPECT_EQ(g.degrees(), pi.vector()) << to_string(pi);
    });
}

TEST(RealizeWithFactor, Examples) {
  const auto k4 = realize_with_factor(seq({3, 3, 3, 3}), FactorSpec{1});
  expect_factor_realization(seq({3, 3, 3, 3}), 1, k4);
  EXPECT_EQ(k4.graph, complete_graph(4));

  const auto c4 = realize_with_factor(seq({2, 2, 2, 2}), FactorSpec{2});
  expect_factor_realization(seq({2, 2, 2, 2}), 2, c4);
  EXPECT_EQ(c4.factors->factor(0), c4.graph);

  ASSERT_TRUE(exists_realization_with_kfactor(seq({3, 3, 2, 2, 2}), 2));
  expect_factor_realization(seq({3, 3, 2, 2, 2}), 2, realize_with_factor(seq({3, 3, 2, 2, 2}), FactorSpec{2}));
}

TEST(RealizeWithFactor, Preconditions) {
  EXPECT_EQ(kind_of([] { realize_with_factor(seq({3, 3, 1, 1}), FactorSpec{1}); }), ErrorKind::NotGraphic);
  EXPECT_EQ(kind_of([] { realize_with_factor(seq({2, 2, 2}), FactorSpec{1}); }), ErrorKind::ParityError);
  EXPECT_EQ(kind_of([] { realize_with_factor(seq({4, 4, 2, 2, 2, 2}), FactorSpec{2}); }), ErrorKind::NotGraphic);
}

TEST(RealizeWithFactor, MatchesOracleOnSmallSequences) {
  for (int n = 2; n <= 7; ++n)
    for_each_graphic(n, [&](const DegreeSequence& pi) {
      for (int k = 1; k <= pi.min_degree(); ++k) {
        if ((k * n) % 2 != 0) continue;
        const auto shifted = shift(pi, k);
        if (!is_graphic(std::span<const int>(shifted))) continue;
        // both graphic, so a realization with a k-factor exists
        const auto r = realize_with_factor(pi, FactorSpec{k});
        expect_factor_realization(pi, k, r);
      }
    });
}

TEST(PackFactor, Examples) {
  const Graph m = pack_factor(seq(std::vector<int>(6, 1)), Graph(6));
  EXPECT_TRUE(m.is_regular(1));

  const Graph c8 = cycle_graph(8);
  const Graph avoid = pack_factor(seq(std::vector<int>(8, 1)), c8);
  EXPECT_TRUE(avoid.is_regular(1));
  EXPECT_TRUE(avoid.edge_disjoint(c8));
  EXPECT_TRUE(testing_support::brute_k_factor(complement(c8), 1));

  const Graph c5 = pack_factor(seq(std::vector<int>(5, 2)), Graph(5));
  EXPECT_TRUE(c5.is_regular(2));
  EXPECT_EQ(c5.edge_count(), 5u);
}

TEST(PackFactor, ImpossiblePacking) {
  // the complement of K_{3,3} is two disjoint triangles, which have no 1-factor
  try {
    pack_factor(seq(std::vector<int>(6, 1)), complete_bipartite(3, 3));
    FAIL() << "expected a packing failure";
  } catch (const Error& e) {
    EXPECT_TRUE(e.kind() == ErrorKind::PackingFailed || e.kind() == ErrorKind::TheoremViolation) << e.what();
  }
}

TEST(FactorRealization, Examples) {
  const auto r = thm3_construct(seq({3, 3, 3, 3}), FactorSpec{1});
  expect_factor_realization(seq({3, 3, 3, 3}), 1, r);
  EXPECT_EQ(kind_of([] { thm3_construct(seq({4, 4, 2, 2, 2, 2}), FactorSpec{2}); }), ErrorKind::CriterionFails);
}

TEST(FactorRealization, RegularSequences) {
  for (int n = 2; n <= 8; ++n)
    for (int d = 1; d < n; ++d) {
      if ((d * n) % 2 != 0) continue;
      const auto pi = seq(std::vector<int>(n, d));
      for (int k = 0; k <= d; ++k) {
        if ((k * n) % 2 != 0) continue;
        const auto r = thm3_construct(pi, FactorSpec{k});
        expect_factor_realization(pi, k, r);
      }
    }
}

TEST(FactorRealization, ExhaustiveUpToEight) {
  int checked = 0;
  for (int n = 2; n <= 8; ++n)
    for_each_graphic(n, [&](const DegreeSequence& pi) {
      for (int k = 0; k <= pi.min_degree(); ++k) {
        if ((k * n) % 2 != 0 || !kfactor_condition(pi, FactorSpec{k}).holds) continue;
        try {
          expect_factor_realization(pi, k, thm3_construct(pi, FactorSpec{k}));
        } catch (const Error& e) {
          ADD_FAILURE() << to_string(pi) << " k=" << k << ": " << e.what();
        }
        ++checked;
      }
    });
  EXPECT_GT(checked, 500);
}
