#include <gtest/gtest.h>

#include <random>

#include "degseq/coloring.hpp"
#include "degseq/connect.hpp"
#include "degseq/error.hpp"
#include "support.hpp"

using namespace degseq;

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [x, y] : a.edges()) g.add_edge(x, y);
  for (auto [x, y] : b.edges()) g.add_edge(a.order() + x, a.order() + y);
  return g;
}

Graph permuted(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

void expect_contract(const Graph& g0, const Graph& z0, const EquitableColoring& f, const ConnectifyResult& r) {
  EXPECT_EQ(r.graph.degrees(), g0.degrees());
  EXPECT_TRUE(r.graph.contains(graph_difference(g0, z0)));
  EXPECT_TRUE(check_coloring(r.graph, f).ok());
  EXPECT_EQ(edge_connectivity(r.graph).lambda, r.lambda_after);
  EXPECT_GE(r.lambda_after, r.target.target);
}

}  // namespace

TEST(ConnectTarget, Cases) {
  EXPECT_EQ(connect_target(1).target, 1);
  EXPECT_EQ(connect_target(2).target, 2);
  EXPECT_EQ(connect_target(3).target, 2);
  EXPECT_EQ(connect_target(4).target, 4);
  EXPECT_EQ(connect_target(5).target, 4);
  EXPECT_EQ(connect_target(3).parity_case, ConnectTarget::Parity::Odd);
  EXPECT_EQ(connect_target(1).parity_case, ConnectTarget::Parity::One);
}

TEST(EdgeConnectivity, Examples) {
  EXPECT_EQ(edge_connectivity(complete_graph(4)).lambda, 3);
  EXPECT_EQ(edge_connectivity(cycle_graph(6)).lambda, 2);
  EXPECT_EQ(edge_connectivity(disjoint_union(complete_graph(3), complete_graph(3))).lambda, 0);
  EXPECT_THROW(edge_connectivity(Graph(1)), Error);
}

TEST(EdgeConnectivity, WitnessIsAMinimumCut) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const Graph g = testing_support::random_graph(n, 0.4, rng);
    const auto c = edge_connectivity(g);
    ASSERT_EQ(c.lambda, testing_support::brute_lambda(g)) << "trial " << trial;
    EXPECT_EQ(static_cast<int>(c.min_cut.size()), c.lambda);
    EXPECT_EQ(cut(g, c.min_cut.side_a).size(), c.min_cut.size());
  }
}

TEST(Connectify, FixedPoint) {
  const Graph g = complete_graph(5);
  const auto f = hs_coloring(g, 5);
  const auto r = connectify(g, g, f);
  EXPECT_EQ(r.graph, g);
  EXPECT_TRUE(r.steps.empty());
}

TEST(Connectify, TwoCompleteGraphs) {
  const Graph g = disjoint_union(complete_graph(4), complete_graph(4));
  const auto f = hs_coloring(g, 4);
  const auto r = connectify(g, g, f);
  expect_contract(g, g, f, r);
  EXPECT_GE(r.lambda_after, 2);
  EXPECT_EQ(testing_support::brute_lambda(r.graph), r.lambda_after);
}

TEST(Connectify, TwoFourCycles) {
  const Graph g = disjoint_union(cycle_graph(4), cycle_graph(4));
  const auto f = hs_coloring(g, 3);
  const auto r = connectify(g, g, f);
  expect_contract(g, g, f, r);
  EXPECT_EQ(r.lambda_after, 2);
}

TEST(Connectify, ProtectedEdgesStay) {
  // only a perfect matching of the two cycles may be swapped
  Graph g = disjoint_union(cycle_graph(4), cycle_graph(4));
  Graph z(8);
  for (auto [a, b] : std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}, {6, 7}}) z.add_edge(a, b);
  const auto f = hs_coloring(g, 3);
  const auto r = connectify(g, z, f);
  expect_contract(g, z, f, r);
}

TEST(Connectify, Preconditions) {
  const Graph g = disjoint_union(cycle_graph(4), cycle_graph(4));
  const auto f = hs_coloring(g, 3);
  EXPECT_THROW(connectify(g, Graph(8), f), Error);
  EXPECT_THROW(connectify(g, complete_graph(8), f), Error);
}

TEST(Connectify, RandomEvenMinimumDegree) {
  std::mt19937_64 rng(61);
  int stuck = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int parts = std::uniform_int_distribution<int>(2, 3)(rng);
    const int r = 2 * std::uniform_int_distribution<int>(1, 2)(rng);
    Graph g(0);
    for (int i = 0; i < parts && g.order() < 20; ++i) {
      const int size = std::uniform_int_distribution<int>(r + 1, std::max(r + 1, (20 - g.order()) / (parts - i)))(rng);
      if (g.order() + size > 20) break;
      g = disjoint_union(g, permuted(circulant_regular(size, r), rng));
    }
    if (g.order() < 2 || g.min_degree() % 2 != 0) continue;
    const auto f = hs_coloring(g, g.max_degree() + 1, trial);
    try {
      const auto res = connectify(g, g, f);
      expect_contract(g, g, f, res);
      EXPECT_EQ(res.lambda_after, g.min_degree()) << "trial " << trial;
      for (const auto& s : res.steps) EXPECT_LT(s.lambda_before, res.target.target);
    } catch (const Error& e) {
      ++stuck;
      ADD_FAILURE() << "trial " << trial << ": " << e.what();
    }
  }
  EXPECT_EQ(stuck, 0);
}
