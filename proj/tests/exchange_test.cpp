#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "degseq/error.hpp"
#include "degseq/exchange.hpp"
#include "support.hpp"

using namespace degseq;

namespace {

Graph permuted(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

// p edge-disjoint regular factors plus random leftover edges
FactorDecomposition random_decomposition(int n, int p, std::mt19937_64& rng) {
  std::vector<Graph> factors;
  Graph used(n);
  for (int i = 0; i < p; ++i) {
    const int r = std::uniform_int_distribution<int>(1, 2)(rng);
    if ((r * n) % 2 != 0) continue;
    for (int attempt = 0; attempt < 50; ++attempt) {
      Graph f = permuted(circulant_regular(n, r), rng);
      if (!f.edge_disjoint(used)) continue;
      used = graph_union(used, f);
      factors.push_back(f);
      break;
    }
  }
  Graph host = used;
  std::bernoulli_distribution coin(0.3);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!host.has_edge(a, b) && coin(rng)) host.add_edge(a, b);
  return FactorDecomposition(host, factors);
}

void expect_same_shape(const FactorDecomposition& before, const FactorDecomposition& after) {
  EXPECT_EQ(after.check(), "");
  EXPECT_EQ(after.host().degrees(), before.host().degrees());
  EXPECT_EQ(after.leftover().degrees(), before.leftover().degrees());
  ASSERT_EQ(after.factor_count(), before.factor_count());
  for (int i = 0; i < after.factor_count(); ++i)
    EXPECT_TRUE(after.factor(i).is_regular(before.factor_degree(i)));
}

bool pattern_ok(const FactorDecomposition& d, Vertex u, Vertex v, const std::vector<Vertex>& xs) {
  const std::size_t q = xs.size();
  for (std::size_t j = 0; j < q; ++j) {
    if (d.class_of(xs[j], u) != d.class_of(v, xs[(j + 1) % q])) return false;
    for (std::size_t s = 0; s < q; ++s)
      if (s != j && d.class_of(xs[s], u) == d.class_of(xs[j], u)) return false;
  }
  return true;
}

// every exchange list with hubs (u, v) whose first internal vertex is x0
std::vector<std::vector<Vertex>> all_lists(const FactorDecomposition& d, Vertex u, Vertex v, Vertex x0) {
  const int n = d.order();
  const std::size_t max_q = 2 * (d.factor_count() + 2);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur{x0};
  std::vector<bool> on(n, false);
  on[x0] = on[u] = on[v] = true;
  std::function<void()> go = [&] {
    if (cur.size() >= 2 && pattern_ok(d, u, v, cur)) out.push_back(cur);
    if (cur.size() == max_q) return;
    for (Vertex y = 0; y < n; ++y) {
      if (on[y]) continue;
      on[y] = true;
      cur.push_back(y);
      go();
      cur.pop_back();
      on[y] = false;
    }
  };
  go();
  return out;
}

bool oracle_disjoint_system(const FactorDecomposition& d, Vertex u, Vertex v, const std::vector<Vertex>& x) {
  std::vector<std::vector<std::vector<Vertex>>> options;
  for (Vertex a : x) options.push_back(all_lists(d, u, v, a));
  std::vector<bool> taken(d.order(), false);
  for (Vertex a : x) taken[a] = true;
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == x.size()) return true;
    for (const auto& l : options[i]) {
      bool ok = true;
      for (std::size_t j = 1; j < l.size() && ok; ++j)
        if (taken[l[j]]) ok = false;
      if (!ok) continue;
      for (std::size_t j = 1; j < l.size(); ++j) taken[l[j]] = true;
      if (go(i + 1)) return true;
      for (std::size_t j = 1; j < l.size(); ++j) taken[l[j]] = false;
    }
    return false;
  };
  return go(0);
}

}  // namespace

TEST(TwoSwap, PreservesDegrees) {
  const Graph c4 = cycle_graph(4);
  const Graph out = two_swap(c4, {0, 1}, {2, 3});
  EXPECT_EQ(out.degrees(), c4.degrees());
  EXPECT_TRUE(out.has_edge(0, 2));
  EXPECT_TRUE(out.has_edge(1, 3));

  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  const Graph s = two_swap(two, {0, 1}, {2, 3});
  EXPECT_TRUE(s.has_edge(0, 2));
  EXPECT_TRUE(s.has_edge(1, 3));
  EXPECT_EQ(s.degrees(), two.degrees());
}

TEST(TwoSwap, Blocked) {
  try {
    two_swap(cycle_graph(4), {0, 1}, {3, 2});
    FAIL() << "expected SwapBlocked";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SwapBlocked);
  }
  EXPECT_THROW(two_swap(complete_graph(3), {0, 1}, {1, 2}), Error);
}

TEST(TwoSwap, RandomSwapsKeepDegrees) {
  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 10000) {
    const Graph g = testing_support::random_graph(std::uniform_int_distribution<int>(4, 14)(rng), 0.4, rng);
    const auto e = g.edges();
    if (e.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    auto [x, y] = e[pick(rng)];
    auto [u, v] = e[pick(rng)];
    if (std::bernoulli_distribution(0.5)(rng)) std::swap(u, v);
    if (x == u || x == v || y == u || y == v || g.has_edge(x, u) || g.has_edge(y, v)) continue;
    const Graph out = two_swap(g, {x, y}, {u, v});
    ASSERT_EQ(out.degrees(), g.degrees());
    ++done;
  }
}

TEST(ColoredExchange, LengthTwoIsTwoSwap) {
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  const auto d = FactorDecomposition::plain(two);
  // hubs u = 1, v = 3; internals 0 (edge to u) and 2 (edge to v)
  const ExchangeList l{1, 3, {0, 2}};
  EXPECT_EQ(exchange_violation(d, l), "");
  const auto out = apply_colored_exchange(d, l);
  EXPECT_EQ(out.host(), two_swap(two, {1, 0}, {2, 3}));
}

TEST(ColoredExchange, ThreeClassCycleKeepsFactor) {
  // u = 0, v = 1 with one perfect-matching factor; the only exchange from x0 = 2
  // runs through leftover, factor and complement edges in turn
  Graph f(6);
  for (auto [a, b] : std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}}) f.add_edge(a, b);
  Graph host = f;
  host.add_edge(0, 2);
  host.add_edge(1, 3);
  const FactorDecomposition d(host, std::vector<Graph>{f});
  const auto found = find_exchange(d, 0, 1, 2);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->internals, (std::vector<Vertex>{2, 3, 4}));
  const auto out = apply_colored_exchange(d, *found);
  expect_same_shape(d, out);
  EXPECT_TRUE(out.factor(0).has_edge(0, 4));
  EXPECT_TRUE(out.factor(0).has_edge(1, 3));
  EXPECT_TRUE(out.host().has_edge(1, 2));
  EXPECT_FALSE(out.host().has_edge(0, 2));
  EXPECT_EQ(apply_colored_exchange(out, *found), d);
}

TEST(ColoredExchange, EmptyIsIdentity) {
  std::mt19937_64 rng(1);
  const auto d = random_decomposition(8, 1, rng);
  EXPECT_EQ(apply_colored_exchange(d, ExchangeList{0, 1, {}}), d);
}

TEST(ColoredExchange, PatternViolation) {
  const auto d = FactorDecomposition::plain(cycle_graph(5));
  try {
    apply_colored_exchange(d, ExchangeList{0, 2, {1, 3}});
    FAIL() << "expected InvalidExchange";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidExchange);
  }
}

TEST(ColoredExchange, RandomExchangesPreserveFactors) {
  std::mt19937_64 rng(9);
  ExchangeSearchOptions opt;
  opt.node_budget = 20000;
  int applied = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 16)(rng);
    const int p = std::uniform_int_distribution<int>(0, 3)(rng);
    const auto d = random_decomposition(n, p, rng);
    std::uniform_int_distribution<int> vx(0, n - 1);
    const int u = vx(rng), v = vx(rng), x0 = vx(rng);
    if (u == v || x0 == u || x0 == v) continue;
    const auto l = find_exchange(d, u, v, x0, opt);
    if (!l) continue;
    ASSERT_EQ(exchange_violation(d, *l), "");
    const auto out = apply_colored_exchange(d, *l);
    expect_same_shape(d, out);
    ASSERT_EQ(apply_colored_exchange(out, *l), d) << "not an involution";
    ++applied;
  }
  EXPECT_GT(applied, 1000);
}

TEST(DisjointExchanges, TrivialCases) {
  const auto d = FactorDecomposition::plain(cycle_graph(6));
  EXPECT_TRUE(find_disjoint_exchanges(d, 0, 3, {}).empty());

  Graph k4e = complete_graph(4);
  k4e.remove_edge(2, 3);
  const auto d2 = FactorDecomposition::plain(k4e);
  // N(3) - N(2) in the host is empty, so no anchor is valid
  std::vector<Vertex> none;
  for (Vertex x = 0; x < 4; ++x)
    if (x != 2 && x != 3 && k4e.has_edge(2, x) && !k4e.has_edge(3, x)) none.push_back(x);
  EXPECT_TRUE(none.empty());
  EXPECT_TRUE(find_disjoint_exchanges(d2, 2, 3, none).empty());
}

TEST(DisjointExchanges, PlainGraphAgreesWithTwoSwapSearch) {
  // path 0-1-2-3-4-5 plus 0-5: u = 1, v = 4 with x = 0 (adjacent to 1 but not 4)
  Graph g = cycle_graph(6);
  const auto d = FactorDecomposition::plain(g);
  const std::vector<Vertex> x{0};
  const auto lists = find_disjoint_exchanges(d, 1, 4, x);
  ASSERT_EQ(lists.size(), 1u);
  // brute force: some 2-swap removes 0-1 and a v-edge and adds 0-4
  bool swap_exists = false;
  for (Vertex y : g.neighbors(4))
    if (y != 1 && !g.has_edge(1, y)) swap_exists = true;
  EXPECT_TRUE(swap_exists);
  const auto out = apply_all(d, lists);
  EXPECT_EQ(out.host().degrees(), g.degrees());
  EXPECT_TRUE(out.host().has_edge(4, 0));
  EXPECT_FALSE(out.host().has_edge(1, 0));
}

TEST(DisjointExchanges, RejectsBadAnchors) {
  const auto d = FactorDecomposition::plain(cycle_graph(6));
  const std::vector<Vertex> bad{2};  // adjacent to both 1 and 3
  EXPECT_THROW(find_disjoint_exchanges(d, 1, 3, bad), Error);
}

TEST(DisjointExchanges, MatchesExhaustiveOracle) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = std::uniform_int_distribution<int>(5, 8)(rng);
    const int p = std::uniform_int_distribution<int>(0, 1)(rng);
    const auto d = random_decomposition(n, p, rng);
    const Graph& h = d.host();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        if (u == v || h.degree(v) < h.degree(u)) continue;
        std::vector<Vertex> pool;
        for (Vertex x = 0; x < n; ++x)
          if (x != u && x != v && h.has_edge(u, x) && !h.has_edge(v, x)) pool.push_back(x);
        if (pool.empty()) continue;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(std::min<std::size_t>(pool.size(), 3));
        const bool expect = oracle_disjoint_system(d, u, v, pool);
        try {
          const auto lists = find_disjoint_exchanges(d, u, v, pool);
          EXPECT_TRUE(expect);
          ASSERT_EQ(lists.size(), pool.size());
          std::vector<int> seen(n, 0);
          for (std::size_t i = 0; i < lists.size(); ++i) {
            EXPECT_EQ(lists[i].internals.front(), pool[i]);
            EXPECT_EQ(exchange_violation(d, lists[i]), "");
            for (Vertex y : lists[i].internals) ++seen[y];
          }
          for (int c : seen) EXPECT_LE(c, 1);
          expect_same_shape(d, apply_all(d, lists));
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::SearchFailed);
          EXPECT_FALSE(expect) << "oracle found a system the search missed";
        }
        ++checked;
      }
  }
  EXPECT_GT(checked, 500);
}
