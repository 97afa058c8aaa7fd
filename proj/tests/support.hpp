#pragma once

// Test-side reference implementations. Deliberately naive and independent of
// the library algorithms they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "degseq/graph.hpp"

namespace testing_support {

using degseq::Edge;
using degseq::Graph;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

inline Graph random_bounded(int n, int max_deg, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  for (auto [a, b] : pairs)
    if (g.degree(a) < max_deg && g.degree(b) < max_deg && coin(rng)) g.add_edge(a, b);
  return g;
}

// Graphicality by trying to place edges one vertex at a time.
inline bool brute_graphic(std::vector<int> d) {
  const int n = static_cast<int>(d.size());
  for (int x : d)
    if (x < 0 || x >= std::max(n, 1)) return x == 0;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::function<bool(int, int)> go = [&](int v, int from) -> bool {
    if (v == n) return true;
    if (d[v] == 0) return go(v + 1, v + 2);
    for (int w = std::max(from, v + 1); w < n; ++w) {
      if (d[w] == 0 || adj[v][w]) continue;
      adj[v][w] = true;
      --d[v];
      --d[w];
      if (go(v, w + 1)) return true;
      ++d[v];
      ++d[w];
      adj[v][w] = false;
    }
    return false;
  };
  return go(0, 1);
}

// Edge connectivity as the minimum cut over all vertex bipartitions.
inline int brute_lambda(const Graph& g) {
  const int n = g.order();
  int best = 1 << 30;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); mask += 2) {
    int c = 0;
    for (auto [a, b] : g.edges())
      if (((mask >> a) & 1u) != ((mask >> b) & 1u)) ++c;
    best = std::min(best, c);
  }
  return best;
}

// k-factor by subset search over the edges at each vertex in turn.
inline bool brute_k_factor(const Graph& g, int k) {
  const int n = g.order();
  if (k == 0) return true;
  if ((static_cast<long long>(k) * n) % 2 != 0) return false;
  const auto edges = g.edges();
  std::vector<int> need(n, k), room(n, 0);
  for (auto [a, b] : edges) {
    ++room[a];
    ++room[b];
  }
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    for (int v = 0; v < n; ++v)
      if (need[v] > room[v] || need[v] < 0) return false;
    if (i == edges.size()) return std::all_of(need.begin(), need.end(), [](int x) { return x == 0; });
    const auto [a, b] = edges[i];
    --room[a];
    --room[b];
    bool ok = false;
    if (need[a] > 0 && need[b] > 0) {
      --need[a];
      --need[b];
      ok = go(i + 1);
      ++need[a];
      ++need[b];
    }
    if (!ok) ok = go(i + 1);
    ++room[a];
    ++room[b];
    return ok;
  };
  return go(0);
}

// Equitable c-colourability by assigning colours vertex by vertex.
inline bool brute_equitable(const Graph& g, int c) {
  const int n = g.order();
  if (c <= 0) return n == 0;
  const int lo = n / c, hi = (n + c - 1) / c;
  const int big = n - lo * c;  // classes of size hi when lo != hi
  std::vector<int> col(n, -1), size(c, 0);
  std::function<bool(int)> go = [&](int v) -> bool {
    if (v == n) {
      int at_hi = 0;
      for (int s : size) {
        if (s < lo || s > hi) return false;
        if (s == hi) ++at_hi;
      }
      return lo == hi || at_hi == big;
    }
    int opened = 0;
    for (int i = 0; i < c; ++i) opened = std::max(opened, size[i] > 0 ? i + 1 : 0);
    for (int i = 0; i < c && i <= opened; ++i) {
      if (size[i] >= hi) continue;
      bool ok = true;
      for (int w = 0; w < v && ok; ++w)
        if (col[w] == i && g.has_edge(v, w)) ok = false;
      if (!ok) continue;
      col[v] = i;
      ++size[i];
      if (go(v + 1)) return true;
      --size[i];
      col[v] = -1;
    }
    return false;
  };
  return go(0);
}

// Number of labeled graphs with degree sequence d, by edge-subset enumeration.
inline std::uint64_t brute_count(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<Edge> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::uint64_t count = 0;
  std::vector<int> deg(n);
  for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1u) {
        ++deg[pairs[i].first];
        ++deg[pairs[i].second];
      }
    if (deg == d) ++count;
  }
  return count;
}

inline std::vector<int> sorted_desc(std::vector<int> d) {
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

}  // namespace testing_support
