#include <algorithm>
#include <functional>
#include <random>

#include "degseq/construct.hpp"
#include "degseq/error.hpp"
#include "realize_detail.hpp"

namespace degseq {

namespace {

struct Candidate {
  Graph host;
  Graph factor;
  EquitableColoring coloring;
  std::string route;
};

std::vector<VertexSet> cycles_of(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Merges odd cycles of a 2-regular graph in pairs.
Graph merge_odd_cycles(Graph g) {
  for (;;) {
    std::vector<VertexSet> odd;
    for (auto& c : cycles_of(g))
      if (c.size() % 2 == 1) odd.push_back(c);
    if (odd.size() < 2) return g;
    const Vertex x = odd[0][0], u = odd[1][0];
    const Vertex y = g.neighbors(x)[0], v = g.neighbors(u)[0];
    g = two_swap(g, {x, y}, {u, v});
  }
}

bool is_complete_bipartite_balanced(const Graph& g, int delta, VertexSet& side_a) {
  const int n = g.order();
  if (n != 2 * delta || !g.is_regular(delta)) return false;
  std::vector<int> side(n, -1);
  side[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (side[w] == side[v]) return false;
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      }
    }
  }
  side_a.clear();
  for (Vertex v = 0; v < n; ++v)
    if (side[v] == 0) side_a.push_back(v);
  return static_cast<int>(side_a.size()) == delta;
}

Graph clique_blowup(const EquitableColoring& f) {
  const int n = static_cast<int>(f.assignment.size());
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (f.assignment[a] == f.assignment[b]) g.add_edge(a, b);
  return g;
}

std::optional<EquitableColoring> exact_quiet(const Graph& g, int c, int max_n) {
  if (g.order() > max_n) return std::nullopt;
  ExactColoringOptions o;
  o.max_n = max_n;
  o.node_budget = 20'000'000;
  try {
    return equitable_exact(g, c, o);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OracleTooLarge) throw;
    return std::nullopt;
  }
}

}  // namespace

RealizationResult thm1_construct(const FactorDecomposition& d, const ConstructOptions& options) {
  if (d.factor_count() != 1) throw Error(ErrorKind::InvalidInput, "exactly one factor expected");
  const int k = d.factor_degree(0);
  if (k < 1) throw Error(ErrorKind::InvalidInput, "factor degree must be at least 1");
  const Graph& g = d.host();
  const int n = g.order();
  const int delta = g.max_degree();
  if (g.edge_count() == static_cast<std::size_t>(n) * (n - 1) / 2)
    throw Error(ErrorKind::ForbiddenGraph, "G is complete");
  if (g.is_regular(1)) throw Error(ErrorKind::ForbiddenGraph, "G is a 1-factor");
  if (g.is_regular(2) && n % 2 == 1) throw Error(ErrorKind::ForbiddenGraph, "G is a 2-factor of odd order");

  const Graph f = d.factor(0);
  const Graph z = graph_difference(g, f);
  const bool want_connect = options.connect && g.edge_count() + 1 >= static_cast<std::size_t>(n) && n >= 2;
  std::mt19937_64 rng(options.seed);

  // Each candidate is handed to the connectivity repair; the first one that
  // survives it is returned.
  std::optional<RealizationResult> done;
  std::string last_failure = "no candidate realization found";
  auto accept = [&](Candidate c) {
    RealizationResult r;
    r.graph = c.host;
    r.coloring = c.coloring;
    Graph factor = c.factor;
    if (want_connect) {
      ConnectifyOptions co;
      co.require_edge_count = false;
      try {
        auto res = connectify(c.host, c.factor, c.coloring, co);
        r.graph = res.graph;
        factor = graph_difference(res.graph, z);
        c.route += "; connectify " + std::to_string(res.lambda_before) + " -> " + std::to_string(res.lambda_after) +
                   " in " + std::to_string(res.steps.size()) + " swaps";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::RepairStuck) throw;
        last_failure = e.what();
        return false;
      }
    }
    const Graph fs[1] = {factor};
    r.factors = FactorDecomposition(r.graph, fs);
    r.provenance = c.route;
    done = std::move(r);
    return true;
  };

  // Colour Z with delta colours, forbid same-class pairs, pack a new factor.
  for (int attempt = 0; attempt < options.restarts / 4 + 2; ++attempt) {
    const EquitableColoring fz = hs_coloring(z, delta, options.seed + attempt);
    const Graph g2 = graph_union(z, clique_blowup(fz));
    if (auto fp = try_pack_factor(n, k, g2, rng(), 4)) {
      if (accept({graph_union(z, *fp), *fp, fz, "colour Z, pack factor against the class cliques"})) break;
    }
  }

  // Small orders: repair the known obstructions, then let the exact
  // colouring decide, moving the factor around when it says no.
  if (!done && n <= options.exact_coloring_max_n) {
    std::vector<Graph> starts{f};
    if (k == 2 && z.edge_count() == 0) starts.push_back(merge_odd_cycles(f));
    VertexSet side_a;
    if (delta % 2 == 1 && is_complete_bipartite_balanced(g, delta, side_a) && delta > 1) {
      const auto member = membership(n, side_a);
      Edge e1{-1, -1}, e2{-1, -1};
      for (const auto& [a, b] : f.edges()) {
        const Edge e = member[a] ? Edge{a, b} : Edge{b, a};
        if (e1.first < 0) {
          e1 = e;
        } else if (e.first != e1.first && e.second != e1.second && !g.has_edge(e1.first, e.first) &&
                   !g.has_edge(e1.second, e.second)) {
          e2 = e;
          break;
        }
      }
      if (e2.first >= 0) starts.push_back(two_swap(f, e1, e2));
    }
    for (const Graph& s : starts) {
      if (done) break;
      const Graph h = graph_union(z, s);
      if (auto c = exact_quiet(h, delta, options.exact_coloring_max_n))
        accept({h, s, *c, s == f ? "exact colouring of G" : "obstruction swap, exact colouring"});
    }
    for (int attempt = 0; !done && attempt < options.restarts * 5; ++attempt) {
      auto fp = try_pack_factor(n, k, z, rng(), 2);
      if (!fp) continue;
      const Graph h = graph_union(z, *fp);
      if (auto c = exact_quiet(h, delta, options.exact_coloring_max_n))
        accept({h, *fp, *c, "repacked factor, exact colouring"});
    }
  }
  if (!done) throw Error(ErrorKind::PackingFailed, last_failure);

  Requirements req;
  req.degrees = g.degrees();
  req.factor_degrees = {k};
  req.must_contain = z;
  req.colors = delta;
  req.connectivity = want_connect;
  certify(*done, req);
  return std::move(*done);
}

}  // namespace degseq
