#include "degseq/connect.hpp"

#include <algorithm>
#include <deque>

#include "degseq/error.hpp"

namespace degseq {

ConnectTarget connect_target(int min_degree) {
  ConnectTarget t;
  t.delta = min_degree;
  if (min_degree == 1) {
    t.parity_case = ConnectTarget::Parity::One;
    t.target = 1;
  } else if (min_degree >= 3 && min_degree % 2 == 1) {
    t.parity_case = ConnectTarget::Parity::Odd;
    t.target = min_degree - 1;
  } else {
    t.parity_case = ConnectTarget::Parity::Even;
    t.target = min_degree;
  }
  return t;
}

namespace {

// Unit-capacity max flow on an undirected graph, stopping at `limit`.
int max_flow(const Graph& g, Vertex s, Vertex t, int limit, std::vector<bool>* source_side) {
  const int n = g.order();
  std::vector<std::int8_t> flow(static_cast<std::size_t>(n) * n, 0);  // flow[u*n+v] in {-1,0,1}
  auto residual = [&](int u, int v) { return g.has_edge(u, v) && flow[static_cast<std::size_t>(u) * n + v] < 1; };
  std::vector<std::vector<Vertex>> nbrs(n);
  for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
  int total = 0;
  std::vector<int> parent(n);
  while (total < limit) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::deque<int> q{s};
    while (!q.empty() && parent[t] == -1) {
      int u = q.front();
      q.pop_front();
      for (int v : nbrs[u])
        if (parent[v] == -1 && residual(u, v)) {
          parent[v] = u;
          q.push_back(v);
        }
    }
    if (parent[t] == -1) break;
    for (int v = t; v != s; v = parent[v]) {
      const int u = parent[v];
      ++flow[static_cast<std::size_t>(u) * n + v];
      --flow[static_cast<std::size_t>(v) * n + u];
    }
    ++total;
  }
  if (source_side) {
    // residual reachability from s
    source_side->assign(n, false);
    (*source_side)[s] = true;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : nbrs[u])
        if (!(*source_side)[v] && residual(u, v)) {
          (*source_side)[v] = true;
          q.push_back(v);
        }
    }
  }
  return total;
}

VertexSet to_set(const std::vector<bool>& in) {
  VertexSet out;
  for (std::size_t v = 0; v < in.size(); ++v)
    if (in[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

}  // namespace

int local_edge_connectivity(const Graph& g, Vertex s, Vertex t, VertexSet* source_side) {
  std::vector<bool> side;
  const int f = max_flow(g, s, t, g.order() * g.order(), source_side ? &side : nullptr);
  if (source_side) *source_side = to_set(side);
  return f;
}

Connectivity edge_connectivity(const Graph& g) {
  if (g.order() < 2) throw Error(ErrorKind::InvalidInput, "edge connectivity needs n >= 2");
  Connectivity best{g.min_degree() + 1, {}};
  std::vector<bool> side;
  for (Vertex t = 1; t < g.order(); ++t) {
    std::vector<bool> s_side;
    const int f = max_flow(g, 0, t, best.lambda, &s_side);
    if (f < best.lambda) {
      best.lambda = f;
      side = s_side;
    }
  }
  if (side.empty()) {
    // a minimum-degree vertex cut realizes lambda = delta
    Vertex v = 0;
    for (Vertex w = 0; w < g.order(); ++w)
      if (g.degree(w) < g.degree(v)) v = w;
    side.assign(g.order(), false);
    side[v] = true;
    best.lambda = g.degree(v);
  }
  const auto set = to_set(side);
  best.min_cut = cut(g, set);
  return best;
}

namespace {

struct Measure {
  int lambda = 0;
  int sum = 0;  // sum over t of min(lambda(0, t), target)
  bool operator>(const Measure& o) const { return lambda != o.lambda ? lambda > o.lambda : sum > o.sum; }
};

Measure measure(const Graph& g, int target) {
  Measure m{target, 0};
  for (Vertex t = 1; t < g.order(); ++t) {
    const int f = max_flow(g, 0, t, target, nullptr);
    m.lambda = std::min(m.lambda, f);
    m.sum += f;
  }
  return m;
}

// Source sides of every deficient s-t cut found; vertex 0 as source first,
// then other sources to catch cuts seen only from elsewhere.
std::vector<std::vector<bool>> deficient_cuts(const Graph& g, int target, bool all_sources) {
  std::vector<std::vector<bool>> out;
  const int n = g.order();
  const int sources = all_sources ? n : 1;
  for (Vertex s = 0; s < sources; ++s)
    for (Vertex t = s + 1; t < n; ++t) {
      std::vector<bool> side;
      if (max_flow(g, s, t, target, &side) < target && std::find(out.begin(), out.end(), side) == out.end())
        out.push_back(std::move(side));
    }
  return out;
}

}  // namespace

ConnectifyResult connectify(const Graph& g0, const Graph& z0, const EquitableColoring& f,
                            const ConnectifyOptions& options) {
  const int n = g0.order();
  if (n < 2) throw Error(ErrorKind::InvalidInput, "connectify needs n >= 2");
  if (z0.order() != n || !g0.contains(z0)) throw Error(ErrorKind::InvalidInput, "Z0 must be a spanning subgraph of G0");
  if (z0.min_degree() < 1) throw Error(ErrorKind::InvalidInput, "Z0 must have minimum degree >= 1");
  if (options.require_edge_count && g0.min_degree() == 1 && z0.edge_count() < static_cast<std::size_t>(n - 1))
    throw Error(ErrorKind::InvalidInput, "Z0 needs at least n-1 edges when delta(G0) = 1");
  if (!check_coloring(g0, f).ok()) throw Error(ErrorKind::InvalidInput, "colouring must be proper and equitable on G0");
  const bool classed = !options.edge_class.empty();
  if (classed && options.edge_class.size() != static_cast<std::size_t>(n) * n)
    throw Error(ErrorKind::InvalidInput, "edge_class must have n*n entries");

  ConnectifyResult r;
  r.graph = g0;
  r.swappable = z0;
  r.edge_class = options.edge_class;
  r.target = connect_target(g0.min_degree());
  const int target = r.target.target;
  const std::size_t cap = options.max_steps ? options.max_steps : static_cast<std::size_t>(n) * n * n;
  auto cls = [&](Vertex a, Vertex b) { return classed ? r.edge_class[static_cast<std::size_t>(a) * n + b] : 0; };
  auto set_cls = [&](Vertex a, Vertex b, int c) {
    if (!classed) return;
    r.edge_class[static_cast<std::size_t>(a) * n + b] = c;
    r.edge_class[static_cast<std::size_t>(b) * n + a] = c;
  };
  const auto& col = f.assignment;

  Measure current = measure(r.graph, target);
  r.lambda_before = edge_connectivity(r.graph).lambda;

  while (current.lambda < target) {
    if (r.steps.size() >= cap)
      throw Error(ErrorKind::RepairStuck, "step cap reached at lambda = " + std::to_string(current.lambda));
    bool moved = false;
    for (int pass = 0; pass < 2 && !moved; ++pass) {
      const auto cuts = deficient_cuts(r.graph, target, pass == 1 && n <= 20);
      for (const auto& side : cuts) {
        const auto zedges = r.swappable.edges();
        for (const auto& [p, q] : zedges) {
          if (side[p] != side[q] || !side[p]) continue;
          for (const auto& [s, t] : zedges) {
            if (side[s] || side[t]) continue;
            if (classed && cls(p, q) != cls(s, t)) continue;
            // orientations: a in {p,q}, b in {s,t}; add a-b' and a'-b
            const Vertex as[2][2] = {{p, q}, {q, p}};
            const Vertex bs[2][2] = {{s, t}, {t, s}};
            for (const auto& ap : as)
              for (const auto& bp : bs) {
                const Vertex a = ap[0], a2 = ap[1], b = bp[0], b2 = bp[1];
                if (r.graph.has_edge(a, b2) || r.graph.has_edge(a2, b)) continue;
                if (col[a] == col[b2] || col[a2] == col[b]) continue;
                Graph trial = r.graph;
                trial.remove_edge(a, a2);
                trial.remove_edge(b, b2);
                trial.add_edge(a, b2);
                trial.add_edge(a2, b);
                const Measure m = measure(trial, target);
                if (!(m > current)) continue;
                const int c = cls(a, a2);
                r.steps.push_back({{a, a2}, {b, b2}, {a, b2}, {a2, b}, current.lambda});
                r.graph = std::move(trial);
                r.swappable.remove_edge(a, a2);
                r.swappable.remove_edge(b, b2);
                r.swappable.add_edge(a, b2);
                r.swappable.add_edge(a2, b);
                set_cls(a, b2, c);
                set_cls(a2, b, c);
                current = m;
                moved = true;
                goto next_step;
              }
          }
        }
      }
    }
  next_step:
    if (!moved)
      throw Error(ErrorKind::RepairStuck, "no improving swap across any deficient cut at lambda = " +
                                              std::to_string(current.lambda) + " (target " + std::to_string(target) + ")");
  }
  r.lambda_after = edge_connectivity(r.graph).lambda;
  return r;
}

}  // namespace degseq
