#include "degseq/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "degseq/error.hpp"

namespace degseq {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), deg_(n, 0) {
  if (n < 0) throw Error(ErrorKind::InvalidParams, "negative vertex count");
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorKind::InvalidEdge, "vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n_));
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::InvalidEdge, "loop at vertex " + std::to_string(u + 1));
  auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
  if (cell) return false;
  cell = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  ++deg_[u];
  ++deg_[v];
  ++m_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
  if (!cell) return false;
  cell = 0;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 0;
  --deg_[u];
  --deg_[v];
  --m_;
  return true;
}

int Graph::max_degree() const noexcept {
  return deg_.empty() ? 0 : *std::max_element(deg_.begin(), deg_.end());
}

int Graph::min_degree() const noexcept {
  return deg_.empty() ? 0 : *std::min_element(deg_.begin(), deg_.end());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(deg_[v]);
  const auto* row = &adj_[static_cast<std::size_t>(v) * n_];
  for (int u = 0; u < n_; ++u)
    if (row[u]) out.push_back(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

bool Graph::is_regular(int k) const noexcept {
  return std::all_of(deg_.begin(), deg_.end(), [k](int d) { return d == k; });
}

bool Graph::contains(const Graph& sub) const {
  if (sub.n_ != n_) return false;
  for (std::size_t i = 0; i < adj_.size(); ++i)
    if (sub.adj_[i] && !adj_[i]) return false;
  return true;
}

bool Graph::edge_disjoint(const Graph& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t i = 0; i < adj_.size(); ++i)
    if (other.adj_[i] && adj_[i]) return false;
  return true;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < n_; ++v)
      if (has_edge(u, v) && !seen[v]) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
  }
  return count == n_;
}

BuiltGraph graph_from_edges(int n, std::span<const Edge> edges) {
  BuiltGraph out{Graph(n), 0};
  for (const auto& [u, v] : edges)
    if (!out.graph.add_edge(u, v)) ++out.duplicate_edges;
  return out;
}

DegreeSequence degree_sequence_of(const Graph& g) { return normalize(g.degrees()); }

Graph relabel(const Graph& g, std::span<const Vertex> old_to_new) {
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(old_to_new[u], old_to_new[v]);
  return out;
}

std::pair<Graph, std::vector<Vertex>> canonicalize(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<Vertex> old_to_new(g.order());
  for (int i = 0; i < g.order(); ++i) old_to_new[order[i]] = i;
  return {relabel(g, old_to_new), old_to_new};
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::InvalidInput, "graph_union needs equal orders");
  Graph out = a;
  for (const auto& [u, v] : b.edges()) out.add_edge(u, v);
  return out;
}

Graph graph_difference(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) throw Error(ErrorKind::InvalidInput, "graph_difference needs equal orders");
  Graph out = a;
  for (const auto& [u, v] : b.edges()) out.remove_edge(u, v);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order(), b = h.order();
  Graph out(a + b);
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(a + u, a + v);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) out.add_edge(u, a + v);
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParams, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph independent_set(int n) { return Graph(n); }

Graph complete_bipartite(int a, int b) { return join(independent_set(a), independent_set(b)); }

Graph circulant_regular(int n, int r) {
  if (r < 0 || n < 0 || (r > 0 && r >= n) || (static_cast<long long>(r) * n) % 2 != 0)
    throw Error(ErrorKind::InvalidParams,
                "no circulant " + std::to_string(r) + "-regular graph on " + std::to_string(n) + " vertices");
  Graph g(n);
  for (int off = 1; off <= r / 2; ++off)
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + off) % n);
  if (r % 2 == 1)
    for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
  return g;
}

Graph split_graph(int s, int t) {
  if (s < 0 || t < 1) throw Error(ErrorKind::InvalidParams, "split_graph needs s >= 0, t >= 1");
  return join(complete_graph(s), independent_set(2 * t - 1));
}

Graph sharpness_factor_family(int k) {
  if (k < 2) throw Error(ErrorKind::InvalidParams, "sharpness family needs k >= 2");
  if (k % 2 == 0) return join(independent_set(2), circulant_regular(k + 2, k - 2));
  return join(complete_graph(2), circulant_regular(k + 1, k - 2));
}

Graph named(std::string_view kind, std::span<const int> p) {
  auto need = [&](std::size_t count) {
    if (p.size() != count)
      throw Error(ErrorKind::InvalidParams, std::string(kind) + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (kind == "complete") { need(1); return complete_graph(p[0]); }
  if (kind == "cycle") { need(1); return cycle_graph(p[0]); }
  if (kind == "path") { need(1); return path_graph(p[0]); }
  if (kind == "independent") { need(1); return independent_set(p[0]); }
  if (kind == "complete_bipartite") { need(2); return complete_bipartite(p[0], p[1]); }
  if (kind == "split_graph") { need(2); return split_graph(p[0], p[1]); }
  if (kind == "sharpness_factor_family") { need(1); return sharpness_factor_family(p[0]); }
  if (kind == "circulant") { need(2); return circulant_regular(p[0], p[1]); }
  throw Error(ErrorKind::InvalidParams, "unknown graph kind '" + std::string(kind) + "'");
}

std::vector<bool> membership(int n, std::span<const Vertex> x) {
  std::vector<bool> in(n, false);
  for (Vertex v : x) {
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v + 1) + " out of range");
    in[v] = true;
  }
  return in;
}

VertexSet boundary(const Graph& g, std::span<const Vertex> x) {
  const auto in = membership(g.order(), x);
  VertexSet out;
  for (int v = 0; v < g.order(); ++v) {
    if (!in[v]) continue;
    for (int w = 0; w < g.order(); ++w)
      if (!in[w] && g.has_edge(v, w)) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

CutWitness cut(const Graph& g, std::span<const Vertex> x) {
  const auto in = membership(g.order(), x);
  const auto inside = std::count(in.begin(), in.end(), true);
  if (inside == 0 || inside == g.order()) throw Error(ErrorKind::InvalidCut, "cut side must be a proper non-empty subset");
  CutWitness w;
  for (int v = 0; v < g.order(); ++v) {
    if (!in[v]) continue;
    w.side_a.push_back(v);
    for (int u = 0; u < g.order(); ++u)
      if (!in[u] && g.has_edge(v, u)) w.crossing_edges.emplace_back(v, u);
  }
  return w;
}

}  // namespace degseq
