#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/sequence.hpp"

namespace degseq {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  ///< sorted, duplicate-free

/// Simple undirected graph on vertices 0..n-1 (reported as 1..n in I/O).
///
/// Adjacency is a dense bit matrix plus cached degrees; every instance this
/// library touches is desk-scale, and the exchange and cut routines query
/// pairs far more often than they iterate neighbourhoods.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  /// Returns false when the edge was already present. Throws InvalidEdge on a
  /// loop or out-of-range endpoint.
  bool add_edge(Vertex u, Vertex v);
  /// Returns false when the edge was absent.
  bool remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const { return deg_[v]; }
  int max_degree() const noexcept;
  int min_degree() const noexcept;
  std::vector<Vertex> neighbors(Vertex v) const;
  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const { return deg_; }

  bool is_regular(int k) const noexcept;
  bool contains(const Graph& sub) const;  ///< E(sub) subset of E(this), same order
  bool edge_disjoint(const Graph& other) const;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> deg_;
};

struct BuiltGraph {
  Graph graph;
  int duplicate_edges = 0;  ///< repeated pairs collapsed into one edge
};

/// 0-based endpoints. Duplicates collapse and are counted.
BuiltGraph graph_from_edges(int n, std::span<const Edge> edges);

DegreeSequence degree_sequence_of(const Graph& g);

/// Relabels vertices so that deg(v_0) >= deg(v_1) >= ...; ties keep their
/// relative order. Returns the permutation old -> new alongside the graph.
std::pair<Graph, std::vector<Vertex>> canonicalize(const Graph& g);

Graph relabel(const Graph& g, std::span<const Vertex> old_to_new);

Graph graph_union(const Graph& a, const Graph& b);
Graph graph_difference(const Graph& a, const Graph& b);  ///< a - E(b)
Graph complement(const Graph& g);

/// Disjoint union of g and h (g's vertices first) plus every cross edge.
Graph join(const Graph& g, const Graph& h);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph independent_set(int n);
Graph complete_bipartite(int a, int b);
Graph path_graph(int n);
/// Circulant r-regular graph on n vertices using offsets 1..floor(r/2), plus
/// n/2 when r is odd. InvalidParams when r*n is odd, r >= n or r < 0.
Graph circulant_regular(int n, int r);
/// K^s * I^(2t-1).
Graph split_graph(int s, int t);
/// I^2 * H (k even, H (k-2)-regular on k+2 vertices) or K^2 * H (k odd, H
/// (k-2)-regular on k+1 vertices). InvalidParams when k < 2.
Graph sharpness_factor_family(int k);

/// Dispatches on {complete, cycle, independent, complete_bipartite,
/// split_graph, sharpness_factor_family, circulant, path}; InvalidParams on an
/// unknown kind or wrong parameter count.
Graph named(std::string_view kind, std::span<const int> params);

/// Gamma_G(X): members of X with a neighbour outside X.
VertexSet boundary(const Graph& g, std::span<const Vertex> x);

struct CutWitness {
  VertexSet side_a;
  std::vector<Edge> crossing_edges;  ///< (inside, outside)
  std::size_t size() const noexcept { return crossing_edges.size(); }
};

/// E_G(X, complement of X). InvalidCut when X is empty or all of V.
CutWitness cut(const Graph& g, std::span<const Vertex> x);

std::vector<bool> membership(int n, std::span<const Vertex> x);

}  // namespace degseq
