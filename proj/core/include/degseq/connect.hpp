#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "degseq/coloring.hpp"
#include "degseq/graph.hpp"

namespace degseq {

struct ConnectTarget {
  enum class Parity { Even, One, Odd };
  int delta = 0;
  int target = 0;
  Parity parity_case = Parity::Even;
};

/// delta - 1 when delta >= 3 is odd; delta otherwise.
ConnectTarget connect_target(int min_degree);

struct Connectivity {
  int lambda = 0;
  CutWitness min_cut;
};

/// lambda(G) with a minimum cut; unit-capacity max flow from vertex 0 to
/// every other vertex. InvalidInput when n < 2.
Connectivity edge_connectivity(const Graph& g);

/// Local edge connectivity between s and t, with the source side of a
/// minimum s-t cut.
int local_edge_connectivity(const Graph& g, Vertex s, Vertex t, VertexSet* source_side = nullptr);

struct ConnectifyOptions {
  /// Optional class label per swappable edge, indexed u * n + v. When set,
  /// both removed edges must share a class and the inserted edges inherit it,
  /// which keeps regular factors regular.
  std::vector<int> edge_class;
  /// Step cap; 0 means n^3.
  std::size_t max_steps = 0;
  /// Enforce |E(Z0)| >= n - 1 when delta(G0) = 1. Callers whose Z0 is a
  /// perfect matching switch this off and rely on RepairStuck instead.
  bool require_edge_count = true;
};

struct ConnectifyStep {
  Edge removed_a, removed_b;
  Edge added_a, added_b;
  int lambda_before = 0;
};

struct ConnectifyResult {
  Graph graph;
  Graph swappable;  ///< the current Z edges (protected edges excluded)
  int lambda_before = 0;
  int lambda_after = 0;
  ConnectTarget target;
  std::vector<ConnectifyStep> steps;
  std::vector<int> edge_class;  ///< updated labels when classes were given
};

/// Raises edge connectivity to connect_target(delta(G0)) by swapping pairs of
/// Z0-edges aa', bb' that sit on either side of a deficient cut for the
/// non-edges ab', a'b (or ab, a'b'), keeping f proper. The degree sequence,
/// G0 - E(Z0) and the colour classes are preserved. RepairStuck when no
/// improving swap exists; InvalidInput when preconditions fail.
ConnectifyResult connectify(const Graph& g0, const Graph& z0, const EquitableColoring& f,
                            const ConnectifyOptions& options = {});

}  // namespace degseq
