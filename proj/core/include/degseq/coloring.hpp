#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

/// Vertex -> colour class. Classes are 0-based internally and 1-based in
/// serialized form. An overflow class may be flagged while a colouring is
/// being balanced (all classes but the overflow one within one of each other).
struct EquitableColoring {
  std::vector<int> assignment;
  int colors = 0;
  std::optional<int> overflow;

  std::vector<int> class_sizes() const;
  std::vector<VertexSet> classes() const;
  /// Classes Y_1..Y_c sorted so |Y_1| >= ... >= |Y_c|; ties keep index order.
  std::vector<VertexSet> sorted_classes() const;
  friend bool operator==(const EquitableColoring&, const EquitableColoring&) = default;
};

struct ColoringCheck {
  bool proper = false;
  bool equitable = false;
  std::vector<int> class_sizes;
  bool ok() const noexcept { return proper && equitable; }
};

/// proper: total assignment in range with no monochromatic edge.
/// equitable: class sizes pairwise within one.
ColoringCheck check_coloring(const Graph& g, const EquitableColoring& f);

/// Proper equitable c-colouring for c >= max degree + 1 (InvalidInput
/// otherwise). Edges are inserted one at a time; a clash is resolved by
/// moving an endpoint to a class where it has no neighbour, after which the
/// colour classes are rebalanced along chains of movable vertices.
EquitableColoring hs_coloring(const Graph& g, int c, std::uint64_t seed = 0);

struct ExactColoringOptions {
  int max_n = 24;
  std::uint64_t node_budget = 200'000'000;
};

/// Exhaustive search for a proper equitable c-colouring; nullopt when none
/// exists. OracleTooLarge when n > max_n or the node budget runs out.
std::optional<EquitableColoring> equitable_exact(const Graph& g, int c, const ExactColoringOptions& options = {});

/// JSON array holding the 1-based class of every vertex.
std::string coloring_to_json(const EquitableColoring& f);
/// Accepts the array form; colors defaults to the largest class index seen.
EquitableColoring coloring_from_json(std::string_view text, int colors = 0);

}  // namespace degseq
