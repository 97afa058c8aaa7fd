#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// Caps for brute-force queries. Exceeding any of them throws OracleTooLarge;
/// nothing is ever approximated.
struct OracleBudget {
  int max_n = 8;            ///< enumeration and k-factor vertex cap
  int coloring_max_n = 24;  ///< equitable colouring vertex cap
  double max_seconds = 0;   ///< wall-clock cap per query, 0 = none
  std::uint64_t node_budget = 500'000'000;
  std::uint64_t seed = 0;
};

/// Calls visit on every labeled simple graph whose vertex i has degree pi[i],
/// each exactly once, in lexicographic adjacency order. visit returns false
/// to stop early. Returns the number of graphs visited.
std::uint64_t enumerate_realizations(const DegreeSequence& pi, const std::function<bool(const Graph&)>& visit,
                                     const OracleBudget& budget = {});
std::uint64_t count_realizations(const DegreeSequence& pi, const OracleBudget& budget = {});

/// A k-regular spanning subgraph of g, or nullopt.
std::optional<Graph> find_k_factor(const Graph& g, int k, const OracleBudget& budget = {});
bool has_k_factor(const Graph& g, int k, const OracleBudget& budget = {});

struct RealizationWithFactor {
  Graph graph;
  Graph factor;
};

std::optional<RealizationWithFactor> find_realization_with_kfactor(const DegreeSequence& pi, int k,
                                                                   const OracleBudget& budget = {});
bool exists_realization_with_kfactor(const DegreeSequence& pi, int k, const OracleBudget& budget = {});

/// Least c admitting a proper equitable c-colouring.
int min_equitable_colors(const Graph& g, const OracleBudget& budget = {});

}  // namespace degseq
