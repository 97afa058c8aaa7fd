#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/exchange.hpp"
#include "degseq/graph.hpp"

namespace degseq {

/// Parameters of a verification sweep. Parsed from text such as
/// "n<=7,k<=2,count=50,seed=3"; unspecified entries keep the defaults of the
/// sweep being run (0 = default).
struct SweepParams {
  int max_n = 0;
  int max_k = 0;
  int count = 0;
  std::uint64_t seed = 0;
};

/// ParseError on unknown keys or malformed numbers.
SweepParams parse_sweep(std::string_view text);

struct CriterionReport {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string detail;
  std::vector<std::string> failure_samples;  ///< at most a handful
  double seconds = 0;
};

/// Acceptance criteria 1..11; InvalidParams on any other id.
CriterionReport run_criterion(int id, const SweepParams& params = {});
inline constexpr int kCriterionCount = 11;

/// Sweeps behind `verify-theorem`: 1 -> max-degree colouring with a k-factor,
/// 2 -> colouring descent at the gamma bound, 3 -> k-factor realizations
/// (exhaustive up to max_n and max_k), 4 -> full pipeline over all admissible
/// sequences up to max_n.
CriterionReport theorem_sweep(int theorem, const SweepParams& params = {});

// Random instance builders shared by sweeps, tests and benchmarks.

/// Random graph on n vertices with maximum degree at most max_degree.
Graph random_bounded_graph(int n, int max_degree, double density, std::mt19937_64& rng);
/// A random perfect matching of the complement of avoid; nullopt if none was found.
std::optional<Graph> random_perfect_matching(const Graph& avoid, std::mt19937_64& rng);
/// Host with up to p random regular factors (degrees 1 or 2) plus extra edges.
FactorDecomposition random_decomposition(int n, int p, std::mt19937_64& rng);

}  // namespace degseq
