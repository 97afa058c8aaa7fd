#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degseq/coloring.hpp"
#include "degseq/connect.hpp"
#include "degseq/exchange.hpp"
#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

struct Certificate {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RealizationResult {
  Graph graph;
  std::optional<FactorDecomposition> factors;
  std::optional<EquitableColoring> coloring;
  std::vector<Certificate> certificates;
  std::string provenance;

  bool all_passed() const;
};

struct ConstructOptions {
  std::uint64_t seed = 1;
  int oracle_max_n = 8;          ///< enumeration fallbacks
  int exact_coloring_max_n = 24; ///< equitable_exact certificates
  bool connect = true;           ///< run the edge-connectivity repair
  int restarts = 40;
};

/// Deterministic Havel-Hakimi: the vertex of largest remaining degree is
/// joined to the next largest ones, ties broken by index. NotGraphic.
Graph havel_hakimi(const DegreeSequence& pi);

/// A realization of pi carrying edge-disjoint regular factors of the given
/// degrees. Requires pi and shift(pi, sum of ks) graphic (NotGraphic) and
/// every k*n even (ParityError). Built by realizing shift(pi, sum) and one
/// circulant per factor, then removing overlaps with 2-swaps inside the
/// layers; oracle enumeration backs this up when n is small.
RealizationResult realize_with_factors(const DegreeSequence& pi, std::span<const int> ks,
                                       const ConstructOptions& options = {});
RealizationResult realize_with_factor(const DegreeSequence& pi, FactorSpec spec, const ConstructOptions& options = {});

/// A k-regular graph on n vertices edge-disjoint from g2prime, where pi_f is
/// (k, ..., k). Local search first, then an exhaustive factor search of the
/// complement when n <= 16. TheoremViolation when the search fails although
/// n >= 2(max degree + 1) and n >= 4k - 5; PackingFailed otherwise.
Graph pack_factor(const DegreeSequence& pi_f, const Graph& g2prime, const ConstructOptions& options = {});

/// Non-throwing core of pack_factor: local search only.
std::optional<Graph> try_pack_factor(int n, int k, const Graph& g2prime, std::uint64_t seed, int restarts);

/// Some realization of pi with a k-factor, when the k-factor criterion
/// holds (InvalidInput otherwise).
RealizationResult thm3_construct(const DegreeSequence& pi, FactorSpec spec, const ConstructOptions& options = {});

/// H realizing pi(G), containing G - E(F), equitably max-degree colourable,
/// and edge-connected per connect_target when |E(G)| >= n - 1. d must carry
/// exactly one k-factor with k >= 1. ForbiddenGraph for complete graphs,
/// 1-factors and 2-factors of odd order; PackingFailed if every route fails.
RealizationResult thm1_construct(const FactorDecomposition& d, const ConstructOptions& options = {});

/// The quantities the descent in thm2_construct reads off a state.
struct Thm2SearchState {
  FactorDecomposition decomposition;
  /// gamma + 1 classes, canonical order; the last one is the overflow class.
  std::vector<VertexSet> classes;
  int gamma = 0;
  int q_index = 0;              ///< 1-based, smallest q with |Y_q| = |Y_gamma|
  std::vector<int> alpha;       ///< 1-based largest vertex index per class, 0 if empty
  int beta_gamma = 0;           ///< 1-based, 0 when undefined
  std::array<std::vector<int>, 3> partition;  ///< P0, P1, P2 as 1-based class numbers
  std::vector<long long> potential;
};

/// Canonical labeling of a (gamma+1)-colouring: nullopt when no choice of
/// overflow class keeps the first gamma classes within one of each other.
std::optional<Thm2SearchState> thm2_state(const FactorDecomposition& d, const std::vector<VertexSet>& classes,
                                          int gamma);

struct Thm2Move {
  int stage = 0;  ///< number of colours being reached
  std::string kind;
  std::vector<long long> before;
  std::vector<long long> after;
  bool decreased = false;
};

struct Thm2Log {
  std::vector<Thm2Move> moves;
  bool clean() const;
};

/// Realization of pi with edge-disjoint regular factors of the given degrees
/// and an equitable gamma-colouring, for gamma >= gamma_bound(pi). The
/// colouring is pushed down one colour at a time by a descent whose moves
/// are the recolourings and exchanges of the extremal argument, each
/// accepted only on a strict decrease of the potential tuple.
/// SearchStalled when no move improves or the n^4 move cap is reached.
RealizationResult thm2_construct(const DegreeSequence& pi, std::span<const FactorSpec> factor_specs, int gamma,
                                 const ConstructOptions& options = {}, Thm2Log* log = nullptr);

/// Equitably d1-colourable realization with a k-factor (when k > 0) and the
/// edge-connectivity clause. ForbiddenSequence when d_n = n - 1, d_1 = 1, or
/// d_1 = d_n = 2 with n odd.
RealizationResult thm4_pipeline(const DegreeSequence& pi, FactorSpec spec, const ConstructOptions& options = {});

/// What a result must satisfy; every field that is set becomes a certificate.
struct Requirements {
  std::optional<std::vector<int>> degrees;  ///< per vertex
  std::vector<int> factor_degrees;
  std::optional<Graph> must_contain;
  std::optional<int> colors;
  bool connectivity = false;
  bool oracle_kfactor = false;  ///< re-check the factor with the k-factor oracle
  int exact_coloring_max_n = 24;
};

/// Recomputes every requirement from scratch and appends certificates.
/// Throws TheoremViolation naming the first failing certificate.
void certify(RealizationResult& r, const Requirements& req);

}  // namespace degseq
