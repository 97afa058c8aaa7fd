#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq {

/// Edge-class labels. Host edges outside every factor are kLeftover, pairs
/// that are not host edges are kComplement, factor i carries label 2 + i.
inline constexpr int kLeftover = 0;
inline constexpr int kComplement = 1;
inline constexpr int factor_label(int i) noexcept { return 2 + i; }

/// A host graph together with pairwise edge-disjoint regular spanning
/// factors. The complement class is implicit: any non-edge of the host.
class FactorDecomposition {
 public:
  FactorDecomposition() = default;
  /// Throws InvalidInput unless every factor is a regular spanning subgraph
  /// of host and the factors are pairwise edge-disjoint.
  FactorDecomposition(Graph host, std::span<const Graph> factors);
  static FactorDecomposition plain(Graph host);

  int order() const noexcept { return host_.order(); }
  const Graph& host() const noexcept { return host_; }
  int factor_count() const noexcept { return static_cast<int>(factor_degrees_.size()); }
  int factor_degree(int i) const { return factor_degrees_.at(i); }
  const std::vector<int>& factor_degrees() const noexcept { return factor_degrees_; }
  int class_count() const noexcept { return 2 + factor_count(); }

  int class_of(Vertex a, Vertex b) const {
    return host_.has_edge(a, b) ? label_[index(a, b)] : kComplement;
  }
  /// Relabels a pair; kComplement deletes the host edge.
  void set_class(Vertex a, Vertex b, int label);

  Graph factor(int i) const;
  /// Union of all factors.
  Graph factor_union() const;
  Graph leftover() const;

  /// Re-derives every invariant from scratch; empty string when valid.
  std::string check() const;

  friend bool operator==(const FactorDecomposition&, const FactorDecomposition&);

 private:
  std::size_t index(Vertex a, Vertex b) const noexcept {
    return static_cast<std::size_t>(a) * host_.order() + b;
  }

  Graph host_;
  std::vector<int> factor_degrees_;
  std::vector<std::int8_t> label_;
};

/// The alternating list (v x_0, x_0 u, v x_1, x_1 u, ..., v x_{q-1}, x_{q-1} u).
struct ExchangeList {
  Vertex hub_u = -1;
  Vertex hub_v = -1;
  std::vector<Vertex> internals;

  std::size_t q() const noexcept { return internals.size(); }
  std::vector<Edge> edges() const;
  /// The same exchange read with the hubs interchanged; applying it after
  /// this one restores the original labels.
  ExchangeList reversed() const;
};

/// Empty when L is a valid exchange against D: internals distinct and apart
/// from the hubs, consecutive colours match (class(x_j u) == class(v x_{j+1})
/// for j mod q) and the colours class(x_j u) are pairwise distinct. The list
/// is also accepted with the roles of the hubs interchanged.
std::string exchange_violation(const FactorDecomposition& d, const ExchangeList& l);

/// Swaps class(v x_j) with class(x_j u) for every j. Throws InvalidExchange
/// when the list is not valid against d.
FactorDecomposition apply_colored_exchange(const FactorDecomposition& d, const ExchangeList& l);

/// Petersen switch: removes xy and uv and adds xu and yv. Throws SwapBlocked.
Graph two_swap(const Graph& g, Edge e1, Edge e2);

struct ExchangeSearchOptions {
  /// Vertices that may not serve as the closing internal x_{q-1}, i.e. the
  /// one that becomes adjacent to hub u.
  std::vector<bool> forbidden_terminal;
  /// Vertices excluded from every list (besides anchors of their own list).
  std::vector<bool> blocked;
  std::size_t node_budget = 2'000'000;
};

/// One exchange with hubs (u, v) whose first internal vertex is x0, found by
/// depth-first search over class-alternating extensions. nullopt if none.
std::optional<ExchangeList> find_exchange(const FactorDecomposition& d, Vertex u, Vertex v, Vertex x0,
                                          const ExchangeSearchOptions& options = {});

/// Internally disjoint exchanges with hubs (u, v), one anchored at each
/// x in X. Requires X subset of N_complement(v) - N_complement(u) and
/// deg(v) >= deg(u) (InvalidInput otherwise); SearchFailed if the bounded
/// search is exhausted.
std::vector<ExchangeList> find_disjoint_exchanges(const FactorDecomposition& d, Vertex u, Vertex v,
                                                  std::span<const Vertex> x,
                                                  const ExchangeSearchOptions& options = {});

/// Applies internally disjoint exchanges in order.
FactorDecomposition apply_all(const FactorDecomposition& d, std::span<const ExchangeList> lists);

}  // namespace degseq
