#pragma once

#include <optional>
#include <random>
#include <vector>

#include "degseq/graph.hpp"

namespace degseq::detail {

/// Havel-Hakimi on a raw degree list; nullopt when it gets stuck.
std::optional<Graph> havel_hakimi_raw(std::vector<int> need);

/// A circulant k-regular graph under a random relabeling.
Graph random_regular_start(int n, int k, std::mt19937_64& rng);

/// Removes edges shared by two or more layers with 2-swaps inside movable
/// layers. True when the layers end up pairwise edge-disjoint.
bool separate_layers(std::vector<Graph>& layers, const std::vector<bool>& movable, std::mt19937_64& rng,
                     std::size_t max_iters);

}  // namespace degseq::detail
