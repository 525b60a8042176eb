#pragma once

// Internal colour-refinement + individualization search shared by the
// automorphism engine and the graph isomorphism test. Not installed.

#include <optional>
#include <utility>
#include <vector>

#include "bicay/graph.hpp"

namespace bicay::internal {

/// One round of iterated neighbourhood refinement with canonical colour ids
/// (rank of the (colour, sorted neighbour colours) signature). Runs until
/// stable.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors);

/// Searches for a bijection a -> b that preserves edges exactly and maps
/// pins[i].first -> pins[i].second. When exclude_identity is set (only
/// meaningful for a == b), the identity map is not reported and the search
/// continues past it. Exhaustive: nullopt means no such map exists.
std::optional<std::vector<int>> search_mapping(const Graph& a, const Graph& b,
                                               const std::vector<std::pair<int, int>>& pins,
                                               bool exclude_identity = false);

}  // namespace bicay::internal
