#pragma once

#include <vector>

#include "bondlab/graph.hpp"

namespace bondlab {

inline constexpr int kDefaultDominationMaxOrder = 40;

struct DominationResult {
  int gamma = 0;
  std::vector<int> witness;  // sorted vertex indices
};

/// Exact domination number by iterative deepening on the set size. Each
/// level branches on the closed neighborhood of the uncovered vertex with
/// the fewest dominators, lowest index first, and prunes when the uncovered
/// count exceeds what the remaining picks could cover. The witness is the
/// first minimum set met in that search order.
/// Throws GraphError for n < 1 or n > max_order.
DominationResult domination_number(const Graph& g, int max_order = kDefaultDominationMaxOrder);

/// True when some dominating set of size <= k exists.
bool has_dominating_set(const Graph& g, int k);

bool is_dominating(const Graph& g, const std::vector<int>& set);
bool is_dominating(const Graph& g, VertexMask set);

}  // namespace bondlab
