#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bondlab/graph.hpp"

namespace bondlab {

/// Standard graph families by short id:
///   K n        complete graph
///   Kmn m n    complete bipartite, parts {0..m-1} and {m..m+n-1}
///   C n        cycle 0-1-...-(n-1)-0, n >= 3
///   P n        path on n vertices
///   petersen   Kneser(5,2): vertices are the 2-subsets of {0..4} in
///              lexicographic order, adjacent when disjoint
///   Q d        hypercube on {0,1}^d, adjacency by one flipped bit
///   W n        wheel: hub 0 joined to the cycle 1..n, n >= 3
/// Throws GraphError for unknown ids or bad parameters.
Graph make_family(std::string_view name, const std::vector<int>& params = {});

std::vector<std::string> family_names();

}  // namespace bondlab
