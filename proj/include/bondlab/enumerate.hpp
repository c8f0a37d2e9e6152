#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bondlab/graph.hpp"

namespace bondlab {

inline constexpr int kMaxEnumerationOrder = 6;

/// Adjacency bit-code of g: bit k is set when the k-th pair in graph6 order
/// (0,1),(0,2),(1,2),(0,3),... is an edge.
std::uint64_t adjacency_code(const Graph& g);

/// Minimum adjacency code over all vertex relabelings. Exhaustive over n!
/// permutations, so only meant for n <= kMaxEnumerationOrder.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of connected graphs on
/// 1..max_n vertices, ordered by order and then by canonical code; each
/// representative is the relabeling that realizes its canonical code.
/// Throws GraphError when max_n is outside 1..kMaxEnumerationOrder.
void enumerate_connected_graphs(int max_n, const std::function<void(const Graph&)>& sink);
std::vector<Graph> enumerate_connected_graphs(int max_n);

}  // namespace bondlab
