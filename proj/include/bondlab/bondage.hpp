#pragma once

#include <optional>
#include <vector>

#include "bondlab/graph.hpp"

namespace bondlab {

struct BondageResult {
  /// Exact bondage number, or cap + 1 when above_cap is set.
  int b = 0;
  bool above_cap = false;
  std::vector<Edge> witness_edges;  // in the original vertex numbering
  int gamma_before = 0;
  int gamma_after = 0;
};

struct BondageOptions {
  /// Largest subset size tried; nullopt means Δ + δ - 1 of each component,
  /// which always suffices.
  std::optional<int> cap;
  int threads = 1;
  int domination_max_order = 40;
};

/// Smallest edge set whose removal raises the domination number, searched
/// by subset size and colex order within a size. Disconnected graphs take
/// the minimum over components that have edges. Throws GraphError for
/// graphs without edges.
BondageResult bondage_number(const Graph& g, const BondageOptions& options = {});

/// d(u) + d(v) - 1 - |N(u) ∩ N(v)| minimized over edges, plus Δ + δ - 1.
struct HartnellRallBound {
  int edge_term = 0;
  Edge edge;
  int degree_term = 0;
};
HartnellRallBound hartnell_rall_bound(const Graph& g);

enum class AverageDegreeTerm {
  FlooredAverage,  // 2⌊ad⌋ - 1
  Unfloored,       // ⌊2·ad⌋ - 1 = ⌊4m/n⌋ - 1
};

/// min(edge term, average-degree term) for a connected graph with edges.
struct BPrimeResult {
  int b_prime = 0;
  int edge_term = 0;
  Edge edge;
  int ad_term = 0;
};
BPrimeResult compute_b_prime(const Graph& g, AverageDegreeTerm variant = AverageDegreeTerm::FlooredAverage);

}  // namespace bondlab
