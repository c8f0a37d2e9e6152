#include "bondlab/bondage.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "bondlab/domination.hpp"

namespace bondlab {

namespace {

// Advances c to the next k-subset of {0..m-1} in colex order.
bool next_colex(std::vector<int>& c, int m) {
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    int limit = (i + 1 < k) ? c[i + 1] : m;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (int j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

bool raises_gamma(const Graph& g, const std::vector<int>& subset, int gamma) {
  std::vector<Edge> removed;
  removed.reserve(subset.size());
  for (int i : subset) removed.push_back(g.edges()[i]);
  return !has_dominating_set(g.without_edges(removed), gamma);
}

// Colex-first k-subset of edges whose removal raises gamma.
std::optional<std::vector<int>> first_raising_subset(const Graph& g, int k, int gamma, int threads) {
  const int m = g.size();
  if (k > m) return std::nullopt;
  std::vector<int> first(k);
  for (int i = 0; i < k; ++i) first[i] = i;

  if (threads <= 1) {
    std::vector<int> c = first;
    do {
      if (raises_gamma(g, c, gamma)) return c;
    } while (next_colex(c, m));
    return std::nullopt;
  }

  // Batches are handed out in colex order; the smallest succeeding batch
  // index wins so the answer does not depend on scheduling.
  constexpr int kBatch = 64;
  std::mutex mutex;
  std::vector<int> cursor = first;
  bool exhausted = false;
  long next_batch = 0;
  std::atomic<long> winner{std::numeric_limits<long>::max()};
  std::vector<int> winning_subset;

  auto worker = [&] {
    for (;;) {
      std::vector<std::vector<int>> batch;
      long id;
      {
        std::lock_guard lock(mutex);
        if (exhausted) return;
        id = next_batch++;
        for (int i = 0; i < kBatch && !exhausted; ++i) {
          batch.push_back(cursor);
          if (!next_colex(cursor, m)) exhausted = true;
        }
      }
      if (id > winner.load()) return;
      for (const auto& c : batch) {
        if (raises_gamma(g, c, gamma)) {
          std::lock_guard lock(mutex);
          if (id < winner.load()) {
            winner = id;
            winning_subset = c;
          }
          break;
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (winner.load() == std::numeric_limits<long>::max()) return std::nullopt;
  return winning_subset;
}

BondageResult connected_bondage(const Graph& g, int cap, const BondageOptions& options) {
  BondageResult result;
  result.gamma_before = domination_number(g, options.domination_max_order).gamma;
  for (int k = 1; k <= std::min(cap, g.size()); ++k) {
    auto subset = first_raising_subset(g, k, result.gamma_before, options.threads);
    if (!subset) continue;
    result.b = k;
    for (int i : *subset) result.witness_edges.push_back(g.edges()[i]);
    result.gamma_after = domination_number(g.without_edges(result.witness_edges), options.domination_max_order).gamma;
    return result;
  }
  result.b = cap + 1;
  result.above_cap = true;
  result.gamma_after = result.gamma_before;
  return result;
}

}  // namespace

BondageResult bondage_number(const Graph& g, const BondageOptions& options) {
  if (g.size() == 0) throw GraphError("bondage number is undefined for a graph without edges");
  const auto split = split_components(g);
  std::optional<BondageResult> best;
  int best_index = -1;
  for (std::size_t i = 0; i < split.parts.size(); ++i) {
    const Graph& part = split.parts[i];
    if (part.size() == 0) continue;
    const auto stats = degree_stats(part);
    auto r = connected_bondage(part, options.cap.value_or(stats.max_degree + stats.min_degree - 1), options);
    if (!best || (!r.above_cap && (best->above_cap || r.b < best->b))) {
      best = std::move(r);
      best_index = static_cast<int>(i);
    }
  }
  BondageResult out = *best;
  for (auto& e : out.witness_edges) {
    e = {split.origin[best_index][e.u], split.origin[best_index][e.v]};
  }
  if (split.parts.size() > 1) {
    out.gamma_before = domination_number(g, options.domination_max_order).gamma;
    out.gamma_after = out.above_cap ? out.gamma_before
                                    : domination_number(g.without_edges(out.witness_edges), options.domination_max_order).gamma;
  }
  return out;
}

HartnellRallBound hartnell_rall_bound(const Graph& g) {
  if (g.size() == 0) throw GraphError("Hartnell-Rall bound needs at least one edge");
  HartnellRallBound out;
  out.edge_term = std::numeric_limits<int>::max();
  for (const auto& e : g.edges()) {
    int term = g.degree(e.u) + g.degree(e.v) - 1 - common_neighbors(g, e.u, e.v);
    if (term < out.edge_term) {
      out.edge_term = term;
      out.edge = e;
    }
  }
  const auto stats = degree_stats(g);
  out.degree_term = stats.max_degree + stats.min_degree - 1;
  return out;
}

BPrimeResult compute_b_prime(const Graph& g, AverageDegreeTerm variant) {
  if (g.size() == 0) throw GraphError("b' needs at least one edge");
  if (!is_connected(g)) throw GraphError("b' is defined for connected graphs; split into components first");
  const auto hr = hartnell_rall_bound(g);
  const auto ad = degree_stats(g).average_degree;
  BPrimeResult out;
  out.edge_term = hr.edge_term;
  out.edge = hr.edge;
  if (variant == AverageDegreeTerm::FlooredAverage) {
    out.ad_term = static_cast<int>(2 * ad.floor() - 1);
  } else {
    out.ad_term = static_cast<int>(Rational{2 * ad.num, ad.den}.floor() - 1);
  }
  out.b_prime = std::min(out.edge_term, out.ad_term);
  return out;
}

}  // namespace bondlab
