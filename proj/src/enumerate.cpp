#include "bondlab/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bondlab {

namespace {

Graph from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (code >> k & 1) edges.push_back({u, v});
  return Graph(n, edges);
}

std::uint64_t code_under(const Graph& g, const std::vector<int>& perm) {
  // perm[v] is the new label of v.
  std::uint64_t code = 0;
  for (const auto& e : g.edges()) {
    int a = std::min(perm[e.u], perm[e.v]);
    int b = std::max(perm[e.u], perm[e.v]);
    code |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
  }
  return code;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  if (g.order() > 11) throw GraphError("adjacency_code: order above 11 does not fit in 64 bits");
  std::vector<int> identity(g.order());
  std::iota(identity.begin(), identity.end(), 0);
  return code_under(g, identity);
}

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kMaxEnumerationOrder) {
    throw GraphError("canonical_code: order " + std::to_string(g.order()) + " above enumeration budget");
  }
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, code_under(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void enumerate_connected_graphs(int max_n, const std::function<void(const Graph&)>& sink) {
  if (max_n < 1 || max_n > kMaxEnumerationOrder) {
    throw GraphError("enumeration order " + std::to_string(max_n) + " outside 1.." +
                     std::to_string(kMaxEnumerationOrder));
  }
  for (int n = 1; n <= max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::set<std::uint64_t> classes;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      // Connected graphs need at least n-1 edges.
      if (std::popcount(code) + 1 < n) continue;
      Graph g = from_code(n, code);
      if (!is_connected(g)) continue;
      classes.insert(canonical_code(g));
    }
    for (std::uint64_t code : classes) sink(from_code(n, code));
  }
}

std::vector<Graph> enumerate_connected_graphs(int max_n) {
  std::vector<Graph> out;
  enumerate_connected_graphs(max_n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace bondlab
