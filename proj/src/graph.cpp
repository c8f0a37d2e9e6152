#include "bondlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace bondlab {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
  rebuild_edges();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
  }
}

void Graph::rebuild_edges() {
  edges_.clear();
  for (int u = 0; u < order(); ++u) {
    VertexMask higher = adj_[u] & ~((bit(u) << 1) - 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      edges_.push_back({u, v});
    }
  }
  m_ = static_cast<int>(edges_.size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] & bit(v)) != 0;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) {
    throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::neighbor_list(int v) const {
  std::vector<int> out;
  VertexMask mask = neighbors(v);
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

Graph Graph::without_edges(const std::vector<Edge>& removed) const {
  Graph h = *this;
  for (const auto& e : removed) {
    if (!has_edge(e.u, e.v)) {
      throw GraphError("cannot remove missing edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    h.adj_[e.u] &= ~bit(e.v);
    h.adj_[e.v] &= ~bit(e.u);
  }
  h.rebuild_edges();
  return h;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  Graph h = *this;
  h.adj_[u] |= bit(v);
  h.adj_[v] |= bit(u);
  h.rebuild_edges();
  return h;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() < 1) throw GraphError("degree statistics need at least one vertex");
  DegreeStats s;
  s.max_degree = 0;
  s.min_degree = std::numeric_limits<int>::max();
  for (int v = 0; v < g.order(); ++v) {
    s.max_degree = std::max(s.max_degree, g.degree(v));
    s.min_degree = std::min(s.min_degree, g.degree(v));
  }
  s.average_degree = Rational{2 * static_cast<std::int64_t>(g.size()), g.order()};
  return s;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge closing at depths (d1, d2) gives a
  // closed walk of length d1 + d2 + 1 that contains a cycle, and the minimum
  // over all roots is exactly the girth.
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    parent[root] = -1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (int y : g.neighbor_list(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

int common_neighbors(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) {
    throw GraphError("common_neighbors: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  }
  return std::popcount(g.neighbors(u) & g.neighbors(v));
}

namespace {

VertexMask reach(const Graph& g, int start) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    while (frontier) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(x);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return std::popcount(reach(g, 0)) == g.order();
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  std::vector<int> index(g.order(), -1);
  int count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (keep & bit(v)) index[v] = count++;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  }
  return Graph(count, edges);
}

ComponentSplit split_components(const Graph& g) {
  ComponentSplit out;
  VertexMask left = g.order() == 64 ? ~VertexMask{0} : bit(g.order()) - 1;
  while (left) {
    int start = std::countr_zero(left);
    VertexMask comp = reach(g, start);
    left &= ~comp;
    out.parts.push_back(induced_subgraph(g, comp));
    std::vector<int> origin;
    for (VertexMask c = comp; c; c &= c - 1) origin.push_back(std::countr_zero(c));
    out.origin.push_back(std::move(origin));
  }
  return out;
}

}  // namespace bondlab
