#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bondlab {

/// Vertex subsets are single machine words; this caps graphs at 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with one adjacency bit-set per
/// vertex. Values are immutable once built; edits return new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return m_; }

  VertexMask neighbors(int v) const { return adj_.at(v); }
  VertexMask closed_neighbors(int v) const { return adj_.at(v) | bit(v); }
  int degree(int v) const { return std::popcount(adj_.at(v)); }
  bool has_edge(int u, int v) const;

  /// All edges with u < v, sorted lexicographically. Edge indices used by
  /// the rest of the library refer to positions in this list.
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_index(int u, int v) const;

  /// Neighbors of v in increasing order.
  std::vector<int> neighbor_list(int v) const;

  Graph without_edges(const std::vector<Edge>& removed) const;
  Graph with_edge(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;
  void rebuild_edges();

  std::vector<VertexMask> adj_;
  std::vector<Edge> edges_;
  int m_ = 0;
};

/// Non-negative fraction kept unreduced; used for the average degree 2m/n so
/// that its floor is exact.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::int64_t floor() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

struct DegreeStats {
  int max_degree = 0;
  int min_degree = 0;
  Rational average_degree;
};

/// Requires n >= 1.
DegreeStats degree_stats(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// |N(u) ∩ N(v)| for an edge uv; throws GraphError if uv is not an edge.
int common_neighbors(const Graph& g, int u, int v);

bool is_connected(const Graph& g);

/// Connected components as induced subgraphs, reindexed densely and ordered
/// by smallest original vertex. `origin[i][j]` is the original index of
/// vertex j of component i.
struct ComponentSplit {
  std::vector<Graph> parts;
  std::vector<std::vector<int>> origin;
};
ComponentSplit split_components(const Graph& g);

inline std::vector<Graph> components(const Graph& g) { return split_components(g).parts; }

/// Induced subgraph on `keep`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexMask keep);

}  // namespace bondlab
