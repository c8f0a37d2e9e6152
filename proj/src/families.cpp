#include "bondlab/families.hpp"

#include <array>

namespace bondlab {

namespace {

void need(const std::vector<int>& params, std::size_t count, std::string_view name) {
  if (params.size() != count) {
    throw GraphError(std::string(name) + " takes " + std::to_string(count) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
  for (int p : params) {
    if (p <= 0) throw GraphError(std::string(name) + ": parameters must be positive");
  }
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph(a + b, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph petersen() {
  std::vector<std::array<int, 2>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const auto& p = pairs[i];
      const auto& q = pairs[j];
      if (p[0] != q[0] && p[0] != q[1] && p[1] != q[0] && p[1] != q[1]) edges.push_back({i, j});
    }
  return Graph(10, edges);
}

Graph hypercube(int d) {
  if (d > 6) throw GraphError("Q: dimension above 6 exceeds the 64-vertex limit");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b) {
      int w = v ^ (1 << b);
      if (v < w) edges.push_back({v, w});
    }
  return Graph(n, edges);
}

Graph wheel(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v <= n; ++v) {
    edges.push_back({0, v});
    edges.push_back({v, v % n + 1});
  }
  return Graph(n + 1, edges);
}

}  // namespace

Graph make_family(std::string_view name, const std::vector<int>& params) {
  if (name == "K") {
    need(params, 1, name);
    return complete(params[0]);
  }
  if (name == "Kmn") {
    need(params, 2, name);
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "C") {
    need(params, 1, name);
    if (params[0] < 3) throw GraphError("C: a cycle needs at least 3 vertices");
    return cycle(params[0]);
  }
  if (name == "P") {
    need(params, 1, name);
    return path(params[0]);
  }
  if (name == "petersen") {
    need(params, 0, name);
    return petersen();
  }
  if (name == "Q") {
    need(params, 1, name);
    return hypercube(params[0]);
  }
  if (name == "W") {
    need(params, 1, name);
    if (params[0] < 3) throw GraphError("W: the rim needs at least 3 vertices");
    return wheel(params[0]);
  }
  throw GraphError("unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_names() { return {"K", "Kmn", "C", "P", "petersen", "Q", "W"}; }

}  // namespace bondlab
