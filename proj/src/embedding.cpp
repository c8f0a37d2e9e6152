#include <algorithm>
#include <cmath>
#include <deque>
#include <json.hpp>

#include "bondlab/embedding.hpp"

namespace bondlab {

RotationSystem RotationSystem::identity(const Graph& g) {
  RotationSystem rs;
  for (int v = 0; v < g.order(); ++v) rs.rotations.push_back(g.neighbor_list(v));
  rs.signs.assign(g.size(), 1);
  return rs;
}

void RotationSystem::validate(const Graph& g) const {
  if (static_cast<int>(rotations.size()) != g.order()) {
    throw EmbeddingError("rotation system has " + std::to_string(rotations.size()) + " rotations for " +
                         std::to_string(g.order()) + " vertices");
  }
  for (int v = 0; v < g.order(); ++v) {
    auto sorted = rotations[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbor_list(v)) {
      throw EmbeddingError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbors");
    }
  }
  if (!signs.empty()) {
    if (static_cast<int>(signs.size()) != g.size()) throw EmbeddingError("sign count does not match edge count");
    for (int s : signs)
      if (s != 1 && s != -1) throw EmbeddingError("edge signs must be +1 or -1");
  }
}

namespace {

// Two-colors vertices so that sign(uv) = x_u * x_v; returns the coloring or
// nothing when the signs are not a coboundary.
std::optional<std::vector<int>> switching(const Graph& g, const RotationSystem& rs) {
  std::vector<int> x(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (x[s] != 0) continue;
    x[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbor_list(u)) {
        int want = x[u] * rs.sign(g.edge_index(u, v));
        if (x[v] == 0) {
          x[v] = want;
          queue.push_back(v);
        } else if (x[v] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return x;
}

}  // namespace

bool is_orientable(const Graph& g, const RotationSystem& rs) {
  rs.validate(g);
  return switching(g, rs).has_value();
}

RotationSystem normalize_signs(const Graph& g, const RotationSystem& rs) {
  rs.validate(g);
  if (!is_connected(g)) throw EmbeddingError("normalize_signs: graph must be connected");
  RotationSystem out = rs;
  out.signs.resize(g.size(), 1);
  if (rs.signs.empty()) std::fill(out.signs.begin(), out.signs.end(), 1);
  if (g.order() == 0) return out;
  std::vector<bool> seen(g.order(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbor_list(u)) {
      if (seen[v]) continue;
      seen[v] = true;
      queue.push_back(v);
      if (out.signs[g.edge_index(u, v)] == -1) {
        std::reverse(out.rotations[v].begin(), out.rotations[v].end());
        for (int w : g.neighbor_list(v)) out.signs[g.edge_index(v, w)] *= -1;
      }
    }
  }
  return out;
}

EmbeddingSummary trace_faces(const Graph& g, const RotationSystem& rs) {
  rs.validate(g);
  if (g.size() == 0) throw EmbeddingError("trace_faces: graph has no edges");
  if (!is_connected(g)) throw EmbeddingError("trace_faces: graph must be connected");

  const int n = g.order();
  // position[v][w] = index of w in the rotation at v.
  std::vector<std::vector<int>> position(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(rs.rotations[v].size()); ++i) position[v][rs.rotations[v][i]] = i;

  // A flag is a dart (u -> v) together with the orientation carried when
  // leaving u; 0 is the reference orientation.
  struct Flag {
    int u, v, s;
    bool operator==(const Flag&) const = default;
  };
  auto step = [&](const Flag& f) {
    int arrive = f.s ^ (rs.sign(g.edge_index(f.u, f.v)) < 0 ? 1 : 0);
    const auto& rot = rs.rotations[f.v];
    const int d = static_cast<int>(rot.size());
    int i = position[f.v][f.u];
    int w = arrive == 0 ? rot[(i + 1) % d] : rot[(i + d - 1) % d];
    return Flag{f.v, w, arrive};
  };
  // Traversing a face backwards visits these flags.
  auto mirror = [&](const Flag& f) {
    int arrive = f.s ^ (rs.sign(g.edge_index(f.u, f.v)) < 0 ? 1 : 0);
    return Flag{f.v, f.u, arrive ^ 1};
  };
  auto flag_id = [&](const Flag& f) { return (f.u * n + f.v) * 2 + f.s; };

  std::vector<char> used(static_cast<std::size_t>(n) * n * 2, 0);
  EmbeddingSummary out;
  std::vector<std::vector<int>> lengths_on_edge(g.size());
  for (int s = 0; s < 2; ++s) {
    for (const auto& e : g.edges()) {
      for (Flag start : {Flag{e.u, e.v, s}, Flag{e.v, e.u, s}}) {
        if (used[flag_id(start)]) continue;
        std::vector<Dart> walk;
        Flag f = start;
        do {
          used[flag_id(f)] = 1;
          walk.push_back({f.u, f.v});
          f = step(f);
        } while (!(f == start));
        // Consume the reverse traversal of the same face.
        Flag back = mirror(start);
        if (used[flag_id(back)]) throw std::logic_error("face traced in both directions by one orbit");
        Flag b = back;
        do {
          used[flag_id(b)] = 1;
          b = step(b);
        } while (!(b == back));
        for (const auto& d : walk) lengths_on_edge[g.edge_index(d.from, d.to)].push_back(static_cast<int>(walk.size()));
        out.face_lengths.push_back(static_cast<int>(walk.size()));
        out.face_walks.push_back(std::move(walk));
      }
    }
  }
  for (auto& lens : lengths_on_edge) {
    if (lens.size() != 2) throw std::logic_error("edge not met exactly twice by face walks");
    std::sort(lens.begin(), lens.end());
    out.edge_faces.emplace_back(lens[0], lens[1]);
  }
  out.chi = n - g.size() + static_cast<int>(out.face_walks.size());
  out.orientable = switching(g, rs).has_value();
  return out;
}

CurvatureLedger curvature(const Graph& g, const EmbeddingSummary& summary) {
  if (static_cast<int>(summary.edge_faces.size()) != g.size()) {
    throw EmbeddingError("curvature: summary does not belong to this graph");
  }
  CurvatureLedger ledger;
  const double chi_share = static_cast<double>(summary.chi) / g.size();
  double sum = 0.0;
  double carry = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const auto& e = g.edges()[i];
    const auto [f, f2] = summary.edge_faces[i];
    double w = 1.0 / g.degree(e.u) + 1.0 / g.degree(e.v) - 1.0 + 1.0 / f + 1.0 / f2 - chi_share;
    ledger.weights.push_back(w);
    // Neumaier summation.
    double t = sum + w;
    carry += std::abs(sum) >= std::abs(w) ? (sum - t) + w : (w - t) + sum;
    sum = t;
  }
  ledger.total = sum + carry;
  return ledger;
}

std::optional<int> EmbeddingSearchResult::orientable_genus() const {
  if (!orientable.chi) return std::nullopt;
  return (2 - *orientable.chi) / 2;
}

std::optional<int> EmbeddingSearchResult::nonorientable_genus() const {
  auto h = orientable_genus();
  if (!h) return std::nullopt;
  int k = 2 * *h + 1;
  if (nonorientable.chi) k = std::min(k, 2 - *nonorientable.chi);
  return std::max(1, k);
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

GenusFormulaChi ringel_chi_complete(int n) {
  if (n < 3) throw EmbeddingError("ringel_chi_complete: need n >= 3");
  GenusFormulaChi out;
  out.orientable = 2 - 2 * ceil_div((n - 3) * (n - 4), 12);
  int crosscaps = n == 7 ? 3 : ceil_div((n - 3) * (n - 4), 6);
  out.nonorientable = crosscaps == 0 ? 1 : 2 - crosscaps;
  out.chi = std::max(out.orientable, out.nonorientable);
  return out;
}

GenusFormulaChi ringel_chi_complete_bipartite(int a, int b) {
  if (a < 2 || b < 2) throw EmbeddingError("ringel_chi_complete_bipartite: need both parts >= 2");
  GenusFormulaChi out;
  out.orientable = 2 - 2 * ceil_div((a - 2) * (b - 2), 4);
  int crosscaps = ceil_div((a - 2) * (b - 2), 2);
  out.nonorientable = crosscaps == 0 ? 1 : 2 - crosscaps;
  out.chi = std::max(out.orientable, out.nonorientable);
  return out;
}

std::string witness_json(const Graph& g, const RotationSystem& rs, int indent) {
  rs.validate(g);
  nlohmann::ordered_json j;
  j["n"] = g.order();
  if (g.size() > 0 && is_connected(g)) {
    auto summary = trace_faces(g, rs);
    j["chi"] = summary.chi;
    j["orientable"] = summary.orientable;
  }
  j["rotations"] = rs.rotations;
  auto signs = nlohmann::ordered_json::array();
  for (int i = 0; i < g.size(); ++i) {
    const auto& e = g.edges()[i];
    signs.push_back(nlohmann::ordered_json{{"u", e.u}, {"v", e.v}, {"sign", rs.sign(i)}});
  }
  j["signs"] = std::move(signs);
  return j.dump(indent);
}

RotationSystem parse_witness_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    RotationSystem rs;
    rs.rotations = j.at("rotations").get<std::vector<std::vector<int>>>();
    const int n = j.at("n").get<int>();
    if (static_cast<int>(rs.rotations.size()) != n) throw EmbeddingError("witness: rotation count differs from n");
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
      for (int w : rs.rotations[v]) {
        if (w < 0 || w >= n) throw EmbeddingError("witness: neighbor out of range");
        if (v < w) edges.push_back({v, w});
      }
    Graph g(n, edges);
    rs.signs.assign(g.size(), 1);
    for (const auto& s : j.at("signs")) {
      rs.signs[g.edge_index(s.at("u").get<int>(), s.at("v").get<int>())] = s.at("sign").get<int>();
    }
    rs.validate(g);
    return rs;
  } catch (const nlohmann::json::exception& e) {
    throw EmbeddingError(std::string("witness: ") + e.what());
  } catch (const GraphError& e) {
    throw EmbeddingError(std::string("witness: ") + e.what());
  }
}

}  // namespace bondlab
