#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bondlab/graph.hpp"

namespace bondlab {

class EmbeddingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One (possibly non-orientable) cellular embedding: the cyclic order of
/// neighbors around each vertex, and a sign per edge (indexed like
/// Graph::edges()). Empty `signs` means every edge is +1.
struct RotationSystem {
  std::vector<std::vector<int>> rotations;
  std::vector<int> signs;

  int sign(int edge_index) const { return signs.empty() ? 1 : signs[edge_index]; }

  /// Neighbors in increasing order around every vertex, all signs +1.
  static RotationSystem identity(const Graph& g);

  /// Throws EmbeddingError unless each rotation is a permutation of the
  /// vertex's neighbors and every sign is +1 or -1.
  void validate(const Graph& g) const;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// True when some choice of vertex flips makes every sign +1.
bool is_orientable(const Graph& g, const RotationSystem& rs);

/// Equivalent rotation system whose BFS-tree edges (rooted at 0) are all +1,
/// obtained by flipping vertices: a flip reverses the vertex's rotation and
/// negates the signs of its edges. Requires a connected graph.
RotationSystem normalize_signs(const Graph& g, const RotationSystem& rs);

struct Dart {
  int from = 0;
  int to = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct EmbeddingSummary {
  std::vector<std::vector<Dart>> face_walks;
  std::vector<int> face_lengths;
  /// Per edge (indexed like Graph::edges()): lengths of the faces on its two
  /// sides, smaller first. An edge met twice by one face gets that face's
  /// length twice.
  std::vector<std::pair<int, int>> edge_faces;
  int chi = 0;
  bool orientable = true;
};

/// Face walks of the embedding given by rs. A walk leaves u along uv, flips
/// its local orientation when the edge sign is -1, and continues at v with
/// the successor of u (predecessor when flipped). Face length counts edge
/// traversals, so a bridge adds 2 to its face.
/// Requires g connected with at least one edge.
EmbeddingSummary trace_faces(const Graph& g, const RotationSystem& rs);

struct CurvatureLedger {
  std::vector<double> weights;  // per edge
  double total = 0.0;
};

/// w(uv) = 1/d(u) + 1/d(v) - 1 + 1/f(uv) + 1/f'(uv) - χ/|E| for every edge.
/// The weights of any cellular embedding of a connected graph sum to zero.
CurvatureLedger curvature(const Graph& g, const EmbeddingSummary& summary);

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

struct SearchOptions {
  /// Face-tracing steps allowed for the whole search.
  std::uint64_t budget = kDefaultSearchBudget;
  /// Throw BudgetExceeded instead of returning a partial answer.
  bool strict = false;
  int threads = 1;
  /// Skip the non-orientable search.
  bool orientable_only = false;
};

struct ClassSearchResult {
  /// Maximum χ over cellular embeddings of this class; nullopt when the
  /// class has none (non-orientable embeddings of trees).
  std::optional<int> chi;
  RotationSystem witness;
  /// Set when chi is certified maximal; otherwise chi is only the best found.
  bool exhaustive = false;
  std::uint64_t steps = 0;
};

struct EmbeddingSearchResult {
  int chi = 0;
  RotationSystem witness;
  bool exhaustive = false;
  ClassSearchResult orientable;
  ClassSearchResult nonorientable;
  bool nonorientable_searched = false;
  std::uint64_t steps = 0;

  /// Orientable genus h from the orientable maximum.
  std::optional<int> orientable_genus() const;
  /// Least k >= 1 with an embedding in the non-orientable surface of genus
  /// k: min(2 - non-orientable maximum, 2h + 1), at least 1.
  std::optional<int> nonorientable_genus() const;
};

/// Maximum Euler characteristic over all cellular embeddings of a connected
/// graph, by branch and bound over rotation systems (and edge signs for the
/// non-orientable class). Signs on a BFS spanning tree are fixed to +1, each
/// rotation is taken up to cyclic shift, and the rotation at a maximum-degree
/// root is taken up to reversal. Targets are tried from the face-count upper
/// bound n - m + ⌊2m/g⌋ downward and each pass prunes partial assignments
/// whose closed faces plus ⌊(unused face length)/g⌋ cannot reach the target,
/// so the first success is certified maximal. The witness is the first
/// rotation system reaching the maximum in search order; it does not depend
/// on the thread count.
EmbeddingSearchResult max_euler_characteristic(const Graph& g, const SearchOptions& options = {});

enum class SurfaceClass { Orientable, NonOrientable };
ClassSearchResult max_euler_characteristic_in_class(const Graph& g, SurfaceClass surface,
                                                    const SearchOptions& options = {});

/// Closed-form maximum Euler characteristics of complete and complete
/// bipartite graphs from their classical orientable and non-orientable
/// genera (with the K7 exception). Test oracle only.
struct GenusFormulaChi {
  int orientable = 0;
  int nonorientable = 0;
  int chi = 0;
};
GenusFormulaChi ringel_chi_complete(int n);
GenusFormulaChi ringel_chi_complete_bipartite(int a, int b);

/// {"n":..,"chi":..,"orientable":..,"rotations":[[..],..],"signs":[{"u":..,"v":..,"sign":..},..]}
std::string witness_json(const Graph& g, const RotationSystem& rs, int indent = -1);
RotationSystem parse_witness_json(const std::string& text);

}  // namespace bondlab
