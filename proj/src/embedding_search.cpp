#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "bondlab/embedding.hpp"

namespace bondlab {

namespace {

// Static data shared by all workers of one surface-class search.
struct Plan {
  int n = 0;
  int m = 0;
  bool signed_mode = false;
  int mult = 1;         // flag orbits per face
  int gmin = 3;         // no face is shorter than the girth
  int total_flags = 0;  // flags that take part in tracing
  std::vector<int> order;
  std::vector<std::vector<int>> nbrs;
  std::vector<int> eidx;  // n*n, -1 when not adjacent
  // Non-tree edges from each vertex to vertices earlier in the order; their
  // signs are chosen together with the vertex's rotation.
  std::vector<std::vector<int>> cot_earlier;

  Plan(const Graph& g, bool signed_search) : n(g.order()), m(g.size()), signed_mode(signed_search) {
    mult = signed_mode ? 2 : 1;
    gmin = *girth(g);
    total_flags = (signed_mode ? 4 : 2) * m;
    nbrs.resize(n);
    eidx.assign(n * n, -1);
    for (int v = 0; v < n; ++v) nbrs[v] = g.neighbor_list(v);
    for (int i = 0; i < m; ++i) {
      const auto& e = g.edges()[i];
      eidx[e.u * n + e.v] = eidx[e.v * n + e.u] = i;
    }
    int root = 0;
    for (int v = 1; v < n; ++v)
      if (g.degree(v) > g.degree(root)) root = v;
    std::vector<int> pos(n, -1);
    std::vector<char> tree(m, 0);
    order.push_back(root);
    pos[root] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      int u = order[head];
      for (int v : nbrs[u]) {
        if (pos[v] >= 0) continue;
        pos[v] = static_cast<int>(order.size());
        order.push_back(v);
        tree[eidx[u * n + v]] = 1;
      }
    }
    cot_earlier.resize(n);
    for (int v = 0; v < n; ++v)
      for (int w : nbrs[v])
        if (pos[w] < pos[v] && !tree[eidx[v * n + w]]) cot_earlier[v].push_back(eidx[v * n + w]);
  }
};

// Rotations at the root: first neighbor fixed, the rest up to reversal.
class RootRotations {
 public:
  explicit RootRotations(const std::vector<int>& nbrs) : first_(nbrs.front()), rest_(nbrs.begin() + 1, nbrs.end()) {}

  std::optional<std::vector<int>> next() {
    while (!done_) {
      std::vector<int> current = rest_;
      done_ = !std::next_permutation(rest_.begin(), rest_.end());
      if (current.size() >= 2 && current.front() > current.back()) continue;
      current.insert(current.begin(), first_);
      return current;
    }
    return std::nullopt;
  }

 private:
  int first_;
  std::vector<int> rest_;
  bool done_ = false;
};

struct ChunkResult {
  bool success = false;
  std::uint64_t steps = 0;
  RotationSystem witness;
};

class Worker {
 public:
  Worker(const Plan& plan, int target, const std::atomic<long>& winner, const std::atomic<bool>& stop)
      : p_(plan), target_(target), winner_(winner), stop_(stop) {
    succ_.assign(p_.n * p_.n, -1);
    pred_.assign(p_.n * p_.n, -1);
    stamp_.assign(static_cast<std::size_t>(p_.n) * p_.n * 2, 0);
    seen_.assign(stamp_.size(), 0);
    chain_len_.assign(stamp_.size(), 0);
    rot_.resize(p_.n);
  }

  ChunkResult run(const std::vector<int>& root_rotation, long id, std::uint64_t limit) {
    id_ = id;
    limit_ = limit;
    steps_ = 0;
    halted_ = false;
    sign_.assign(p_.m, 1);
    assigned_.assign(p_.n, 0);
    ChunkResult out;
    assign_rotation(p_.order[0], root_rotation);
    out.success = try_node(0, 0, 0);
    out.steps = steps_;
    if (out.success) out.witness = witness_;
    return out;
  }

 private:
  bool halted() {
    if (halted_) return true;
    if (steps_ > limit_) halted_ = true;
    if ((node_ & 255) == 0 &&
        (stop_.load(std::memory_order_relaxed) || winner_.load(std::memory_order_relaxed) < id_)) {
      halted_ = true;
    }
    return halted_;
  }

  void assign_rotation(int v, const std::vector<int>& rot) {
    const int d = static_cast<int>(rot.size());
    for (int i = 0; i < d; ++i) {
      succ_[v * p_.n + rot[i]] = rot[(i + 1) % d];
      pred_[v * p_.n + rot[i]] = rot[(i + d - 1) % d];
    }
    rot_[v] = rot;
  }

  int step(int f) const {
    const int n = p_.n;
    int s = f & 1;
    int uv = f >> 1;
    int u = uv / n;
    int v = uv % n;
    int arrive = s ^ (sign_[p_.eidx[uv]] < 0 ? 1 : 0);
    int w = arrive == 0 ? succ_[v * n + u] : pred_[v * n + u];
    return ((v * n + w) << 1) | arrive;
  }

  int head(int f) const { return (f >> 1) % p_.n; }

  // A flag can be followed once both ends of its edge are assigned. Every
  // orbit that closes at this node runs through an edge between v and an
  // assigned neighbor.
  void trace_at(int v, int& closed, int& closed_len) {
    const int n = p_.n;
    const int modes = p_.signed_mode ? 2 : 1;
    for (int u : p_.nbrs[v]) {
      if (!assigned_[u]) continue;
      for (int k = 0; k < 2 * modes; ++k) {
        const int s = k >> 1;
        const int start = (k & 1 ? (v * n + u) << 1 : (u * n + v) << 1) | s;
        if (stamp_[start] == node_) continue;
        int cur = start;
        int len = 0;
        while (true) {
          stamp_[cur] = node_;
          int next = step(cur);
          ++steps_;
          ++len;
          if (next == start) {
            ++closed;
            closed_len += len;
            break;
          }
          if (!assigned_[head(next)] || stamp_[next] == node_) break;
          cur = next;
        }
      }
    }
  }

  // Unclosed orbits hold open chains of followable flags. A chain of c flags
  // (counting the flag it ends on) sits in an orbit of at least c flags, so
  // every flag beyond the girth is one that no further face can use.
  int open_chain_waste(int depth) {
    const int n = p_.n;
    const int modes = p_.signed_mode ? 2 : 1;
    ++epoch_;
    starts_.clear();
    for (int i = 0; i <= depth; ++i) {
      const int x = p_.order[i];
      for (int y : p_.nbrs[x]) {
        if (!assigned_[y]) continue;
        for (int s = 0; s < modes; ++s) {
          const int start = ((x * n + y) << 1) | s;
          if (seen_[start] == epoch_) continue;
          int cur = start;
          int len = 0;
          bool open = true;
          while (true) {
            seen_[cur] = epoch_;
            ++len;
            int next = step(cur);
            ++steps_;
            if (next == start) {
              open = false;
              break;
            }
            if (!assigned_[head(next)]) {
              ++len;
              break;
            }
            if (seen_[next] == epoch_) {
              // An earlier walk began at `next`; absorb it.
              len += chain_len_[next];
              chain_len_[next] = 0;
              break;
            }
            cur = next;
          }
          if (open) {
            chain_len_[start] = len;
            starts_.push_back(start);
          }
        }
      }
    }
    int waste = 0;
    for (int f : starts_) waste += std::max(0, chain_len_[f] - p_.gmin);
    return waste;
  }

  bool try_node(int depth, int closed, int closed_len) {
    const int v = p_.order[depth];
    assigned_[v] = 1;
    ++node_;
    trace_at(v, closed, closed_len);
    bool found = false;
    auto reaches = [&](int waste) {
      const int faces_cap = (closed + (p_.total_flags - closed_len - waste) / p_.gmin) / p_.mult;
      return p_.n - p_.m + faces_cap >= target_;
    };
    if (!halted() && reaches(0) && (depth + 1 == p_.n || reaches(open_chain_waste(depth)))) {
      if (depth + 1 == p_.n) {
        found = closed_len == p_.total_flags && p_.n - p_.m + closed / p_.mult >= target_ &&
                (!p_.signed_mode || std::find(sign_.begin(), sign_.end(), -1) != sign_.end());
        if (found) witness_ = RotationSystem{rot_, std::vector<int>(sign_.begin(), sign_.end())};
      } else {
        found = expand(depth + 1, closed, closed_len);
      }
    }
    assigned_[v] = 0;
    return found;
  }

  bool expand(int depth, int closed, int closed_len) {
    const int v = p_.order[depth];
    const auto& nb = p_.nbrs[v];
    std::vector<int> rest(nb.begin() + 1, nb.end());
    const auto& cot = p_.cot_earlier[v];
    const std::uint64_t masks = p_.signed_mode ? (std::uint64_t{1} << cot.size()) : 1;
    std::vector<int> rot(nb.size());
    do {
      rot[0] = nb[0];
      std::copy(rest.begin(), rest.end(), rot.begin() + 1);
      assign_rotation(v, rot);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        for (std::size_t i = 0; i < cot.size(); ++i) sign_[cot[i]] = (mask >> i) & 1 ? -1 : 1;
        if (try_node(depth, closed, closed_len)) return true;
        if (halted_) return false;
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    for (int e : cot) sign_[e] = 1;
    return false;
  }

  const Plan& p_;
  int target_;
  const std::atomic<long>& winner_;
  const std::atomic<bool>& stop_;
  long id_ = 0;
  std::uint64_t limit_ = 0;
  std::uint64_t steps_ = 0;
  bool halted_ = false;
  std::uint64_t node_ = 0;
  std::vector<int> succ_, pred_;
  std::vector<signed char> sign_;
  std::vector<char> assigned_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::uint64_t> seen_;
  std::vector<int> chain_len_;
  std::vector<int> starts_;
  std::vector<std::vector<int>> rot_;
  RotationSystem witness_;
};

enum class Outcome { Found, Absent, OverBudget };

struct TargetRun {
  Outcome outcome = Outcome::Absent;
  std::uint64_t steps = 0;
  RotationSystem witness;
};

// Searches for an embedding with chi >= target. Chunks (root rotations) are
// accounted in order as if run sequentially, so the outcome, the step count
// and the witness do not depend on the number of threads.
TargetRun run_target(const Plan& plan, int target, std::uint64_t remaining, int threads) {
  RootRotations gen(plan.nbrs[plan.order[0]]);
  std::mutex mutex;
  long next_id = 0;
  long total_chunks = -1;
  long frontier = 0;
  std::map<long, ChunkResult> pending;
  std::atomic<long> winner{std::numeric_limits<long>::max()};
  std::atomic<bool> stop{false};
  TargetRun run;
  bool decided = false;

  auto work = [&] {
    Worker worker(plan, target, winner, stop);
    while (true) {
      std::vector<int> root;
      long id = 0;
      {
        std::lock_guard lock(mutex);
        if (stop) return;
        auto next = gen.next();
        if (!next) {
          total_chunks = next_id;
          return;
        }
        root = std::move(*next);
        id = next_id++;
      }
      if (id > winner.load()) return;
      ChunkResult result = worker.run(root, id, remaining);
      std::lock_guard lock(mutex);
      if (result.success) {
        long w = winner.load();
        while (id < w && !winner.compare_exchange_weak(w, id)) {
        }
      }
      pending.emplace(id, std::move(result));
      while (!decided) {
        auto it = pending.find(frontier);
        if (it == pending.end()) break;
        run.steps += it->second.steps;
        if (run.steps > remaining) {
          run.outcome = Outcome::OverBudget;
          decided = true;
        } else if (it->second.success) {
          run.outcome = Outcome::Found;
          run.witness = std::move(it->second.witness);
          decided = true;
        }
        pending.erase(it);
        ++frontier;
      }
      if (decided) {
        stop = true;
        return;
      }
    }
  };

  const int workers = std::max(1, threads);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (!decided && frontier != total_chunks) throw std::logic_error("embedding search ended with unprocessed chunks");
  return run;
}

bool is_tree(const Graph& g) { return g.size() == g.order() - 1; }

}  // namespace

ClassSearchResult max_euler_characteristic_in_class(const Graph& g, SurfaceClass surface,
                                                    const SearchOptions& options) {
  if (g.order() < 1) throw EmbeddingError("embedding search: empty graph");
  if (!is_connected(g)) throw EmbeddingError("embedding search: graph must be connected");
  const bool signed_search = surface == SurfaceClass::NonOrientable;

  ClassSearchResult out;
  out.exhaustive = true;
  if (is_tree(g)) {
    // Every sign assignment on a tree switches to all +1: one face, sphere only.
    if (!signed_search) {
      out.chi = 2;
      out.witness = RotationSystem::identity(g);
    }
    return out;
  }

  Plan plan(g, signed_search);
  RotationSystem baseline = RotationSystem::identity(g);
  if (signed_search) {
    // Identity rotations with one twisted cotree edge.
    for (int v : plan.order) {
      if (plan.cot_earlier[v].empty()) continue;
      baseline.signs[plan.cot_earlier[v].front()] = -1;
      break;
    }
  }
  const int baseline_chi = trace_faces(g, baseline).chi;

  const int n = g.order();
  const int m = g.size();
  int top = n - m + (2 * m) / plan.gmin;
  int stride = 1;
  if (signed_search) {
    top = std::min(top, 1);
  } else {
    top = std::min(top, 2);
    if ((top % 2 + 2) % 2 != 0) --top;
    stride = 2;
  }

  std::uint64_t remaining = options.budget;
  for (int target = top; target > baseline_chi; target -= stride) {
    TargetRun run = run_target(plan, target, remaining, options.threads);
    out.steps += std::min(run.steps, remaining);
    if (run.outcome == Outcome::Found) {
      auto summary = trace_faces(g, run.witness);
      if (summary.chi != target || summary.orientable == signed_search) {
        throw std::logic_error("embedding search produced an inconsistent witness");
      }
      out.chi = target;
      out.witness = std::move(run.witness);
      return out;
    }
    if (run.outcome == Outcome::OverBudget) {
      if (options.strict) {
        throw BudgetExceeded("embedding search exceeded " + std::to_string(options.budget) +
                             " face-tracing steps while testing chi >= " + std::to_string(target));
      }
      out.chi = baseline_chi;
      out.witness = baseline;
      out.exhaustive = false;
      return out;
    }
    remaining -= run.steps;
  }
  out.chi = baseline_chi;
  out.witness = baseline;
  return out;
}

EmbeddingSearchResult max_euler_characteristic(const Graph& g, const SearchOptions& options) {
  EmbeddingSearchResult out;
  out.orientable = max_euler_characteristic_in_class(g, SurfaceClass::Orientable, options);
  out.steps = out.orientable.steps;
  out.chi = *out.orientable.chi;
  out.witness = out.orientable.witness;
  out.exhaustive = out.orientable.exhaustive;
  if (!options.orientable_only) {
    out.nonorientable = max_euler_characteristic_in_class(g, SurfaceClass::NonOrientable, options);
    out.nonorientable_searched = true;
    out.steps += out.nonorientable.steps;
    if (out.nonorientable.chi && *out.nonorientable.chi > out.chi) {
      out.chi = *out.nonorientable.chi;
      out.witness = out.nonorientable.witness;
    }
    out.exhaustive = out.orientable.exhaustive && out.nonorientable.exhaustive;
  } else {
    out.exhaustive = out.orientable.exhaustive && out.chi == 2;
  }
  if (out.orientable.exhaustive && out.chi == 2) out.exhaustive = true;
  return out;
}

}  // namespace bondlab
