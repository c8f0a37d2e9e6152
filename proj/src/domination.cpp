#include "bondlab/domination.hpp"

#include <algorithm>

namespace bondlab {

namespace {

class Dominator {
 public:
  explicit Dominator(const Graph& g) : n_(g.order()), closed_(g.order()) {
    for (int v = 0; v < n_; ++v) closed_[v] = g.closed_neighbors(v);
  }

  VertexMask all() const { return n_ == 64 ? ~VertexMask{0} : bit(n_) - 1; }

  bool search(VertexMask uncovered, int picks_left, VertexMask& chosen) const {
    if (uncovered == 0) return true;
    if (picks_left == 0) return false;

    int pivot = -1;
    int pivot_options = kMaxVertices + 1;
    int best_gain = 0;
    for (int v = 0; v < n_; ++v) {
      int gain = std::popcount(closed_[v] & uncovered);
      best_gain = std::max(best_gain, gain);
      if ((uncovered & bit(v)) && std::popcount(closed_[v]) < pivot_options) {
        pivot = v;
        pivot_options = std::popcount(closed_[v]);
      }
    }
    if (std::popcount(uncovered) > picks_left * best_gain) return false;

    for (VertexMask options = closed_[pivot]; options; options &= options - 1) {
      int w = std::countr_zero(options);
      chosen |= bit(w);
      if (search(uncovered & ~closed_[w], picks_left - 1, chosen)) return true;
      chosen &= ~bit(w);
    }
    return false;
  }

  int greedy_size() const {
    VertexMask uncovered = all();
    int count = 0;
    while (uncovered) {
      int best = 0;
      int best_gain = -1;
      for (int v = 0; v < n_; ++v) {
        int gain = std::popcount(closed_[v] & uncovered);
        if (gain > best_gain) {
          best = v;
          best_gain = gain;
        }
      }
      uncovered &= ~closed_[best];
      ++count;
    }
    return count;
  }

  int max_closed_degree() const {
    int d = 0;
    for (auto c : closed_) d = std::max(d, std::popcount(c));
    return d;
  }

 private:
  int n_;
  std::vector<VertexMask> closed_;
};

std::vector<int> to_list(VertexMask mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

}  // namespace

DominationResult domination_number(const Graph& g, int max_order) {
  if (g.order() < 1) throw GraphError("domination number needs at least one vertex");
  if (g.order() > max_order) {
    throw GraphError("domination: order " + std::to_string(g.order()) + " above guard " + std::to_string(max_order));
  }
  Dominator dom(g);
  const int upper = dom.greedy_size();
  const int lower = (g.order() + dom.max_closed_degree() - 1) / dom.max_closed_degree();
  for (int k = lower; k <= upper; ++k) {
    VertexMask chosen = 0;
    if (dom.search(dom.all(), k, chosen)) return {k, to_list(chosen)};
  }
  throw std::logic_error("domination search missed the greedy solution");
}

bool has_dominating_set(const Graph& g, int k) {
  if (g.order() == 0) return true;
  Dominator dom(g);
  VertexMask chosen = 0;
  return dom.search(dom.all(), k, chosen);
}

bool is_dominating(const Graph& g, VertexMask set) {
  VertexMask covered = 0;
  for (VertexMask s = set; s; s &= s - 1) covered |= g.closed_neighbors(std::countr_zero(s));
  VertexMask all = g.order() == 64 ? ~VertexMask{0} : bit(g.order()) - 1;
  return (covered & all) == all;
}

bool is_dominating(const Graph& g, const std::vector<int>& set) {
  VertexMask mask = 0;
  for (int v : set) {
    if (v < 0 || v >= g.order()) throw GraphError("is_dominating: vertex " + std::to_string(v) + " out of range");
    mask |= bit(v);
  }
  return is_dominating(g, mask);
}

}  // namespace bondlab
