// Randomized and swept properties; runs as its own binary.
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bondlab/bondage.hpp"
#include "bondlab/bounds.hpp"
#include "bondlab/domination.hpp"
#include "bondlab/graph6.hpp"
#include "oracles.hpp"

using namespace bondlab;
using bounds::Fraction;

namespace {

long double t_of(long double chi) {
  auto c = [chi](long double z) { return z * z * z + z * z + (3 * chi - 8) * z + 9 * chi - 12; };
  long double lo = 0, hi = 16;
  while (c(hi) <= 0) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    long double mid = (lo + hi) / 2;
    (c(mid) <= 0 ? lo : hi) = mid;
  }
  return lo;
}

long double order_root(long double chi, long double n) {
  return 0.5L - 3 * chi / n + std::sqrt(25.0L / 4 - 21 * chi / n + 9 * chi * chi / (n * n));
}

long double size_root(long double chi, long double m) { return 3 - 18 * chi / (m + 3 * chi); }

}  // namespace

// With z = max(0, b' - D) and b' >= D + z, every edge has
// min(d(u), d(v)) >= z + 1 + c(u, v) and m >= n(2z + 2 + c)/4 >= (2z + 2 + c)^2/4.
TEST(EdgeChain, RandomConnectedGraphs) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> order(2, 10);
  std::uniform_real_distribution<double> density(0.05, 1.0);
  int with_hypothesis = 0;
  int positive_z = 0;
  for (int i = 0; i < 1000; ++i) {
    Graph g = oracle::random_connected(rng, order(rng), density(rng));
    const int n = g.order();
    const int m = g.size();
    const int delta = degree_stats(g).max_degree;
    const int bp = compute_b_prime(g).b_prime;
    const int z = std::max(0, bp - delta);
    if (bp < delta + z) continue;
    ++with_hypothesis;
    if (z > 0) ++positive_z;
    for (const auto& e : g.edges()) {
      const int c = common_neighbors(g, e.u, e.v);
      ASSERT_GE(std::min(g.degree(e.u), g.degree(e.v)), z + 1 + c) << emit_graph6(g);
      ASSERT_GE(4 * m, n * (2 * z + 2 + c)) << emit_graph6(g);
      ASSERT_GE(n * (2 * z + 2 + c), (2 * z + 2 + c) * (2 * z + 2 + c)) << emit_graph6(g);
    }
  }
  // The sample must actually exercise the implication.
  EXPECT_GT(with_hypothesis, 50);
  EXPECT_GT(positive_z, 0);
}

TEST(EdgeChain, BondageStaysUnderEdgeAndDegreeTerms) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    Graph g = oracle::random_connected(rng, 2 + i % 9, 0.2 + (i % 8) / 10.0);
    int b = bondage_number(g).b;
    auto hr = hartnell_rall_bound(g);
    ASSERT_LE(b, hr.edge_term) << emit_graph6(g);
    ASSERT_LE(b, hr.degree_term) << emit_graph6(g);
    ASSERT_GE(4 * g.size(), g.order() * (b + 1)) << emit_graph6(g);
  }
}

TEST(SignFamilies, CubicAllPositiveExactlyAboveT) {
  for (std::int64_t chi = 0; chi >= -120; --chi) {
    const long double t = t_of(static_cast<long double>(chi));
    for (std::int64_t k = 0; k <= 4000; ++k) {
      const long double z = static_cast<long double>(k) / 100;
      if (std::fabs(z - t) < 1e-9L) continue;
      ASSERT_EQ(bounds::cubic_family_signs(chi, Fraction{k, 100}).all(), z > t) << chi << " " << k;
    }
  }
  // t(0) = 3 is rational; z = t itself is not above t.
  EXPECT_FALSE(bounds::cubic_family_signs(0, Fraction{3, 1}).all());
  EXPECT_TRUE(bounds::cubic_family_signs(0, Fraction{3'000'001, 1'000'000}).all());
}

TEST(SignFamilies, OrderAllPositiveExactlyAboveC) {
  for (std::int64_t chi = 0; chi >= -30; --chi) {
    for (std::int64_t n = 1; n <= 120; n += (n < 20 ? 1 : 7)) {
      const long double c = order_root(chi, n);
      for (std::int64_t k = -500; k <= 3000; k += 3) {
        const long double z = static_cast<long double>(k) / 100;
        if (std::fabs(z - c) < 1e-9L) continue;
        ASSERT_EQ(bounds::order_family_signs(chi, n, Fraction{k, 100}).all(), z > c)
            << chi << " " << n << " " << k;
      }
    }
  }
  EXPECT_FALSE(bounds::order_family_signs(0, 7, Fraction{3, 1}).all());
  EXPECT_TRUE(bounds::order_family_signs(0, 7, Fraction{301, 100}).all());
}

TEST(SignFamilies, SizeAllPositiveExactlyAboveC) {
  for (std::int64_t chi = 0; chi >= -30; --chi) {
    for (std::int64_t m = -3 * chi + 1; m <= -3 * chi + 200; m += 3) {
      const long double c = size_root(chi, m);
      for (std::int64_t k = -500; k <= 6000; k += 7) {
        const long double z = static_cast<long double>(k) / 100;
        if (std::fabs(z - c) < 1e-9L) continue;
        ASSERT_EQ(bounds::size_family_signs(chi, m, Fraction{k, 100}).all(), z > c) << chi << " " << m << " " << k;
      }
    }
  }
  EXPECT_FALSE(bounds::size_family_signs(-1, 22, Fraction{75, 19}).all());
  EXPECT_TRUE(bounds::size_family_signs(-1, 22, Fraction{76, 19}).all());
}

TEST(GirthBound, NonIncreasingInGirth) {
  for (std::int64_t chi = 0; chi >= -400; --chi) {
    std::int64_t prev = bounds::girth_bound(0, chi, 3);
    double prev_s = bounds::girth_s(chi, 3);
    for (std::int64_t g = 4; g <= 60; ++g) {
      std::int64_t cur = bounds::girth_bound(0, chi, g);
      double s = bounds::girth_s(chi, g);
      ASSERT_LE(cur, prev) << chi << " " << g;
      ASSERT_LE(s, prev_s + 1e-12) << chi << " " << g;
      prev = cur;
      prev_s = s;
    }
  }
}

TEST(GirthBound, TriangleFreeNeverExceedsGeneralBound) {
  for (std::int64_t chi = 0; chi >= -400; --chi) {
    ASSERT_LE(bounds::girth_bound(0, chi, 4), bounds::girth_bound(0, chi, 3));
    ASSERT_LE(bounds::girth_bound(0, chi, 4), bounds::sqrt_t_bound(0, chi));
  }
}

TEST(Domination, MonotoneUnderEdgeDeletion) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 500; ++i) {
    Graph g = oracle::random_graph(rng, 2 + i % 12, 0.45);
    if (g.size() == 0) continue;
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    Graph h = g.without_edges({g.edges()[pick(rng)]});
    int before = domination_number(g).gamma;
    int after = domination_number(h).gamma;
    ASSERT_GE(after, before);
    ASSERT_LE(after, before + 1);
  }
}
