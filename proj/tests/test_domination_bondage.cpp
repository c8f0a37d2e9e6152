#include <gtest/gtest.h>

#include <random>

#include "bondlab/bondage.hpp"
#include "bondlab/domination.hpp"
#include "bondlab/enumerate.hpp"
#include "bondlab/families.hpp"
#include "bondlab/graph6.hpp"
#include "oracles.hpp"

using namespace bondlab;

TEST(Domination, SmallFamilies) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(domination_number(make_family("K", {n})).gamma, 1);
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(domination_number(make_family("Kmn", {n, n})).gamma, 2);
  EXPECT_EQ(domination_number(make_family("C", {4})).gamma, oracle::gamma(make_family("C", {4})));
  EXPECT_EQ(domination_number(make_family("petersen")).gamma, 3);
}

TEST(Domination, MatchesSubsetBruteForce) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 400; ++i) {
    Graph g = oracle::random_graph(rng, 1 + i % 14, (i % 7 + 1) / 8.0);
    auto r = domination_number(g);
    ASSERT_EQ(r.gamma, oracle::gamma(g)) << emit_graph6(g);
    ASSERT_EQ(static_cast<int>(r.witness.size()), r.gamma);
    ASSERT_TRUE(is_dominating(g, r.witness));
  }
}

TEST(Domination, IsDominating) {
  EXPECT_TRUE(is_dominating(make_family("K", {3}), std::vector<int>{0}));
  EXPECT_FALSE(is_dominating(make_family("C", {5}), std::vector<int>{0}));
  Graph p = make_family("petersen");
  EXPECT_TRUE(is_dominating(p, VertexMask{(1u << 10) - 1}));
  EXPECT_TRUE(has_dominating_set(p, 3));
  EXPECT_FALSE(has_dominating_set(p, 2));
}

TEST(Domination, OrderLimits) {
  EXPECT_THROW(domination_number(Graph()), GraphError);
  EXPECT_THROW(domination_number(make_family("C", {12}), 10), GraphError);
}

TEST(Domination, NeverDecreasesWhenEdgesAreRemoved) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_graph(rng, 3 + i % 10, 0.4);
    if (g.size() == 0) continue;
    std::uniform_int_distribution<int> pick(0, g.size() - 1);
    Graph h = g.without_edges({g.edges()[pick(rng)]});
    ASSERT_LE(domination_number(g).gamma, domination_number(h).gamma);
  }
}

TEST(Bondage, KnownValues) {
  EXPECT_EQ(bondage_number(make_family("P", {2})).b, 1);
  EXPECT_EQ(bondage_number(make_family("C", {4})).b, 3);
  for (int n = 3; n <= 4; ++n) EXPECT_EQ(bondage_number(make_family("Kmn", {n, n})).b, n);
  auto p2 = bondage_number(make_family("P", {2}));
  EXPECT_EQ(p2.gamma_before, 1);
  EXPECT_EQ(p2.gamma_after, 2);
  EXPECT_THROW(bondage_number(Graph(3)), GraphError);
}

TEST(Bondage, MatchesEdgeSubsetBruteForce) {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (int i = 0; checked < 120; ++i) {
    Graph g = oracle::random_graph(rng, 2 + i % 6, 0.55);
    if (g.size() == 0 || g.size() > 12) continue;
    ++checked;
    auto r = bondage_number(g);
    ASSERT_FALSE(r.above_cap);
    ASSERT_EQ(r.b, oracle::bondage(g)) << emit_graph6(g);
    ASSERT_EQ(static_cast<int>(r.witness_edges.size()), r.b);
    ASSERT_GT(oracle::gamma(g.without_edges(r.witness_edges)), oracle::gamma(g));
  }
}

TEST(Bondage, SmallestCompleteBipartiteIsTheFourCycle) {
  // K2,2 = C4: removing any two edges leaves gamma at 2, so b = 3, not 2.
  Graph k22 = make_family("Kmn", {2, 2});
  EXPECT_EQ(oracle::iso_key(k22), oracle::iso_key(make_family("C", {4})));
  EXPECT_EQ(oracle::bondage(k22), 3);
  EXPECT_EQ(bondage_number(k22).b, 3);
}

TEST(Bondage, ComponentMinimum) {
  // K4 has b = 3, P2 has b = 1.
  Graph g(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}});
  auto r = bondage_number(g);
  EXPECT_EQ(r.b, 1);
  ASSERT_EQ(r.witness_edges.size(), 1u);
  EXPECT_EQ(r.witness_edges[0], (Edge{4, 5}));
}

TEST(Bondage, CapAndThreads) {
  BondageOptions capped;
  capped.cap = 2;
  auto r = bondage_number(make_family("C", {4}), capped);
  EXPECT_TRUE(r.above_cap);
  EXPECT_EQ(r.b, 3);

  for (const char* name : {"petersen"}) {
    auto one = bondage_number(make_family(name));
    for (int t : {2, 4, 8}) {
      BondageOptions o;
      o.threads = t;
      auto many = bondage_number(make_family(name), o);
      EXPECT_EQ(many.b, one.b);
      EXPECT_EQ(many.witness_edges, one.witness_edges);
    }
  }
}

TEST(BPrime, Examples) {
  auto k4 = compute_b_prime(make_family("K", {4}));
  EXPECT_EQ(k4.edge_term, 3);
  EXPECT_EQ(k4.ad_term, 5);
  EXPECT_EQ(k4.b_prime, 3);
  auto p3 = compute_b_prime(make_family("P", {3}));
  EXPECT_EQ(p3.edge_term, 2);
  EXPECT_EQ(p3.ad_term, 1);
  EXPECT_EQ(p3.b_prime, 1);
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(compute_b_prime(make_family("Kmn", {n, n})).b_prime, 2 * n - 1);
  EXPECT_EQ(compute_b_prime(make_family("P", {3}), AverageDegreeTerm::Unfloored).ad_term, 1);
  EXPECT_EQ(compute_b_prime(make_family("P", {4}), AverageDegreeTerm::Unfloored).ad_term, 2);
}

TEST(BPrime, EdgeTermMatchesDirectLoop) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_connected(rng, 2 + i % 9, 0.3);
    auto a = oracle::matrix(g);
    int best = 1 << 20;
    for (const auto& e : g.edges()) {
      int c = 0;
      for (int w = 0; w < g.order(); ++w) c += a[e.u][w] && a[e.v][w];
      best = std::min(best, g.degree(e.u) + g.degree(e.v) - 1 - c);
    }
    ASSERT_EQ(compute_b_prime(g).edge_term, best);
    ASSERT_EQ(hartnell_rall_bound(g).edge_term, best);
  }
}

TEST(HartnellRall, Examples) {
  EXPECT_EQ(hartnell_rall_bound(make_family("K", {3})).edge_term, 2);
  auto c5 = hartnell_rall_bound(make_family("C", {5}));
  EXPECT_EQ(c5.edge_term, 3);
  EXPECT_EQ(c5.degree_term, 3);
  EXPECT_EQ(hartnell_rall_bound(make_family("petersen")).edge_term, 5);
}

TEST(BPrime, FlooredAverageTermCanFallBelowBondage) {
  // P4: removing any single edge leaves gamma at 2, so b = 2, while
  // 2*floor(3/2) - 1 = 1. The unfloored term 4m/n - 1 = 2 still holds.
  Graph p4 = make_family("P", {4});
  EXPECT_EQ(oracle::bondage(p4), 2);
  EXPECT_EQ(compute_b_prime(p4).b_prime, 1);
  EXPECT_EQ(compute_b_prime(p4, AverageDegreeTerm::Unfloored).b_prime, 2);
}

// Every connected graph up to six vertices: b never exceeds the edge or
// degree terms, and m >= n(b + 1)/4.
TEST(Bondage, SmallCorpusRespectsUpperBounds) {
  for (const auto& g : enumerate_connected_graphs(6)) {
    if (g.size() == 0) continue;
    int b = bondage_number(g).b;
    auto hr = hartnell_rall_bound(g);
    ASSERT_LE(b, hr.edge_term) << emit_graph6(g);
    ASSERT_LE(b, hr.degree_term) << emit_graph6(g);
    ASSERT_GE(4 * g.size(), g.order() * (b + 1)) << emit_graph6(g);
    ASSERT_LE(b, compute_b_prime(g, AverageDegreeTerm::Unfloored).b_prime) << emit_graph6(g);
  }
}
