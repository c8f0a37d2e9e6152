#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bondlab/embedding.hpp"
#include "bondlab/enumerate.hpp"
#include "bondlab/families.hpp"
#include "bondlab/graph6.hpp"
#include "oracles.hpp"

using namespace bondlab;

namespace {

oracle::Embedding to_oracle(const Graph& g, const RotationSystem& rs) {
  oracle::Embedding em;
  em.rot = rs.rotations;
  for (int i = 0; i < g.size(); ++i) em.sign[{g.edges()[i].u, g.edges()[i].v}] = rs.sign(i);
  return em;
}

RotationSystem random_rotation_system(const Graph& g, std::mt19937_64& rng, bool signed_edges) {
  RotationSystem rs = RotationSystem::identity(g);
  for (auto& r : rs.rotations) std::shuffle(r.begin(), r.end(), rng);
  if (signed_edges) {
    std::bernoulli_distribution coin(0.3);
    rs.signs.assign(g.size(), 1);
    for (auto& s : rs.signs) s = coin(rng) ? -1 : 1;
  }
  return rs;
}

}  // namespace

TEST(Faces, PathHasOneFace) {
  for (int n = 2; n <= 8; ++n) {
    Graph p = make_family("P", {n});
    auto s = trace_faces(p, RotationSystem::identity(p));
    ASSERT_EQ(s.face_lengths, std::vector<int>{2 * (n - 1)});
    for (const auto& [f, f2] : s.edge_faces) {
      EXPECT_EQ(f, 2 * (n - 1));
      EXPECT_EQ(f2, 2 * (n - 1));
    }
    EXPECT_EQ(s.chi, 2);
  }
}

TEST(Faces, TriangleAndPlanarK4) {
  Graph c3 = make_family("C", {3});
  auto s = trace_faces(c3, RotationSystem::identity(c3));
  EXPECT_EQ(s.face_lengths, (std::vector<int>{3, 3}));
  EXPECT_EQ(s.chi, 2);

  // K4 drawn as a triangle 1-2-3 around vertex 0, all rotations clockwise.
  Graph k4 = make_family("K", {4});
  RotationSystem planar;
  planar.rotations = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  auto t = trace_faces(k4, planar);
  EXPECT_EQ(t.face_lengths, (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(t.chi, 2);
  EXPECT_TRUE(t.orientable);
  EXPECT_EQ(oracle::face_count(k4, to_oracle(k4, planar)), 4);
}

TEST(Faces, MatchPermutationOracle) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    Graph g = oracle::random_connected(rng, 2 + i % 9, 0.35);
    RotationSystem rs = random_rotation_system(g, rng, i % 2 == 1);
    auto s = trace_faces(g, rs);
    auto em = to_oracle(g, rs);
    ASSERT_EQ(s.chi, g.order() - g.size() + oracle::face_count(g, em)) << emit_graph6(g);
    ASSERT_EQ(s.orientable, oracle::orientable(g, em));
    ASSERT_EQ(static_cast<int>(s.face_walks.size()), static_cast<int>(s.face_lengths.size()));
    int total = 0;
    for (int f : s.face_lengths) total += f;
    ASSERT_EQ(total, 2 * g.size());
  }
}

TEST(Faces, NormalizationKeepsTheSurface) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    Graph g = oracle::random_connected(rng, 3 + i % 7, 0.4);
    RotationSystem rs = random_rotation_system(g, rng, true);
    RotationSystem norm = normalize_signs(g, rs);
    auto a = trace_faces(g, rs);
    auto b = trace_faces(g, norm);
    auto la = a.face_lengths, lb = b.face_lengths;
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    ASSERT_EQ(la, lb);
    ASSERT_EQ(a.orientable, b.orientable);
    ASSERT_EQ(is_orientable(g, rs), a.orientable);
  }
}

TEST(Faces, ValidationErrors) {
  Graph c4 = make_family("C", {4});
  RotationSystem rs = RotationSystem::identity(c4);
  rs.rotations[0] = {1, 2};
  EXPECT_THROW(rs.validate(c4), EmbeddingError);
  RotationSystem bad_sign = RotationSystem::identity(c4);
  bad_sign.signs = {1, 0, 1, 1};
  EXPECT_THROW(bad_sign.validate(c4), EmbeddingError);
}

TEST(Curvature, Examples) {
  Graph c3 = make_family("C", {3});
  auto w = curvature(c3, trace_faces(c3, RotationSystem::identity(c3)));
  for (double x : w.weights) EXPECT_NEAR(x, 0.0, 1e-15);
  Graph p2 = make_family("P", {2});
  auto w2 = curvature(p2, trace_faces(p2, RotationSystem::identity(p2)));
  ASSERT_EQ(w2.weights.size(), 1u);
  EXPECT_NEAR(w2.weights[0], 0.0, 1e-15);
}

TEST(Curvature, SumsToZero) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 2000; ++i) {
    Graph g = oracle::random_connected(rng, 2 + i % 15, 0.3);
    RotationSystem rs = random_rotation_system(g, rng, i % 3 == 0);
    auto total = curvature(g, trace_faces(g, rs)).total;
    ASSERT_LE(std::abs(total), 1e-12) << emit_graph6(g);
  }
}

TEST(Search, KnownSurfaces) {
  auto k4 = max_euler_characteristic(make_family("K", {4}));
  EXPECT_EQ(k4.chi, 2);
  EXPECT_TRUE(k4.exhaustive);
  auto k5 = max_euler_characteristic(make_family("K", {5}));
  EXPECT_EQ(k5.chi, 1);
  EXPECT_EQ(k5.orientable.chi, 0);
  EXPECT_TRUE(k5.exhaustive);
  auto k44 = max_euler_characteristic(make_family("Kmn", {4, 4}));
  EXPECT_EQ(k44.chi, 0);
  EXPECT_TRUE(k44.exhaustive);
  auto k6 = max_euler_characteristic(make_family("K", {6}));
  EXPECT_EQ(k6.chi, 1);
  EXPECT_EQ(k6.orientable.chi, 0);
  EXPECT_EQ(k6.orientable_genus(), 1);
  EXPECT_EQ(k6.nonorientable_genus(), 1);
  auto pet = max_euler_characteristic(make_family("petersen"));
  EXPECT_EQ(pet.orientable.chi, 0);
  EXPECT_EQ(pet.nonorientable.chi, 1);
}

TEST(Search, MatchesRingelFormulas) {
  for (int n : {4, 5, 6}) {
    auto r = max_euler_characteristic_in_class(make_family("K", {n}), SurfaceClass::Orientable);
    ASSERT_TRUE(r.exhaustive);
    EXPECT_EQ(*r.chi, ringel_chi_complete(n).orientable) << "K" << n;
  }
  for (int n : {4, 5}) {
    auto r = max_euler_characteristic(make_family("K", {n}));
    EXPECT_EQ(r.chi, ringel_chi_complete(n).chi);
  }
  for (auto [a, b] : {std::pair{3, 3}, std::pair{4, 4}, std::pair{2, 5}}) {
    auto r = max_euler_characteristic_in_class(make_family("Kmn", {a, b}), SurfaceClass::Orientable);
    ASSERT_TRUE(r.exhaustive);
    EXPECT_EQ(*r.chi, ringel_chi_complete_bipartite(a, b).orientable);
  }
  EXPECT_EQ(ringel_chi_complete(7).orientable, 0);
  EXPECT_EQ(ringel_chi_complete(7).nonorientable, -1);
}

TEST(Search, MatchesExhaustiveOracleOnSmallGraphs) {
  for (const auto& g : enumerate_connected_graphs(5)) {
    if (g.size() == 0) continue;
    auto want = oracle::max_chi(g);
    auto got = max_euler_characteristic(g);
    ASSERT_TRUE(got.exhaustive) << emit_graph6(g);
    ASSERT_EQ(*got.orientable.chi, want.orientable) << emit_graph6(g);
    ASSERT_EQ(got.nonorientable.chi, want.nonorientable) << emit_graph6(g);
    ASSERT_EQ(got.chi, std::max(want.orientable, want.nonorientable.value_or(-1000)));
  }
}

TEST(Search, WitnessReachesTheMaximum) {
  for (const char* name : {"petersen"}) {
    Graph g = make_family(name);
    auto r = max_euler_characteristic(g);
    auto s = trace_faces(g, r.witness);
    EXPECT_EQ(s.chi, r.chi);
    EXPECT_EQ(trace_faces(g, r.orientable.witness).chi, *r.orientable.chi);
    EXPECT_TRUE(trace_faces(g, r.orientable.witness).orientable);
    EXPECT_FALSE(trace_faces(g, r.nonorientable.witness).orientable);
  }
}

TEST(Search, ThreadCountDoesNotChangeTheAnswer) {
  for (const char* spec : {"K6", "Q3"}) {
    Graph g = spec[0] == 'K' ? make_family("K", {6}) : make_family("Q", {3});
    auto one = max_euler_characteristic(g);
    for (int t : {2, 4}) {
      SearchOptions o;
      o.threads = t;
      auto many = max_euler_characteristic(g, o);
      EXPECT_EQ(many.chi, one.chi);
      EXPECT_EQ(many.witness, one.witness);
      EXPECT_EQ(many.orientable.witness, one.orientable.witness);
      EXPECT_EQ(many.nonorientable.witness, one.nonorientable.witness);
      EXPECT_EQ(many.steps, one.steps);
    }
  }
}

TEST(Search, BudgetHandling) {
  Graph k6 = make_family("K", {6});
  SearchOptions tiny;
  tiny.budget = 1000;
  auto partial = max_euler_characteristic(k6, tiny);
  EXPECT_FALSE(partial.exhaustive);
  EXPECT_EQ(trace_faces(k6, partial.witness).chi, partial.chi);
  tiny.strict = true;
  EXPECT_THROW(max_euler_characteristic(k6, tiny), BudgetExceeded);
}

TEST(Search, TreesAndDisconnected) {
  auto tree = max_euler_characteristic(make_family("P", {5}));
  EXPECT_EQ(tree.chi, 2);
  EXPECT_TRUE(tree.exhaustive);
  EXPECT_FALSE(tree.nonorientable.chi.has_value());
  EXPECT_THROW(max_euler_characteristic(Graph(4, {{0, 1}, {2, 3}})), EmbeddingError);
}

TEST(Witness, JsonRoundTrip) {
  Graph k5 = make_family("K", {5});
  auto r = max_euler_characteristic(k5);
  std::string text = witness_json(k5, r.witness);
  RotationSystem back = parse_witness_json(text);
  EXPECT_EQ(trace_faces(k5, back).chi, r.chi);
  EXPECT_EQ(back.rotations, r.witness.rotations);
  EXPECT_THROW(parse_witness_json("{\"n\": 3}"), EmbeddingError);
}
