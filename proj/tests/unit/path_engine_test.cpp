#include <gtest/gtest.h>

#include <random>

#include "sgw/errors.hpp"
#include "sgw/families.hpp"
#include "sgw/path_engine.hpp"
#include "sgw/testing/oracles.hpp"
#include "sgw/wiener.hpp"

namespace sgw {
namespace {

Signing square_path_spine_signing(int n) {
  const Graph g = square(path_graph(n));
  std::vector<int> s(g.size(), -1);
  for (int i = 0; i + 1 < n; ++i) s[i] = 1;
  return Signing(s);
}

TEST(SignedDistance, PathForcedSum) {
  const auto r = signed_distance(path_graph(3), Signing({1, 1}), 0, 2);
  EXPECT_EQ(r.value, ExtendedCount(2));
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->vertices, (std::vector<Vertex>{0, 1, 2}));
}

TEST(SignedDistance, TriangleTakesBetterOfTwoPaths) {
  // Edges 01, 12, 02 signed +, +, -; paths 0-2 (sum -1) and 0-1-2 (sum 2).
  const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(signed_distance(tri, Signing({1, 1, -1}), 0, 2).value, ExtendedCount(1));
}

TEST(SignedDistance, SquareOfPathPositiveSpine) {
  const Graph p5 = square(path_graph(5));
  EXPECT_EQ(signed_distance(p5, square_path_spine_signing(5), 0, 4).value, ExtendedCount(0));

  const Graph p6 = square(path_graph(6));
  const Signing s6 = square_path_spine_signing(6);
  const auto d = signed_distance(p6, s6, 0, 5);
  const auto naive = oracle::naive_signed_distance(p6, s6, 0, 5);
  ASSERT_TRUE(naive.has_value());
  EXPECT_EQ(*naive, 1);  // frozen from the naive enumeration
  EXPECT_EQ(d.value, ExtendedCount(1));
}

TEST(SignedDistance, SelfAndDisconnected) {
  const Graph g(3, {{0, 1}});
  const Signing s({1});
  const auto self = signed_distance(g, s, 2, 2);
  EXPECT_EQ(self.value, ExtendedCount(0));
  EXPECT_EQ(self.witness->vertices, (std::vector<Vertex>{2}));
  EXPECT_TRUE(signed_distance(g, s, 0, 2).value.is_infinite());
  EXPECT_THROW(signed_distance(g, s, 0, 3), PreconditionError);
}

TEST(SignedDistance, SizeGuard) {
  const Graph big = cycle_graph(30);
  EXPECT_THROW(signed_distance(big, Signing::constant(30), 0, 15), GuardError);
  EngineLimits raised;
  raised.max_signed_order = 30;
  EXPECT_EQ(signed_distance(big, Signing::constant(30), 0, 15, raised).value, ExtendedCount(15));
}

TEST(CancelingPath, Examples) {
  std::mt19937_64 rng(1);
  const Graph g = oracle::random_graph(7, 0.5, rng);
  const auto c = oracle::random_coloring(g.size(), 3, rng);
  EXPECT_TRUE(exists_canceling_path(g, c, 3, 3));

  const Graph k5 = complete_graph(5);
  const EdgeColoring mono(2, std::vector<int>(k5.size(), 1));
  for (Vertex v = 1; v < 5; ++v) EXPECT_FALSE(exists_canceling_path(k5, mono, 0, v));
}

TEST(CancelingPath, WitnessCountsAreBalanced) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(8, 0.6, rng);
    const int r = 2 + trial % 3;
    const auto c = oracle::random_coloring(g.size(), r, rng);
    const Vertex u = trial % 8, v = (trial * 5 + 3) % 8;
    const auto path = find_canceling_path(g, c, u, v);
    EXPECT_EQ(path.has_value(), oracle::naive_canceling_path(g, c, u, v)) << "trial " << trial;
    if (path) {
      EXPECT_TRUE(path->is_valid(g, u, v));
      const auto counts = path->color_counts(g, c);
      for (int k = 2; k <= r; ++k) EXPECT_EQ(counts[k], counts[1]);
    }
  }
}

TEST(Wiener, Classical) {
  EXPECT_EQ(wiener_classical(path_graph(3)), ExtendedCount(4));
  for (int n = 1; n <= 12; ++n) {
    // Independent count: sum over pairs of |i - j|.
    std::uint64_t pairs = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs += static_cast<std::uint64_t>(j - i);
    EXPECT_EQ(pairs, static_cast<std::uint64_t>(n * n * n - n) / 6);
    EXPECT_EQ(wiener_classical(path_graph(n)), ExtendedCount(pairs));
  }
  EXPECT_TRUE(wiener_classical(Graph(2)).is_infinite());
  EXPECT_EQ(wiener_classical(Graph(1)), ExtendedCount(0));
}

TEST(Wiener, Signed) {
  EXPECT_EQ(wiener_signed(square(path_graph(5)), square_path_spine_signing(5)), ExtendedCount(0));
  EXPECT_EQ(wiener_signed(path_graph(3), Signing({1, 1})), ExtendedCount(4));
  EXPECT_EQ(wiener_signed(path_graph(3), Signing({1, -1})), ExtendedCount(2));
  EXPECT_TRUE(wiener_signed(Graph(3, {{0, 1}}), Signing({1})).is_infinite());
}

TEST(LowerBounds, Examples) {
  EXPECT_EQ(bipartite_lower_bound(complete_bipartite_graph(2, 3)), ExtendedCount(6));
  EXPECT_EQ(bipartite_lower_bound(complete_graph(3)), ExtendedCount(0));
  EXPECT_EQ(bipartite_lower_bound(path_graph(4)), ExtendedCount(4));
  // Two disjoint edges plus an isolated vertex: 1 + 1 + 0.
  EXPECT_EQ(bipartite_lower_bound(Graph(5, {{0, 1}, {2, 3}})), ExtendedCount(2));
  EXPECT_EQ(leaf_lower_bound(star_graph(5)), 4u);
  EXPECT_EQ(leaf_lower_bound(cycle_graph(7)), 0u);
  EXPECT_EQ(leaf_lower_bound(path_graph(2)), 2u);
}

TEST(TreeShortcut, MatchesEngineOnTrees) {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<Edge> edges;
      for (int v = 1; v < n; ++v) edges.push_back(Edge::make(v, std::uniform_int_distribution<int>(0, v - 1)(rng)));
      const Graph t(n, edges);
      const Signing s = oracle::random_signing(t.size(), rng);
      EXPECT_EQ(ExtendedCount(tree_signed_wiener(t, s)), wiener_signed(t, s));
    }
  }
}

// Property suite on random signed graphs.
class SignedProperties : public ::testing::TestWithParam<int> {};

TEST_P(SignedProperties, Invariants) {
  std::mt19937_64 rng(1000 + GetParam());
  const int n = 3 + GetParam() % 6;  // 3..8
  const Graph g = oracle::random_graph(n, 0.3 + 0.1 * (GetParam() % 5), rng);
  const Signing s = oracle::random_signing(g.size(), rng);
  const auto d = signed_distance_matrix(g, s);
  const auto neg = signed_distance_matrix(g, s.negated());
  const auto report = structural_report(g);
  for (Vertex u = 0; u < n; ++u) {
    const auto plain = bfs_distances(g, u);
    for (Vertex v = 0; v < n; ++v) {
      // Oracle equivalence with naive path listing.
      const auto naive = oracle::naive_signed_distance(g, s, u, v);
      if (naive) {
        EXPECT_EQ(d[u][v], ExtendedCount(static_cast<std::uint64_t>(*naive)));
      } else {
        EXPECT_TRUE(d[u][v].is_infinite());
      }
      // Global negation.
      EXPECT_EQ(d[u][v], neg[u][v]);
      // 0 <= d_sigma <= d.
      if (plain[v] >= 0) {
        EXPECT_LE(d[u][v], ExtendedCount(static_cast<std::uint64_t>(plain[v])));
      }
      // Bipartite parity: opposite sides are at odd signed distance.
      if (report.bipartite && plain[v] >= 0 && plain[v] % 2 == 1) {
        EXPECT_EQ(d[u][v].value() % 2, 1u);
      }
      // Canceling path iff distance zero, with a valid witness.
      const auto path = find_canceling_path(g, EdgeColoring::from_signing(s), u, v);
      EXPECT_EQ(path.has_value(), d[u][v] == ExtendedCount(0));
      if (u != v && d[u][v].is_finite()) {
        const auto r = signed_distance(g, s, u, v);
        ASSERT_TRUE(r.witness);
        EXPECT_TRUE(r.witness->is_valid(g, u, v));
        EXPECT_EQ(static_cast<std::uint64_t>(std::abs(r.witness->signed_sum(g, s))), r.value.value());
      }
    }
  }
  // Parity of every path: |sigma(P)| = |P| mod 2.
  for (Vertex u = 0; u < n; ++u) {
    oracle::for_each_simple_path(g, u, [&](const std::vector<Vertex>& p) {
      PathWitness w{p};
      EXPECT_EQ(std::abs(w.signed_sum(g, s)) % 2, static_cast<int>((p.size() - 1) % 2));
    });
  }
  // Deletion monotonicity.
  const VertexSet del{static_cast<Vertex>(GetParam() % n)};
  const auto sub = delete_vertices(g, del);
  const auto ds = signed_distance_matrix(sub.graph, restrict_signing(s, sub));
  for (Vertex a = 0; a < sub.graph.order(); ++a)
    for (Vertex b = 0; b < sub.graph.order(); ++b) EXPECT_GE(ds[a][b], d[sub.new_to_old[a]][sub.new_to_old[b]]);
  // Constant signing collapses to the classical index.
  EXPECT_EQ(wiener_signed(g, Signing::constant(g.size())), wiener_classical(g));
  EXPECT_EQ(wiener_signed(g, Signing::constant(g.size(), -1)), wiener_classical(g));
}

INSTANTIATE_TEST_SUITE_P(Random, SignedProperties, ::testing::Range(0, 60));

TEST(EngineEquivalence, AllLabeledGraphsUpToFiveWithAllSignings) {
  for (int n = 2; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    // n = 5 restricted to every third edge set to keep the run short.
    for (std::uint32_t set = 0; set < (1u << pairs); set += (n == 5 ? 3 : 1)) {
      std::vector<Edge> edges;
      for (int i = 0; i < pairs; ++i)
        if ((set >> i) & 1) edges.push_back(all[i]);
      const Graph g(n, edges);
      for (std::uint32_t bits = 0; bits < (1u << g.size()); ++bits) {
        std::vector<int> s(g.size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = ((bits >> i) & 1) ? -1 : 1;
        const Signing sig(s);
        const auto naive = oracle::naive_wiener_signed(g, sig);
        const auto w = wiener_signed(g, sig);
        if (naive) {
          ASSERT_EQ(w, ExtendedCount(*naive));
        } else {
          ASSERT_TRUE(w.is_infinite());
        }
      }
    }
  }
}

}  // namespace
}  // namespace sgw
