#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "sgw/constructions.hpp"
#include "sgw/errors.hpp"
#include "sgw/extremal.hpp"
#include "sgw/families.hpp"
#include "sgw/graph_io.hpp"
#include "sgw/wiener.hpp"

namespace sgw {
namespace {

int count_sign(const Signing& s, int sign) { return static_cast<int>(std::count(s.values().begin(), s.values().end(), sign)); }

void expect_certified(const SignedWitness& w) {
  const auto c = certify(w);
  EXPECT_TRUE(c.claim_holds) << w.name;
}

TEST(SquarePath, Shape) {
  const auto w5 = square_path_signing(5);
  EXPECT_EQ(w5.graph.size(), 7u);
  EXPECT_EQ(count_sign(*w5.signing, 1), 4);
  EXPECT_EQ(count_sign(*w5.signing, -1), 3);
  EXPECT_EQ(wiener_signed(w5.graph, *w5.signing), ExtendedCount(0));
  for (int n = 2; n <= 12; ++n) {
    const auto w = square_path_signing(n);
    EXPECT_EQ(count_sign(*w.signing, -1), n - 2);
    for (int i = 0; i + 1 < n; ++i) EXPECT_EQ((*w.signing)[*w.graph.edge_index(i, i + 1)], 1);
  }
}

TEST(SquarePath, Certified) {
  for (int n : {5, 7, 8, 9, 10, 11, 12}) expect_certified(square_path_signing(n));
  const auto w6 = square_path_signing(6);
  const auto c = certify(w6);
  EXPECT_TRUE(c.claim_holds);
  EXPECT_EQ(c.failing_pairs, (std::vector<std::pair<Vertex, Vertex>>{{0, 5}}));
  for (int n = 2; n <= 4; ++n) expect_certified(square_path_signing(n));
}

TEST(SquarePath, StoredPathOnNine) {
  const auto w = square_path_signing(9);
  ASSERT_EQ(w.stored_paths.size(), 1u);
  const auto& p = w.stored_paths[0];
  EXPECT_TRUE(p.is_valid(w.graph, 0, 8));
  EXPECT_EQ(p.signed_sum(w.graph, *w.signing), 0);
}

TEST(CompleteCyclic, Certified) {
  for (int n : {5, 6, 8}) expect_certified(complete_cyclic_signing(n));
  const auto w4 = complete_cyclic_signing(4);
  EXPECT_FALSE(w4.claim.expected);
  expect_certified(w4);
  EXPECT_EQ(count_sign(*complete_cyclic_signing(7).signing, 1), 7);
}

TEST(SquareTree, Examples) {
  // Spider with legs 1, 1, 2.
  const Graph spider(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  expect_certified(square_tree_signing(spider));
  const auto star = square_tree_signing(star_graph(6));
  EXPECT_EQ(star.graph.size(), 15u);
  expect_certified(star);
  expect_certified(square_tree_signing(path_graph(7)));
  expect_certified(square_tree_signing(path_graph(6)));
  // A relabeled path on six vertices still gets a working signing.
  expect_certified(square_tree_signing(Graph(6, {{3, 0}, {0, 5}, {5, 1}, {1, 4}, {4, 2}})));
  EXPECT_THROW(square_tree_signing(cycle_graph(5)), PreconditionError);
  EXPECT_THROW(square_tree_signing(path_graph(4)), PreconditionError);
}

TEST(SquareTree, EveryTreeUpToNine) {
  for (int n = 5; n <= 9; ++n) {
    for (const auto& rec : enumerate_trees(n)) expect_certified(square_tree_signing(rec.tree));
  }
}

TEST(SquareCycle, Certified) {
  for (int n : {6, 8, 9}) expect_certified(square_cycle_signing(n));
  const auto w5 = square_cycle_signing(5);
  EXPECT_EQ(w5.graph.size(), 10u);
  expect_certified(w5);
  const auto w7 = square_cycle_signing(7);
  EXPECT_EQ(w7.name, "c7sq");
  expect_certified(w7);
  EXPECT_THROW(square_cycle_signing(4), PreconditionError);
}

TEST(Special, StoredWitnessesCertifyAndMatchSearch) {
  for (const auto& tag : special_tags()) {
    const auto w = special_witness(tag);
    expect_certified(w);
    const auto again = search_special_witness(tag);
    EXPECT_EQ(again.signing, w.signing) << tag;
    EXPECT_EQ(again.designated_edge, w.designated_edge) << tag;
  }
  EXPECT_THROW(special_witness("nosuch"), PreconditionError);
}

TEST(Special, Shapes) {
  const auto theta = special_witness("theta4");
  EXPECT_EQ(theta.graph.order(), 6);
  EXPECT_EQ(theta_recognize(theta.graph)->t, 4);
  const auto even = special_witness("g_small_even");
  EXPECT_EQ(even.graph.order(), 4);
  EXPECT_EQ(even.graph.size(), 6u);
  ASSERT_TRUE(even.designated_edge);
  const auto odd = special_witness("g_small_odd");
  EXPECT_EQ(odd.graph.order(), 5);
  EXPECT_EQ(odd.graph.size(), 7u);
  ASSERT_TRUE(odd.designated_edge);
  EXPECT_EQ(special_witness("c7sq").claim.k, 2);
}

TEST(Special, FixtureTextRoundTrips) {
  for (const auto& tag : special_tags()) {
    const auto w = special_witness(tag);
    const auto back = parse_labeled_graph(to_fixture_text(w));
    EXPECT_EQ(back.graph, w.graph);
    EXPECT_EQ(back.signing, w.signing);
  }
  const auto rk = complete_rk_coloring(6, 3, 2);
  const auto back = parse_labeled_graph(to_fixture_text(rk));
  EXPECT_EQ(back.coloring, rk.coloring);
}

TEST(QualifyingEdges, MatchDefinition) {
  // Triangle signed +, +, -: the cycle sums to 1, so only edges of sign -1 qualify.
  const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(qualifying_edges(tri, Signing({1, 1, -1})), (std::vector<EdgeId>{2}));
  EXPECT_TRUE(qualifying_edges(path_graph(4), Signing::constant(3)).empty());
}

TEST(Subdivision, EvenSeed) {
  const auto seed = special_witness("g_small_even");
  const auto w = subdivision_extend(seed, *seed.designated_edge, 1);
  EXPECT_EQ(w.graph.order(), 6);
  EXPECT_EQ(w.graph.size(), 8u);
  EXPECT_EQ(structural_report(w.graph).min_degree, 2);
  expect_certified(w);
}

TEST(Subdivision, OddSeed) {
  const auto seed = special_witness("g_small_odd");
  const EdgeId e = *seed.designated_edge;
  const auto same = subdivision_extend(seed, e, 0);
  EXPECT_EQ(same.graph, seed.graph);
  EXPECT_EQ(same.signing, seed.signing);
  const auto w = subdivision_extend(seed, e, 2);
  EXPECT_EQ(w.graph.order(), 9);
  EXPECT_EQ(w.graph.size(), 11u);
  expect_certified(w);
  // The replacement path carries the sign of e.
  const Edge xy = seed.graph.edge(e);
  std::vector<Vertex> path{xy.u, 5, 6, 7, 8, xy.v};
  EXPECT_EQ(PathWitness{path}.signed_sum(w.graph, *w.signing), (*seed.signing)[e]);
}

TEST(Subdivision, Preconditions) {
  const auto seed = special_witness("g_small_even");
  const auto q = qualifying_edges(seed.graph, *seed.signing);
  for (EdgeId e = 0; e < seed.graph.size(); ++e) {
    if (std::find(q.begin(), q.end(), e) == q.end()) {
      EXPECT_THROW(subdivision_extend(seed, e, 1), PreconditionError);
    }
  }
  EXPECT_THROW(subdivision_extend(square_path_signing(6), 0, 1), PreconditionError);
  EXPECT_THROW(subdivision_extend(seed, *seed.designated_edge, -1), PreconditionError);
}

TEST(Union, Examples) {
  const auto theta = special_witness("theta4");
  const auto tt = union_signing(theta, theta, 2, 2);
  EXPECT_EQ(tt.graph.order(), 11);
  expect_certified(tt);
  const auto even = special_witness("g_small_even");
  const auto odd = special_witness("g_small_odd");
  const auto eo = union_signing(even, odd, 3, 0);
  expect_certified(eo);
  // Restriction to either side gives back the inputs.
  const auto& s = eo.signing->values();
  EXPECT_EQ(std::vector<int>(s.begin(), s.begin() + 6), even.signing->values());
  EXPECT_EQ(std::vector<int>(s.begin() + 6, s.end()), odd.signing->values());
  EXPECT_THROW(union_signing(even, square_path_signing(6), 0, 0), PreconditionError);
}

// A graph glued from two parts is canceling iff both parts are.
TEST(Union, CancelingIffBothParts) {
  const std::vector<Graph> parts{complete_graph(4), cycle_graph(5), theta_graph({1, 2, 2, 3}),
                                 complete_bipartite_graph(2, 3), Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})};
  std::vector<bool> alone;
  SearchOptions opt;
  opt.use_filter = false;
  for (const auto& p : parts) alone.push_back(find_k_canceling_signing(p, 1, opt).found);
  EXPECT_EQ(alone, (std::vector<bool>{true, false, true, false, false}));
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a; b < parts.size(); ++b) {
      const Graph g = union_at_vertex(parts[a], parts[b], 0, 0);
      EXPECT_EQ(find_k_canceling_signing(g, 1, opt).found, alone[a] && alone[b]) << a << " " << b;
    }
  }
}

TEST(BipartiteClique, Examples) {
  const auto w = bipartite_clique_signing(complete_bipartite_graph(3, 3), {0, 1, 2}, {3, 4, 5}, 1);
  EXPECT_EQ(w.graph.size(), 15u);
  EXPECT_EQ(canonical_code(w.graph), canonical_code(complete_graph(6)));
  expect_certified(w);
  expect_certified(bipartite_clique_signing(complete_bipartite_graph(4, 4), {0, 1, 2, 3}, {4, 5, 6, 7}, 2));
  try {
    bipartite_clique_signing(complete_bipartite_graph(2, 3), {0, 1}, {2, 3, 4}, 1);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("part U"), std::string::npos);
  }
  // C_6 as a bipartite graph has degree 2 < k + 1 = 3.
  try {
    bipartite_clique_signing(cycle_graph(6), {0, 2, 4}, {1, 3, 5}, 2);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("part"), std::string::npos);
  }
  try {
    bipartite_clique_signing(Graph(8, {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 6}, {3, 7}, {0, 6}}), {0, 1, 2, 3},
                             {4, 5, 6, 7}, 2);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("vertex 1"), std::string::npos);
  }
}

TEST(Blowup, Examples) {
  expect_certified(blowup_cycle_signing({2, 2, 2}, 1));
  expect_certified(blowup_cycle_signing({2, 2, 2, 2, 2}, 1));
  expect_certified(blowup_cycle_signing({4, 4, 4}, 2));
  expect_certified(blowup_cycle_signing({3, 2, 5}, 1));
  EXPECT_THROW(blowup_cycle_signing({3, 4, 4}, 2), PreconditionError);
  EXPECT_THROW(blowup_cycle_signing({2, 2, 2, 2}, 1), PreconditionError);
}

TEST(CompleteRk, ColorUsage) {
  for (auto [n, r, k] : std::vector<std::tuple<int, int, int>>{{6, 3, 2}, {7, 3, 2}, {12, 3, 3}, {9, 4, 2}}) {
    const auto w = complete_rk_coloring(n, r, k);
    const int m = 3 * (k - 1) * (r - 1);
    std::vector<int> used(r + 1, 0);
    for (int c : w.coloring->values()) ++used[c];
    for (int c = 1; c < r; ++c) EXPECT_EQ(used[c], 3 * (k - 1));
    EXPECT_EQ(used[r], n * (n - 1) / 2 - m);
  }
  expect_certified(complete_rk_coloring(6, 3, 2));
  expect_certified(complete_rk_coloring(7, 3, 2));
  EXPECT_THROW(complete_rk_coloring(5, 3, 2), PreconditionError);
}

}  // namespace
}  // namespace sgw
