#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "sgw/constructions.hpp"
#include "sgw/errors.hpp"
#include "sgw/extremal.hpp"
#include "sgw/families.hpp"
#include "sgw/testing/oracles.hpp"
#include "sgw/wiener.hpp"

namespace sgw {
namespace {

Signing signing_from_bits(std::size_t m, std::uint64_t bits) {
  std::vector<int> s(m);
  for (std::size_t i = 0; i < m; ++i) s[i] = (bits >> i) & 1 ? -1 : 1;
  return Signing(s);
}

// Exhaustive over every signing, no symmetry, naive deletion check.
bool naive_exists(const Graph& g, int k) {
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.size()); ++b) {
    if (oracle::naive_is_k_canceling(g, signing_from_bits(g.size(), b), k)) return true;
  }
  return false;
}

Graph relabeled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::make(p[e.u], p[e.v]));
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(g.order(), edges);
}

TEST(Search, Examples) {
  const auto k4 = find_k_canceling_signing(complete_graph(4), 1);
  EXPECT_TRUE(k4.found);
  EXPECT_EQ(k4.symmetry_factor, 2u);
  EXPECT_TRUE(is_k_canceling_signing(complete_graph(4), *k4.signing, 1).holds);

  const Graph k4e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  SearchOptions unfiltered;
  unfiltered.use_filter = false;
  const auto miss = find_k_canceling_signing(k4e, 1, unfiltered);
  EXPECT_FALSE(miss.found);
  EXPECT_EQ(miss.examined, 16u);

  const auto c11 = find_k_canceling_signing(cycle_graph(11), 1);
  EXPECT_FALSE(c11.found);
  EXPECT_TRUE(c11.rejected_by_filter);
  EXPECT_EQ(c11.examined, 0u);
  EXPECT_NE(std::find(c11.filter_reasons.begin(), c11.filter_reasons.end(), "edge count 11 < 13"),
            c11.filter_reasons.end());

  SearchOptions tight;
  tight.max_free_edges = 5;
  EXPECT_THROW(find_k_canceling_signing(complete_graph(5), 1, tight), GuardError);
}

TEST(Search, SoundAgainstNaiveEnumeration) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      SearchOptions opt;
      opt.use_filter = false;
      const auto res = find_k_canceling_signing(g, 1, opt);
      if (res.found) {
        EXPECT_TRUE(oracle::naive_is_k_canceling(g, *res.signing, 1));
      } else {
        EXPECT_FALSE(naive_exists(g, 1)) << n;
      }
      // The filter never rejects a graph the search proves canceling.
      if (res.found) {
        EXPECT_TRUE(necessary_conditions(g, 1).pass());
      }
    }
  }
}

TEST(Search, ColoredSoundAgainstNaive) {
  for (int n = 3; n <= 4; ++n) {
    const Graph g = complete_graph(n);
    SearchOptions opt;
    opt.use_filter = false;
    const auto res = find_rk_canceling_coloring(g, 3, 1, opt);
    bool any = false;
    std::vector<int> c(g.size(), 1);
    // Every 3-coloring by odometer.
    while (true) {
      if (is_rk_canceling_coloring(g, EdgeColoring(3, c), 1).holds) any = true;
      std::size_t i = 0;
      while (i < c.size() && c[i] == 3) c[i++] = 1;
      if (i == c.size()) break;
      ++c[i];
    }
    EXPECT_EQ(res.found, any) << n;
    EXPECT_EQ(res.symmetry_factor, 6u);
    if (res.found) {
      EXPECT_TRUE(is_rk_canceling_coloring(g, *res.coloring, 1).holds);
    }
  }
}

TEST(MinWiener, Examples) {
  EXPECT_EQ(min_signed_wiener(path_graph(2)).value, ExtendedCount(1));
  EXPECT_EQ(min_signed_wiener(path_graph(3)).value, ExtendedCount(2));
  // Two of the three edges share a sign, so one leaf pair sits at distance 2.
  EXPECT_EQ(min_signed_wiener(star_graph(4)).value, ExtendedCount(5));
  EXPECT_EQ(min_signed_wiener(complete_graph(4)).value, ExtendedCount(0));
  EXPECT_TRUE(min_signed_wiener(Graph(3, {{0, 1}})).value.is_infinite());
  EXPECT_EQ(min_signed_wiener(Graph(1)).value, ExtendedCount(0));
}

TEST(MinWiener, MatchesNaiveMinimum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 3, 0.55, rng);
    if (g.size() > 11) continue;
    std::optional<std::uint64_t> best;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << g.size()); ++b) {
      const auto w = oracle::naive_wiener_signed(g, signing_from_bits(g.size(), b));
      if (w && (!best || *w < *best)) best = w;
    }
    const auto res = min_signed_wiener(g);
    if (best) {
      EXPECT_EQ(res.value, ExtendedCount(*best));
      EXPECT_EQ(wiener_signed(g, *res.argmin), res.value);
      EXPECT_GE(res.value, bipartite_lower_bound(g));
      EXPECT_GE(res.value, ExtendedCount(leaf_lower_bound(g)));
    } else {
      EXPECT_TRUE(res.value.is_infinite());
    }
  }
}

TEST(Threshold, SignedK1K2K3) {
  const auto k1 = threshold_scan(2, 1, 2, 6);
  EXPECT_EQ(stable_threshold(k1), 4);
  EXPECT_FALSE(k1[1].holds);  // n = 3
  const auto k2 = threshold_scan(2, 2, 2, 7);
  EXPECT_EQ(stable_threshold(k2), 5);
  EXPECT_FALSE(k2[2].holds);  // n = 4
  const auto k3 = threshold_scan(2, 3, 3, 7);
  EXPECT_EQ(stable_threshold(k3), 7);
  EXPECT_FALSE(k3[2].holds);  // n = 5
  EXPECT_FALSE(k3[3].holds);  // n = 6
  EXPECT_EQ(k3[3].examined, 1u << 14);
  for (const auto& row : k3) {
    if (row.holds) {
      EXPECT_TRUE(is_k_canceling_signing(complete_graph(row.n), *row.signing, 3).holds);
    }
  }
  EXPECT_THROW(threshold_scan(1, 1, 2, 3), PreconditionError);
}

TEST(Threshold, Bounds) {
  const auto b5 = n2k_bounds(5);
  EXPECT_EQ(b5.lower, 7);
  EXPECT_EQ(b5.upper, 14);
  EXPECT_NEAR(b5.exact_lower, 5 + std::log(5.0) / std::log(4.0), 1e-12);
  const auto b16 = n2k_bounds(16);
  EXPECT_EQ(b16.lower, 18);
  EXPECT_EQ(b16.upper, 36);
  EXPECT_THROW(n2k_bounds(4), PreconditionError);
}

TEST(Enumerate, GraphCounts) {
  const std::vector<std::size_t> all{1, 1, 2, 4, 11, 34, 156, 1044};
  const std::vector<std::size_t> connected{0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(enumerate_graphs(n, false).size(), all[n]) << n;
    EXPECT_EQ(enumerate_graphs(n, true).size(), connected[n]) << n;
  }
}

TEST(Enumerate, GraphsAgainstBruteForceClasses) {
  for (int n = 1; n <= 5; ++n) {
    // Every labeled graph, classified by the n!-permutation canonical form.
    std::set<std::vector<bool>> classes;
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    for (std::uint32_t set = 0; set < (1u << pairs); ++set) {
      std::vector<Edge> edges;
      for (int i = 0; i < pairs; ++i)
        if ((set >> i) & 1) edges.push_back(slots[i]);
      classes.insert(oracle::brute_canonical_form(Graph(n, edges)));
    }
    const auto reps = enumerate_graphs(n, false);
    ASSERT_EQ(reps.size(), classes.size());
    std::set<std::vector<bool>> seen;
    for (const auto& g : reps) seen.insert(oracle::brute_canonical_form(g));
    EXPECT_EQ(seen, classes);
  }
}

TEST(Enumerate, CanonicalCodeIsInvariant) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(3 + trial % 6, 0.5, rng);
    const Graph h = relabeled(g, rng);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    const Graph other = oracle::random_graph(g.order(), 0.5, rng);
    EXPECT_EQ(canonical_code(g) == canonical_code(other), oracle::brute_isomorphic(g, other));
  }
}

TEST(Enumerate, TreeCounts) {
  const std::vector<std::size_t> counts{0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(enumerate_trees(n).size(), counts[n]) << n;
  EXPECT_THROW(enumerate_trees(0), PreconditionError);
  EXPECT_THROW(enumerate_trees(11), PreconditionError);
}

TEST(Enumerate, TreesAgainstLabeledTrees) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Graph> classes;
    for (const Graph& t : oracle::all_labeled_trees(n)) {
      if (std::none_of(classes.begin(), classes.end(), [&](const Graph& c) { return oracle::brute_isomorphic(c, t); })) {
        classes.push_back(t);
      }
    }
    const auto recs = enumerate_trees(n);
    ASSERT_EQ(recs.size(), classes.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
      EXPECT_TRUE(is_tree(recs[i].tree));
      for (std::size_t j = i + 1; j < recs.size(); ++j) EXPECT_FALSE(oracle::brute_isomorphic(recs[i].tree, recs[j].tree));
    }
  }
}

TEST(Enumerate, TreeRecords) {
  for (int n = 2; n <= 9; ++n) {
    for (const auto& rec : enumerate_trees(n)) {
      // Double stars have diameter at most 4, and every tree of diameter at
      // most 3 is one.
      int diameter = 0;
      for (Vertex v = 0; v < n; ++v) {
        const auto d = bfs_distances(rec.tree, v);
        diameter = std::max(diameter, *std::max_element(d.begin(), d.end()));
      }
      if (diameter <= 3) {
        EXPECT_TRUE(rec.double_star);
      }
      if (diameter > 4) {
        EXPECT_FALSE(rec.double_star);
      }
      EXPECT_EQ(tree_signed_wiener(rec.tree, rec.argmin), rec.min_wiener);
      EXPECT_EQ(rec.max_wiener, wiener_classical(rec.tree).value());
      // The leaf bound pairs each leaf with its neighbor; K_2 is the one tree
      // where the two pairs coincide.
      if (n > 2) {
        EXPECT_GE(rec.min_wiener, leaf_lower_bound(rec.tree));
      }
      EXPECT_GE(ExtendedCount(rec.min_wiener), bipartite_lower_bound(rec.tree));
    }
  }
}

TEST(Conjectures, Sandwich) {
  const auto r5 = verify_tree_sandwich(5);
  EXPECT_EQ(r5.lower_anchor, 6u);
  EXPECT_EQ(r5.upper_anchor, 20u);
  for (int n = 1; n <= 9; ++n) {
    const auto r = verify_tree_sandwich(n);
    EXPECT_TRUE(r.holds()) << n;
    EXPECT_EQ(r.lower_anchor, static_cast<std::uint64_t>(n * n / 4));
    EXPECT_EQ(r.upper_anchor, static_cast<std::uint64_t>(n * n * n - n) / 6);
    EXPECT_EQ(r.observed_min, r.lower_anchor);
    EXPECT_EQ(r.observed_max, r.upper_anchor);
  }
}

TEST(Conjectures, DoubleStar) {
  const auto r4 = verify_double_star(4);
  EXPECT_EQ(r4.trees, 2u);
  EXPECT_TRUE(r4.holds());
  bool star_refuted = false;
  for (int n = 2; n <= 9; ++n) {
    const auto r = verify_double_star(n);
    EXPECT_TRUE(r.holds()) << n;
    EXPECT_EQ(r.tree_max, r.double_star_max);
    EXPECT_LE(r.adjacent_max, r.double_star_max);
    ASSERT_TRUE(r.best_double_star);
    EXPECT_EQ(min_signed_wiener(*r.best_double_star).value, ExtendedCount(r.double_star_max));
    if (!r.star_only_holds) {
      star_refuted = true;
      ASSERT_TRUE(r.star_counterexample);
    }
  }
  EXPECT_TRUE(star_refuted);
  EXPECT_EQ(double_star(2, 3).size(), 6u);
}

TEST(Dyck, Distribution) {
  EXPECT_EQ(dyck_distribution(1), (std::map<std::uint64_t, std::uint64_t>{{2, 1}}));
  const std::vector<std::size_t> catalan{0, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) {
    const auto paths = dyck_paths(n);
    EXPECT_EQ(paths.size(), catalan[n]);
    std::uint64_t total = 0;
    for (const auto& [w, count] : dyck_distribution(n)) total += count;
    EXPECT_EQ(total, catalan[n]);
    const std::uint64_t parity = wiener_classical(path_graph(2 * n + 1)).value() % 2;
    for (const auto& r : paths) {
      EXPECT_EQ(std::accumulate(r.signing.values().begin(), r.signing.values().end(), 0), 0);
      EXPECT_EQ(r.wiener % 2, parity);
      EXPECT_EQ(r.wiener, step_word_wiener(r.steps));
    }
  }
  EXPECT_THROW(dyck_paths(9), PreconditionError);
}

TEST(Dyck, EngineAgreesOnSmallPaths) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& r : dyck_paths(n)) {
      EXPECT_EQ(wiener_signed(path_graph(2 * n + 1), r.signing), ExtendedCount(r.wiener));
    }
  }
  // The drawn example of semilength 4.
  const auto paths = dyck_paths(4);
  EXPECT_NE(std::find_if(paths.begin(), paths.end(), [](const DyckRecord& r) { return r.steps == "UDUUDUDD"; }),
            paths.end());
}

}  // namespace
}  // namespace sgw
