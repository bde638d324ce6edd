#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sgw/canceling.hpp"
#include "sgw/graph.hpp"
#include "sgw/labels.hpp"

namespace sgw {

struct SearchOptions {
  EngineLimits limits;
  // Largest number of free labelling positions searched (after symmetry).
  int max_free_edges = 22;
  // Apply necessary_conditions before searching.
  bool use_filter = true;
};

struct SearchResult {
  bool found = false;
  std::optional<Signing> signing;
  std::optional<EdgeColoring> coloring;
  // Labellings checked, up to and including the witness.
  std::uint64_t examined = 0;
  // Each examined labelling stands for this many (global negation, or color
  // permutations for r >= 3).
  std::uint64_t symmetry_factor = 1;
  bool rejected_by_filter = false;
  std::vector<std::string> filter_reasons;

  bool operator==(const SearchResult&) const = default;
};

// Exhaustive search for a k-canceling signing with edge 0 fixed positive.
// Signings are visited in binary counting order of edges 1..m-1 (bit set =
// negative). For n <= k every S of size below k is checked.
SearchResult find_k_canceling_signing(const Graph& g, int k, const SearchOptions& opt = {});

// Exhaustive search over r-colorings up to color renaming: colors appear in
// first-use order along the edge list (restricted growth strings).
SearchResult find_rk_canceling_coloring(const Graph& g, int r, int k, const SearchOptions& opt = {});

struct MinWienerResult {
  ExtendedCount value = ExtendedCount::infinite();
  std::optional<Signing> argmin;  // first minimizer in the visiting order
  std::uint64_t examined = 0;

  bool operator==(const MinWienerResult&) const = default;
};

// W_*(G) over signings with edge 0 positive, visited in reflected Gray-code
// order of edges 1..m-1. Trees use the unique-path formula.
MinWienerResult min_signed_wiener(const Graph& g, const SearchOptions& opt = {});

struct ThresholdRow {
  int n = 0;
  bool holds = false;
  std::uint64_t examined = 0;
  std::optional<Signing> signing;
  std::optional<EdgeColoring> coloring;

  bool operator==(const ThresholdRow&) const = default;
};

// Per-n existence of an (r,k)-canceling labelling of K_n; no filter, no
// monotonicity assumption.
std::vector<ThresholdRow> threshold_scan(int r, int k, int n_from, int n_to, const SearchOptions& opt = {});

// Smallest n in the table from which every later row holds, if the last row
// holds.
std::optional<int> stable_threshold(const std::vector<ThresholdRow>& rows);

struct ThresholdBounds {
  double exact_lower = 0;  // k + log_4 k
  int lower = 0;           // its ceiling
  int upper = 0;           // 2k + 4
};

// Requires k >= 5.
ThresholdBounds n2k_bounds(int k);

// Isomorphism-invariant code: adjacency upper triangle, row-major, minimized
// over relabelings that respect a degree-based vertex refinement. Requires
// n <= 11.
std::uint64_t canonical_code(const Graph& g);

// One representative per isomorphism class on n vertices (n <= 8), ordered by
// canonical code.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

struct TreeRecord {
  Graph tree;
  std::vector<int> degree_sequence;  // non-increasing
  bool double_star = false;
  std::uint64_t min_wiener = 0;  // W_*(T)
  std::uint64_t max_wiener = 0;  // max over signings
  Signing argmin;
};

// All non-isomorphic trees on n vertices (1 <= n <= 10), each once, with
// W_* and the maximum over signings.
std::vector<TreeRecord> enumerate_trees(int n);

struct SignedTreeInstance {
  Graph tree;
  Signing signing;
  std::uint64_t value = 0;

  bool operator==(const SignedTreeInstance&) const = default;
};

struct SandwichReport {
  int n = 0;
  std::size_t trees = 0;
  std::uint64_t lower_anchor = 0;  // alternating signing of P_n
  std::uint64_t upper_anchor = 0;  // classical W(P_n)
  std::uint64_t observed_min = 0;
  std::uint64_t observed_max = 0;
  bool lower_holds = true;  // the open half
  bool upper_holds = true;  // the half that follows from classical bounds
  std::optional<SignedTreeInstance> lower_counterexample;
  std::optional<SignedTreeInstance> upper_counterexample;

  bool holds() const { return lower_holds && upper_holds; }

  bool operator==(const SandwichReport&) const = default;
};

// Checks W_alpha(P_n) <= W_sigma(T) <= W(P_n) for every tree and signing.
SandwichReport verify_tree_sandwich(int n);

struct DoubleStarReport {
  int n = 0;
  std::size_t trees = 0;
  std::uint64_t path_min = 0;         // W_*(P_n)
  std::uint64_t double_star_max = 0;  // max of W_* over all double stars
  std::optional<Graph> best_double_star;
  std::uint64_t adjacent_max = 0;     // max over D(a,b) only
  int best_a = 0, best_b = 0;         // maximizing D(a,b), a <= b
  std::uint64_t star_value = 0;       // W_*(S_n)
  std::uint64_t tree_max = 0;         // max over all trees of W_*
  bool lower_holds = true;
  bool upper_holds = true;
  bool star_only_holds = true;
  std::optional<Graph> counterexample;       // violates the double-star sandwich
  std::optional<Graph> star_counterexample;  // exceeds W_*(S_n)

  bool holds() const { return lower_holds && upper_holds; }

  bool operator==(const DoubleStarReport&) const = default;
};

// D(a,b): centers 0 and 1, a leaves on 0, b leaves on 1.
Graph double_star(int a, int b);

DoubleStarReport verify_double_star(int n);

struct DyckRecord {
  std::string steps;  // 'U' and 'D'
  Signing signing;    // on path_graph(2n + 1): U -> +, D -> -
  std::uint64_t wiener = 0;

  bool operator==(const DyckRecord&) const = default;
};

// Every Dyck path of semilength n (1 <= n <= 8) in lexicographic order with
// U < D.
std::vector<DyckRecord> dyck_paths(int n);
std::map<std::uint64_t, std::uint64_t> dyck_distribution(int n);

// W_sigma of the signed path read from a U/D word; any word, not only Dyck.
std::uint64_t step_word_wiener(const std::string& steps);

}  // namespace sgw
