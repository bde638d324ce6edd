#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgw/canceling.hpp"
#include "sgw/extremal.hpp"
#include "sgw/graph.hpp"
#include "sgw/labels.hpp"

namespace sgw {

enum class ClaimKind {
  zero_wiener,   // W_sigma(G) = 0
  k_canceling,   // signing, parameter k
  rk_canceling,  // coloring, parameters r and k
};

struct Claim {
  ClaimKind kind = ClaimKind::zero_wiener;
  int k = 1;
  int r = 2;
  // false: the labelling is expected to fail the property.
  bool expected = true;
  // When set, the property fails at exactly this pair of the undeleted graph.
  std::optional<std::pair<Vertex, Vertex>> exceptional_pair;
  std::string note;
};

struct SignedWitness {
  std::string name;
  Graph graph;
  std::optional<Signing> signing;
  std::optional<EdgeColoring> coloring;
  Claim claim;
  std::vector<PathWitness> stored_paths;
  // Edge meeting the subdivision hypothesis, when the witness carries one.
  std::optional<EdgeId> designated_edge;

  // The labelling as an r-coloring (signings map + -> 1, - -> 2).
  EdgeColoring labelling() const;
};

struct Certification {
  bool claim_holds = false;
  CancelingVerdict verdict;
  // Pairs of the undeleted graph with no canceling path; filled for claims
  // with an exceptional pair.
  std::vector<std::pair<Vertex, Vertex>> failing_pairs;
};

// Re-checks a witness against its claim with canceling-lab.
Certification certify(const SignedWitness& w, const CheckOptions& opt = {});

// Pairs u < v of G with no canceling path.
std::vector<std::pair<Vertex, Vertex>> noncanceling_pairs(const Graph& g, const EdgeColoring& c,
                                                         const EngineLimits& limits = {});

// P_n^2 with the n - 1 path edges positive and the rest negative.
SignedWitness square_path_signing(int n);

// K_n with the Hamiltonian cycle 0, 1, ..., n-1 positive and the rest negative.
SignedWitness complete_cyclic_signing(int n);

// T^2 with the tree edges positive. Stars get the cyclic signing of K_n and
// the path on six vertices gets the stored p6sq signing.
SignedWitness square_tree_signing(const Graph& t);

// C_n^2 (n >= 5) with the cycle edges positive; n = 7 uses the stored c7sq
// signing.
SignedWitness square_cycle_signing(int n);

// Stored searched witnesses: c7sq, p6sq, theta4, g_small_even, g_small_odd.
SignedWitness special_witness(const std::string& tag);
std::vector<std::string> special_tags();

// Re-runs the search behind a stored witness: the first signing in search
// order meeting its claim; g_small_even also needs a qualifying edge, and
// g_small_odd is square_path_signing(5) rather than a search result.
SignedWitness search_special_witness(const std::string& tag);

// Edges e lying on a cycle C with sigma(C) = -sigma(e), ascending.
std::vector<EdgeId> qualifying_edges(const Graph& g, const Signing& s);

// Replaces e = xy (x < y) by the path x w_1 ... w_{2i} y with alternating
// signs starting at sigma(e). The first path edge keeps e's index; the other
// 2i edges are appended; w_j is vertex n + j - 1.
SignedWitness subdivision_extend(const SignedWitness& w, EdgeId e, int i, const EngineLimits& limits = {});

// Glues two witnesses at a vertex (vertex numbering as union_at_vertex).
SignedWitness union_signing(const SignedWitness& w1, const SignedWitness& w2, Vertex v1, Vertex v2,
                            const EngineLimits& limits = {});

// gprime bipartite on (u_part, v_part) plus cliques on both parts; cross edges
// positive, intra-part edges negative.
SignedWitness bipartite_clique_signing(const Graph& gprime, const std::vector<Vertex>& u_part,
                                       const std::vector<Vertex>& v_part, int k);

// Blowup of C_{2t+1} with the given part sizes; each part splits into its
// first ceil(n_i/2) vertices and the rest, and an edge is positive iff it
// joins same-index halves of consecutive parts.
SignedWitness blowup_cycle_signing(const std::vector<int>& parts, int k);

// K_n whose first m = 3(k-1)(r-1) vertices carry a cycle cycling through
// colors 1..r-1 (closing edge r-1); every other edge gets color r.
SignedWitness complete_rk_coloring(int n, int r, int k);

// Builds a witness from a spec, which also becomes its name:
//   c7sq | p6sq | theta4 | g_small_even | g_small_odd
//   square-path:n  complete-cyclic:n  square-cycle:n  complete-rk:n,r,k
//   square-tree:<family spec>        e.g. square-tree:path:7
//   bipartite-clique:a,b,k           on K_{a,b} with parts {0..a-1}, {a..a+b-1}
//   blowup-cycle:k,n_1,...,n_t
//   subdivision:<tag>,i              at the tag's designated edge
SignedWitness named_witness(std::string_view spec);
std::vector<std::string> named_witness_forms();

// Fixture text: the labelled edge list preceded by "# name:" and "# claim:"
// comment lines.
std::string to_fixture_text(const SignedWitness& w);

}  // namespace sgw
