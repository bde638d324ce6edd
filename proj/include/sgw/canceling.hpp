#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sgw/graph.hpp"
#include "sgw/labels.hpp"
#include "sgw/path_engine.hpp"

namespace sgw {

// A deleted set and a pair of surviving vertices (u < v) with no canceling
// path in G - S.
struct FailureCertificate {
  VertexSet deleted;
  Vertex u = 0;
  Vertex v = 0;

  bool operator==(const FailureCertificate&) const = default;
};

struct PairWitness {
  VertexSet deleted;
  Vertex u = 0;
  Vertex v = 0;
  PathWitness path;  // original vertex indices

  bool operator==(const PairWitness&) const = default;
};

struct CancelingVerdict {
  bool holds = false;
  std::optional<FailureCertificate> failure;  // set iff !holds
  std::vector<PairWitness> witnesses;          // filled on request when holds

  bool operator==(const CancelingVerdict&) const = default;
};

enum class SubsetSizes {
  exactly_k_minus_1,  // valid when n >= k + 1
  all_below_k,        // the definition read literally
};

struct CheckOptions {
  EngineLimits limits;
  bool collect_witnesses = false;
  // Witness tables beyond this many entries are refused with GuardError.
  std::size_t max_witnesses = 200000;
};

// Checks W_sigma(G - S) = 0 for every S of size exactly k - 1. Requires
// n >= k + 1, under which this is equivalent to every size below k. The
// failing certificate, if any, is the first in lexicographic (S, u, v) order.
CancelingVerdict is_k_canceling_signing(const Graph& g, const Signing& s, int k, const CheckOptions& opt = {});

// The same check over every S of size below k; also accepts n <= k.
CancelingVerdict is_k_canceling_signing_literal(const Graph& g, const Signing& s, int k,
                                                const CheckOptions& opt = {});

// Every pair of every G - S with |S| < k is joined by a canceling path.
CancelingVerdict is_rk_canceling_coloring(const Graph& g, const EdgeColoring& c, int k,
                                          SubsetSizes sizes = SubsetSizes::all_below_k,
                                          const CheckOptions& opt = {});

// Independently re-decides a certificate on the explicit subgraph G - S.
bool certificate_fails(const Graph& g, const EdgeColoring& c, const FailureCertificate& cert,
                       const EngineLimits& limits = {});

// Repeated yes/no checks of many labellings of one graph, as run by searches.
// Remembers the last failing (S, source) and tries it first.
class CancelingChecker {
 public:
  CancelingChecker(const Graph& g, int r, int k, SubsetSizes sizes, const EngineLimits& limits = {});
  ~CancelingChecker();
  CancelingChecker(CancelingChecker&&) noexcept;

  bool holds(const Signing& s);
  bool holds(const EdgeColoring& c);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Conditions every k-canceling graph on n >= k + 1 vertices satisfies.
struct NecessaryReport {
  int k = 1;
  bool k_connected = false;
  bool odd_cycle = false;
  bool min_degree_ok = false;
  bool edge_count_ok = false;
  int min_degree = 0;
  int required_min_degree = 0;
  std::size_t edge_count = 0;
  std::size_t required_edges = 0;

  bool pass() const { return k_connected && odd_cycle && min_degree_ok && edge_count_ok; }
  // Human-readable reasons for every failed condition, e.g. "edge count 11 < 13".
  std::vector<std::string> failures() const;

  bool operator==(const NecessaryReport&) const = default;
};

NecessaryReport necessary_conditions(const Graph& g, int k);

struct ThetaDecomposition {
  int t = 0;
  Vertex x = 0;
  Vertex y = 0;
  // Each path runs from x to y; ordered by the neighbor of x it starts with.
  std::vector<std::vector<Vertex>> paths;

  std::vector<int> lengths() const;
};

// Recognizes a union of t >= 2 internally disjoint xy-paths. A cycle is
// reported with x, y its two lowest vertices.
std::optional<ThetaDecomposition> theta_recognize(const Graph& g);

// false when g is a theta graph with t <= 3 (never canceling); no verdict
// otherwise.
std::optional<bool> theta_verdict(const Graph& g);

struct SoltesReport {
  bool holds = false;
  ExtendedCount whole;
  std::vector<ExtendedCount> deleted;  // index v: value for G - v

  bool operator==(const SoltesReport&) const = default;
};

// W(G) = W(G - v) for every v; Infinite equals Infinite.
SoltesReport soltes_check_classical(const Graph& g);
SoltesReport soltes_check_signed(const Graph& g, const Signing& s, const EngineLimits& limits = {});

}  // namespace sgw
