#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sgw {

using Vertex = int;
using EdgeId = std::size_t;

// Bitmask over vertex indices; engines that use it require n <= 64.
using VertexMask = std::uint64_t;

// Unordered pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool has(Vertex w) const { return w == u || w == v; }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Edge i is the i-th pair passed
// at construction; that index is what signings and colorings refer to.
// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Throws PreconditionError on self-loops, duplicate edges, or out-of-range
  // endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  // Neighbors in ascending order; incident_edges(v)[i] joins v and neighbors(v)[i].
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::span<const EdgeId> incident_edges(Vertex v) const { return inc_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
  std::optional<EdgeId> edge_index(Vertex a, Vertex b) const;

  // Neighborhood bitmask; requires order() <= 64.
  VertexMask neighbor_mask(Vertex v) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<EdgeId>> inc_;
};

// Sorted set of vertices of some host graph.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  VertexMask mask() const;

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

// Induced subgraph G - S together with the bookkeeping needed to restrict
// labels defined on G.
struct InducedSubgraph {
  Graph graph;
  std::vector<std::optional<Vertex>> old_to_new;
  std::vector<Vertex> new_to_old;
  // edge_origin[i] is the index in the host graph of surviving edge i.
  std::vector<EdgeId> edge_origin;
};

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s);

// G^2: same vertices, edges between distinct vertices at distance <= 2.
// Edge order: the edges of g first, then the new pairs lexicographically.
Graph square(const Graph& g);

// Disjoint union with w1 and w2 identified. Vertices of g1 keep their indices;
// the remaining vertices of g2 follow in their original order. Edges of g1
// come first, then those of g2.
Graph union_at_vertex(const Graph& g1, const Graph& g2, Vertex w1, Vertex w2);

struct StructuralReport {
  bool connected = true;
  bool bipartite = true;
  // Two-coloring of every component; the lowest vertex of each component
  // lands in the first part. Empty when not bipartite.
  std::vector<Vertex> part_u;
  std::vector<Vertex> part_v;
  bool has_odd_cycle = false;
  int min_degree = 0;
  std::size_t edge_count = 0;
  int leaf_count = 0;

  bool operator==(const StructuralReport&) const = default;
};

StructuralReport structural_report(const Graph& g);

// True iff G - S is connected and nonempty for every S with |S| < k.
bool is_k_connected(const Graph& g, int k);

// BFS distances from s; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex s);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Calls fn(const std::vector<Vertex>&) for every size-`size` subset of
// {0..n-1} in lexicographic order. Stops early when fn returns false.
template <class Fn>
bool for_each_subset(int n, int size, Fn&& fn) {
  if (size < 0 || size > n) return true;
  std::vector<Vertex> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<Vertex>&>(pick))) return false;
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace sgw
