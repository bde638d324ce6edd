#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include "sgw/graph.hpp"
#include "sgw/labels.hpp"

namespace sgw {

// Instance-size guards. Exceeding one raises GuardError.
struct EngineLimits {
  int max_signed_order = 24;   // r = 2
  int max_colored_order = 16;  // r >= 3
};

// Exact search over the simple paths of one signed graph, as a depth-first
// walk over states (visited set, current vertex, running sum) with every
// explored state memoized. Sums lie in [-(n-1), n-1] and are kept as a bitset
// per (visited set, current vertex). Not thread-safe; use one per worker.
class SignedPathEngine {
 public:
  SignedPathEngine(const Graph& g, const Signing& s, const EngineLimits& limits = {});

  // Replaces the signing, keeping the graph.
  void set_signing(const Signing& s);

  struct Target {
    ExtendedCount value = ExtendedCount::infinite();
    PathWitness witness;  // attains value when finite
  };

  // Exact min |sigma(P)| from source to every vertex of `targets`, over simple
  // paths avoiding `blocked`. Result is indexed by vertex; entries outside
  // `targets` are left infinite.
  std::vector<Target> distances_from(Vertex source, VertexMask targets, VertexMask blocked = 0);

  // Subset of `targets` joined to source by a zero-sum path avoiding
  // `blocked`. Stops as soon as every target is settled. When `witnesses` is
  // given it receives a zero path for every returned target.
  VertexMask zero_targets_from(Vertex source, VertexMask targets, VertexMask blocked = 0,
                               std::vector<PathWitness>* witnesses = nullptr);

  const Graph& graph() const { return *graph_; }

 private:
  void run(Vertex source, VertexMask targets, VertexMask blocked, bool zero_only, bool keep_paths);
  void dfs(VertexMask visited, Vertex cur, int sum, int remaining);
  void record(Vertex t, int sum);

  struct Arc {
    Vertex to;
    int sign;
    EdgeId edge;
  };

  const Graph* graph_;
  int n_;
  std::vector<std::vector<Arc>> arcs_;

  // Per-query state.
  absl::flat_hash_map<std::uint64_t, std::uint64_t> seen_;
  VertexMask targets_ = 0, blocked_ = 0, pending_ = 0;
  bool zero_only_ = false, keep_paths_ = false, done_ = false;
  int bound_ = 0;
  std::vector<int> best_;
  std::vector<PathWitness> paths_;
  std::vector<Vertex> stack_;
};

// Canceling-path search for an r-coloring: the state carries the vector of
// color-count differences relative to color 1.
class ColoredPathEngine {
 public:
  ColoredPathEngine(const Graph& g, const EdgeColoring& c, const EngineLimits& limits = {});

  void set_coloring(const EdgeColoring& c);

  // Subset of `targets` joined to source by a canceling path avoiding `blocked`.
  VertexMask canceling_targets_from(Vertex source, VertexMask targets, VertexMask blocked = 0,
                                    std::vector<PathWitness>* witnesses = nullptr);

 private:
  static constexpr int kMaxColors = 11;
  static constexpr int kBits = 6;
  static constexpr int kOffset = 32;

  void dfs(VertexMask visited, Vertex cur, std::uint64_t code, int remaining);
  int moves_needed() const;

  struct Arc {
    Vertex to;
    int color;
  };

  const Graph* graph_;
  int n_;
  int r_;
  std::vector<std::vector<Arc>> arcs_;
  std::uint64_t zero_code_ = 0;
  std::uint64_t all_ones_ = 0;

  absl::flat_hash_set<std::pair<std::uint64_t, std::uint64_t>> seen_;
  VertexMask targets_ = 0, blocked_ = 0, pending_ = 0;
  bool keep_paths_ = false, done_ = false;
  int diff_[kMaxColors] = {};
  std::vector<PathWitness> paths_;
  std::vector<Vertex> stack_;
};

struct DistanceResult {
  ExtendedCount value;
  std::optional<PathWitness> witness;

  bool operator==(const DistanceResult&) const = default;
};

// d_sigma(u, v): min |sigma(P)| over simple uv-paths; 0 for u == v; Infinite
// when u and v lie in different components.
DistanceResult signed_distance(const Graph& g, const Signing& s, Vertex u, Vertex v,
                               const EngineLimits& limits = {});

// A uv-path using every color equally often, if any. For r = 2 this is the
// signed_distance == 0 query.
std::optional<PathWitness> find_canceling_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v,
                                               const EngineLimits& limits = {});
inline bool exists_canceling_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v,
                                  const EngineLimits& limits = {}) {
  return find_canceling_path(g, c, u, v, limits).has_value();
}

// Full matrix of signed distances (symmetric).
std::vector<std::vector<ExtendedCount>> signed_distance_matrix(const Graph& g, const Signing& s,
                                                               const EngineLimits& limits = {});

inline VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }
inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

}  // namespace sgw
