#include "sgw/wiener.hpp"

#include <cstdlib>
#include <optional>
#include <queue>

#include "sgw/errors.hpp"
#include "sgw/parallel.hpp"

namespace sgw {

ExtendedCount wiener_classical(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto d = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (d[v] < 0) return ExtendedCount::infinite();
      total += static_cast<std::uint64_t>(d[v]);
    }
  }
  return ExtendedCount(total);
}

ExtendedCount wiener_signed(const Graph& g, const Signing& s, const EngineLimits& limits) {
  s.check_for(g);
  const int n = g.order();
  if (!is_connected(g)) return ExtendedCount::infinite();
  if (n <= 1) return ExtendedCount(0);
  // Per-source partial sums, reduced in source order.
  std::vector<std::uint64_t> partial(static_cast<std::size_t>(n), 0);
  std::vector<std::optional<SignedPathEngine>> engines(static_cast<std::size_t>(thread_count()));
  parallel_for(static_cast<std::size_t>(n - 1), [&](std::size_t i, int worker) {
    auto& engine = engines[worker];
    if (!engine) engine.emplace(g, s, limits);
    const Vertex u = static_cast<Vertex>(i);
    const VertexMask later = full_mask(n) & ~full_mask(u + 1);
    const auto res = engine->distances_from(u, later);
    std::uint64_t sum = 0;
    for (Vertex v = u + 1; v < n; ++v) sum += res[v].value.value();
    partial[i] = sum;
  });
  std::uint64_t total = 0;
  for (auto x : partial) total += x;
  return ExtendedCount(total);
}

ExtendedCount bipartite_lower_bound(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::uint64_t total = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    std::uint64_t count[2] = {0, 0};
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      ++count[side[v]];
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return ExtendedCount(0);
        }
      }
    }
    total += count[0] * count[1];
  }
  return ExtendedCount(total);
}

std::uint64_t leaf_lower_bound(const Graph& g) {
  std::uint64_t leaves = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) ++leaves;
  return leaves;
}

std::uint64_t tree_signed_wiener(const Graph& t, const Signing& s) {
  if (!is_tree(t)) throw PreconditionError("tree_signed_wiener needs a tree");
  s.check_for(t);
  const int n = t.order();
  std::uint64_t total = 0;
  std::vector<int> sum(n);
  std::vector<Vertex> parent(n), stack;
  for (Vertex root = 0; root < n; ++root) {
    sum[root] = 0;
    parent[root] = -1;
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (v > root) total += static_cast<std::uint64_t>(std::abs(sum[v]));
      const auto nb = t.neighbors(v);
      const auto inc = t.incident_edges(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] == parent[v]) continue;
        parent[nb[i]] = v;
        sum[nb[i]] = sum[v] + s[inc[i]];
        stack.push_back(nb[i]);
      }
    }
  }
  return total;
}

}  // namespace sgw
