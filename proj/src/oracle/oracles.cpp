#include "sgw/testing/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

namespace sgw::oracle {
namespace {

void extend(const Graph& g, std::vector<Vertex>& path, std::vector<bool>& used,
            const std::function<void(const std::vector<Vertex>&)>& fn) {
  fn(path);
  for (Vertex w : g.neighbors(path.back())) {
    if (used[w]) continue;
    used[w] = true;
    path.push_back(w);
    extend(g, path, used, fn);
    path.pop_back();
    used[w] = false;
  }
}

// Label of the edge between consecutive path vertices, found by scanning the
// edge list rather than through the adjacency index.
EdgeId find_edge(const Graph& g, Vertex a, Vertex b) {
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& x = g.edge(e);
    if ((x.u == a && x.v == b) || (x.u == b && x.v == a)) return e;
  }
  std::abort();
}

}  // namespace

void for_each_simple_path(const Graph& g, Vertex from, const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> path{from};
  std::vector<bool> used(g.order(), false);
  used[from] = true;
  extend(g, path, used, fn);
}

std::optional<int> naive_signed_distance(const Graph& g, const Signing& s, Vertex u, Vertex v) {
  std::optional<int> best;
  for_each_simple_path(g, u, [&](const std::vector<Vertex>& p) {
    if (p.back() != v) return;
    int sum = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) sum += s[find_edge(g, p[i], p[i + 1])];
    if (!best || std::abs(sum) < *best) best = std::abs(sum);
  });
  return best;
}

std::vector<std::optional<int>> naive_distance_row(const Graph& g, const Signing& s, Vertex from) {
  const int n = g.order();
  std::vector<std::vector<std::pair<Vertex, int>>> out(n);
  for (std::size_t e = 0; e < g.size(); ++e) {
    out[g.edges()[e].u].push_back({g.edges()[e].v, s[e]});
    out[g.edges()[e].v].push_back({g.edges()[e].u, s[e]});
  }
  std::vector<std::optional<int>> best(n);
  std::vector<bool> used(n, false);
  std::function<void(Vertex, int)> walk = [&](Vertex cur, int sum) {
    if (!best[cur] || std::abs(sum) < *best[cur]) best[cur] = std::abs(sum);
    used[cur] = true;
    for (const auto& [next, sign] : out[cur]) {
      if (!used[next]) walk(next, sum + sign);
    }
    used[cur] = false;
  };
  walk(from, 0);
  return best;
}

bool naive_canceling_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  bool found = false;
  for_each_simple_path(g, u, [&](const std::vector<Vertex>& p) {
    if (found || p.back() != v) return;
    std::vector<int> counts(static_cast<std::size_t>(c.colors_count()) + 1, 0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) ++counts[c[find_edge(g, p[i], p[i + 1])]];
    found = std::all_of(counts.begin() + 1, counts.end(), [&](int x) { return x == counts[1]; });
  });
  return found;
}

std::optional<std::uint64_t> naive_wiener_signed(const Graph& g, const Signing& s) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto d = naive_signed_distance(g, s, u, v);
      if (!d) return std::nullopt;
      total += static_cast<std::uint64_t>(*d);
    }
  }
  return total;
}

bool naive_is_k_canceling(const Graph& g, const Signing& s, int k) {
  const int n = g.order();
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
    if (std::popcount(set) >= k) continue;
    std::vector<Vertex> keep;
    std::vector<int> index(n, -1);
    for (Vertex v = 0; v < n; ++v) {
      if (!((set >> v) & 1)) {
        index[v] = static_cast<int>(keep.size());
        keep.push_back(v);
      }
    }
    std::vector<Edge> edges;
    std::vector<int> signs;
    for (EdgeId e = 0; e < g.size(); ++e) {
      const Edge& x = g.edge(e);
      if (index[x.u] >= 0 && index[x.v] >= 0) {
        edges.push_back(Edge{index[x.u], index[x.v]});
        signs.push_back(s[e]);
      }
    }
    const Graph h(static_cast<int>(keep.size()), edges);
    const auto w = naive_wiener_signed(h, Signing(signs));
    if (!w || *w != 0) return false;
  }
  return true;
}

std::vector<bool> brute_canonical_form(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code.push_back(adj[perm[i]][perm[j]]);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && brute_canonical_form(a) == brute_canonical_form(b);
}

std::vector<Graph> all_labeled_trees(int n) {
  std::vector<Graph> out;
  if (n == 2) {
    out.push_back(Graph(2, {{0, 1}}));
    return out;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    for (int x : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.push_back(Edge::make(leaf, x));
      --degree[leaf];
      --degree[x];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) (a < 0 ? a : b) = v;
    }
    edges.push_back(Edge::make(a, b));
    out.push_back(Graph(n, edges));
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
    if (i == seq.size()) break;
    ++seq[i];
  }
  return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

Signing random_signing(std::size_t m, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> s(m);
  for (auto& x : s) x = coin(rng) ? 1 : -1;
  return Signing(s);
}

EdgeColoring random_coloring(std::size_t m, int r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, r);
  std::vector<int> c(m);
  for (auto& x : c) x = pick(rng);
  return EdgeColoring(r, c);
}

}  // namespace sgw::oracle
