#include "sgw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "sgw/errors.hpp"

namespace sgw {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n), inc_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n) {
      throw PreconditionError("edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                              ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (raw.u == raw.v) throw PreconditionError("self-loop at vertex " + std::to_string(raw.u));
    edges_.push_back(Edge::make(raw.u, raw.v));
  }
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> lists(n);
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    lists[edges_[i].u].push_back({edges_[i].v, i});
    lists[edges_[i].v].push_back({edges_[i].u, i});
  }
  for (int v = 0; v < n; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    for (std::size_t i = 0; i + 1 < l.size(); ++i) {
      if (l[i].first == l[i + 1].first) {
        throw PreconditionError("duplicate edge (" + std::to_string(std::min(v, l[i].first)) + "," +
                                std::to_string(std::max(v, l[i].first)) + ")");
      }
    }
    adj_[v].reserve(l.size());
    inc_[v].reserve(l.size());
    for (auto [w, e] : l) {
      adj_[v].push_back(w);
      inc_[v].push_back(e);
    }
  }
}

std::optional<EdgeId> Graph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
  const auto& l = adj_[a];
  auto it = std::lower_bound(l.begin(), l.end(), b);
  if (it == l.end() || *it != b) return std::nullopt;
  return inc_[a][static_cast<std::size_t>(it - l.begin())];
}

VertexMask Graph::neighbor_mask(Vertex v) const {
  VertexMask m = 0;
  for (Vertex w : adj_[v]) m |= VertexMask{1} << w;
  return m;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexMask VertexSet::mask() const {
  VertexMask m = 0;
  for (Vertex v : members_) m |= VertexMask{1} << v;
  return m;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  const int n = g.order();
  out.old_to_new.assign(n, std::nullopt);
  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto a = out.old_to_new[g.edge(e).u];
    const auto b = out.old_to_new[g.edge(e).v];
    if (!a || !b) continue;
    edges.push_back(Edge{*a, *b});
    out.edge_origin.push_back(e);
  }
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), std::move(edges));
  return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex s) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

Graph square(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  std::vector<Edge> extra;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) {
      for (Vertex x : g.neighbors(w)) {
        if (x > v && !g.adjacent(v, x)) extra.push_back(Edge{v, x});
      }
    }
  }
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.order(), std::move(edges));
}

Graph union_at_vertex(const Graph& g1, const Graph& g2, Vertex w1, Vertex w2) {
  if (w1 < 0 || w1 >= g1.order() || w2 < 0 || w2 >= g2.order()) {
    throw PreconditionError("union_at_vertex: gluing vertex out of range");
  }
  std::vector<Vertex> map2(g2.order());
  Vertex next = g1.order();
  for (Vertex v = 0; v < g2.order(); ++v) map2[v] = (v == w2) ? w1 : next++;
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back(Edge{map2[e.u], map2[e.v]});
  return Graph(next, std::move(edges));
}

StructuralReport structural_report(const Graph& g) {
  StructuralReport r;
  const int n = g.order();
  r.edge_count = g.size();
  r.min_degree = n == 0 ? 0 : g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    r.min_degree = std::min(r.min_degree, g.degree(v));
    if (g.degree(v) == 1) ++r.leaf_count;
  }
  std::vector<int> side(n, -1);
  int components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    ++components;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          r.bipartite = false;
        }
      }
    }
  }
  r.connected = components <= 1;
  r.has_odd_cycle = !r.bipartite;
  if (r.bipartite) {
    for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? r.part_u : r.part_v).push_back(v);
  }
  return r;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("is_k_connected: k must be positive");
  const int n = g.order();
  for (int size = 0; size < k; ++size) {
    if (size >= n) return false;  // G - S would be empty
    const bool ok = for_each_subset(n, size, [&](const std::vector<Vertex>& s) {
      return is_connected(delete_vertices(g, VertexSet(s)).graph);
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace sgw
