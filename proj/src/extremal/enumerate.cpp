#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "sgw/errors.hpp"
#include "sgw/extremal.hpp"
#include "sgw/families.hpp"
#include "sgw/parallel.hpp"
#include "sgw/wiener.hpp"

namespace sgw {
namespace {

// Colour refinement starting from degrees; returns a stable, isomorphism
// invariant rank per vertex.
std::vector<int> refined_ranks(const Graph& g) {
  const int n = g.order();
  std::vector<int> rank(n);
  for (Vertex v = 0; v < n; ++v) rank[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = rank[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(rank[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (Vertex v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    const auto classes = [](const std::vector<int>& r) { return std::set<int>(r.begin(), r.end()).size(); };
    const bool stable = classes(next) == classes(rank);
    rank = std::move(next);
    if (stable) break;
  }
  return rank;
}

std::uint64_t code_for(const Graph& g, const std::vector<Vertex>& order) {
  // order[i] is the vertex placed at position i.
  const int n = g.order();
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
  }
  return code;
}

// Minimum code over orders that list cells by rank and permute within cells.
std::pair<std::uint64_t, std::vector<Vertex>> canonical(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw GuardError("canonical form supports at most 11 vertices");
  const auto rank = refined_ranks(g);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return std::pair(rank[a], a) < std::pair(rank[b], b); });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && rank[order[j]] == rank[order[i]]) ++j;
    cells.push_back({i, j});
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<Vertex> best_order = order;
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (c == cells.size()) {
      const std::uint64_t code = code_for(g, order);
      if (code < best) {
        best = code;
        best_order = order;
      }
      return;
    }
    auto first = order.begin() + cells[c].first;
    auto last = order.begin() + cells[c].second;
    std::sort(first, last);
    do {
      walk(c + 1);
    } while (std::next_permutation(first, last));
  };
  walk(0);
  return {best, best_order};
}

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge::make(pos[e.u], pos[e.v]));
  std::sort(edges.begin(), edges.end());
  return Graph(g.order(), std::move(edges));
}

Graph add_vertex(const Graph& g, VertexMask neighbors) {
  auto edges = g.edges();
  const Vertex v = g.order();
  for (VertexMask m = neighbors; m; m &= m - 1) edges.push_back({std::countr_zero(m), v});
  return Graph(v + 1, std::move(edges));
}

// Rooted tree encoding; children sorted so the string is label independent.
std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::vector<Vertex> tree_centers(const Graph& t) {
  const int n = t.order();
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string tree_code(const Graph& t) {
  std::string best;
  for (Vertex c : tree_centers(t)) {
    auto code = rooted_code(t, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

bool is_double_star(const Graph& t) {
  const int n = t.order();
  if (t.size() == 0) return true;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x; y < n; ++y) {
      const bool covers = std::all_of(t.edges().begin(), t.edges().end(),
                                      [&](const Edge& e) { return e.has(x) || e.has(y); });
      if (covers) return true;
    }
  }
  return false;
}

Signing tree_signing(std::size_t m, std::uint64_t bits) {
  std::vector<int> s(m, 1);
  for (std::size_t j = 0; j < m; ++j) {
    if ((bits >> j) & 1) s[j] = -1;
  }
  return Signing(std::move(s));
}

void check_tree_order(int n) {
  if (n < 1 || n > 10) throw PreconditionError("tree scans support 1 <= n <= 10");
}

Signing alternating(int n) {
  std::vector<int> s(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i % 2 == 0 ? 1 : -1;
  return Signing(std::move(s));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonical(g).first; }

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 0 || n > 8) throw PreconditionError("graph enumeration supports 0 <= n <= 8");
  std::vector<std::pair<std::uint64_t, Graph>> level{{0, Graph(0)}};
  for (int order = 1; order <= n; ++order) {
    std::vector<std::pair<std::uint64_t, Graph>> next;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& [code, g] : level) {
      for (VertexMask nb = 0; nb < (VertexMask{1} << (order - 1)); ++nb) {
        const Graph h = add_vertex(g, nb);
        auto [c, ord] = canonical(h);
        if (seen.insert(c).second) next.emplace_back(c, relabel(h, ord));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : level) {
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<TreeRecord> enumerate_trees(int n) {
  check_tree_order(n);
  std::vector<std::pair<std::string, Graph>> level{{"()", Graph(1)}};
  for (int order = 2; order <= n; ++order) {
    std::vector<std::pair<std::string, Graph>> next;
    std::set<std::string> seen;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < t.order(); ++v) {
        const Graph h = add_vertex(t, bit(v));
        auto c = tree_code(h);
        if (seen.insert(c).second) next.emplace_back(std::move(c), h);
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level = std::move(next);
  }
  std::vector<TreeRecord> out(level.size());
  parallel_for(level.size(), [&](std::size_t i, int) {
    TreeRecord& r = out[i];
    r.tree = level[i].second;
    for (Vertex v = 0; v < n; ++v) r.degree_sequence.push_back(r.tree.degree(v));
    std::sort(r.degree_sequence.rbegin(), r.degree_sequence.rend());
    r.double_star = is_double_star(r.tree);
    const std::size_t m = r.tree.size();
    // Edge 0 fixed positive; negation leaves W unchanged.
    const std::uint64_t count = m > 0 ? std::uint64_t{1} << (m - 1) : 1;
    r.min_wiener = std::numeric_limits<std::uint64_t>::max();
    for (std::uint64_t b = 0; b < count; ++b) {
      const Signing s = tree_signing(m, b << 1);
      const std::uint64_t w = tree_signed_wiener(r.tree, s);
      if (w < r.min_wiener) {
        r.min_wiener = w;
        r.argmin = s;
      }
      r.max_wiener = std::max(r.max_wiener, w);
    }
  });
  return out;
}

SandwichReport verify_tree_sandwich(int n) {
  check_tree_order(n);
  SandwichReport rep;
  rep.n = n;
  const Graph p = path_graph(n);
  rep.lower_anchor = tree_signed_wiener(p, alternating(n));
  rep.upper_anchor = wiener_classical(p).value();
  const auto trees = enumerate_trees(n);
  rep.trees = trees.size();
  rep.observed_min = std::numeric_limits<std::uint64_t>::max();
  for (const auto& rec : trees) {
    const std::size_t m = rec.tree.size();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
      const Signing s = tree_signing(m, b);
      const std::uint64_t w = tree_signed_wiener(rec.tree, s);
      rep.observed_min = std::min(rep.observed_min, w);
      rep.observed_max = std::max(rep.observed_max, w);
      if (w < rep.lower_anchor && rep.lower_holds) {
        rep.lower_holds = false;
        rep.lower_counterexample = SignedTreeInstance{rec.tree, s, w};
      }
      if (w > rep.upper_anchor && rep.upper_holds) {
        rep.upper_holds = false;
        rep.upper_counterexample = SignedTreeInstance{rec.tree, s, w};
      }
    }
  }
  return rep;
}

Graph double_star(int a, int b) {
  if (a < 0 || b < 0) throw PreconditionError("leaf counts must be non-negative");
  std::vector<Edge> edges{{0, 1}};
  Vertex next = 2;
  for (int i = 0; i < a; ++i) edges.push_back({0, next++});
  for (int i = 0; i < b; ++i) edges.push_back({1, next++});
  return Graph(next, std::move(edges));
}

DoubleStarReport verify_double_star(int n) {
  check_tree_order(n);
  if (n < 2) throw PreconditionError("double stars need at least 2 vertices");
  DoubleStarReport rep;
  rep.n = n;
  const auto trees = enumerate_trees(n);
  rep.trees = trees.size();
  auto w_star = [](const Graph& t) { return min_signed_wiener(t).value.value(); };
  rep.path_min = w_star(path_graph(n));
  rep.star_value = w_star(star_graph(n));
  for (int a = 0; a <= (n - 2) / 2; ++a) {
    const std::uint64_t w = w_star(double_star(a, n - 2 - a));
    if (w > rep.adjacent_max || a == 0) {
      rep.adjacent_max = w;
      rep.best_a = a;
      rep.best_b = n - 2 - a;
    }
  }
  // Centers need not be adjacent, so the maximum runs over every flagged tree.
  for (const auto& rec : trees) {
    if (rec.double_star && (!rep.best_double_star || rec.min_wiener > rep.double_star_max)) {
      rep.double_star_max = rec.min_wiener;
      rep.best_double_star = rec.tree;
    }
  }
  for (const auto& rec : trees) {
    const std::uint64_t w = rec.min_wiener;
    rep.tree_max = std::max(rep.tree_max, w);
    const bool lower = w >= rep.path_min;
    const bool upper = w <= rep.double_star_max;
    if (!lower) rep.lower_holds = false;
    if (!upper) rep.upper_holds = false;
    if ((!lower || !upper) && !rep.counterexample) rep.counterexample = rec.tree;
    if (w > rep.star_value && rep.star_only_holds) {
      rep.star_only_holds = false;
      rep.star_counterexample = rec.tree;
    }
  }
  return rep;
}

std::uint64_t step_word_wiener(const std::string& steps) {
  std::vector<long> h{0};
  for (char c : steps) {
    if (c != 'U' && c != 'D') throw PreconditionError(std::string("bad step '") + c + "'");
    h.push_back(h.back() + (c == 'U' ? 1 : -1));
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) total += static_cast<std::uint64_t>(std::labs(h[j] - h[i]));
  }
  return total;
}

std::vector<DyckRecord> dyck_paths(int n) {
  if (n < 1 || n > 8) throw PreconditionError("Dyck scans support 1 <= n <= 8");
  std::vector<DyckRecord> out;
  std::string word;
  std::function<void(int, int)> grow = [&](int ups, int height) {
    if (static_cast<int>(word.size()) == 2 * n) {
      std::vector<int> s;
      for (char c : word) s.push_back(c == 'U' ? 1 : -1);
      DyckRecord r{word, Signing(std::move(s)), 0};
      out.push_back(std::move(r));
      return;
    }
    if (ups < n) {
      word.push_back('U');
      grow(ups + 1, height + 1);
      word.pop_back();
    }
    if (height > 0) {
      word.push_back('D');
      grow(ups, height - 1);
      word.pop_back();
    }
  };
  grow(0, 0);
  const Graph p = path_graph(2 * n + 1);
  parallel_for(out.size(), [&](std::size_t i, int) { out[i].wiener = tree_signed_wiener(p, out[i].signing); });
  return out;
}

std::map<std::uint64_t, std::uint64_t> dyck_distribution(int n) {
  std::map<std::uint64_t, std::uint64_t> dist;
  for (const auto& r : dyck_paths(n)) ++dist[r.wiener];
  return dist;
}

}  // namespace sgw
