#include "sgw/constructions.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <string>

#include "sgw/errors.hpp"
#include "sgw/families.hpp"
#include "sgw/graph_io.hpp"
#include "sgw/path_engine.hpp"

namespace sgw {
namespace {

// Searched signings, frozen. Edge order is that of the named graph; see
// search_special_witness for how each was found.
struct StoredSigning {
  const char* tag;
  const char* signs;
};

constexpr StoredSigning kStored[] = {
    {"c7sq", "+-+-----++++++"},
    {"p6sq", "+----++++"},
    {"theta4", "+-+++-+-"},
    {"g_small_even", "+---++"},
};

Signing parse_signs(const std::string& text) {
  std::vector<int> s;
  for (char c : text) s.push_back(c == '+' ? 1 : -1);
  return Signing(std::move(s));
}

Signing signing_where(const Graph& g, const std::function<bool(const Edge&, EdgeId)>& positive) {
  std::vector<int> s(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) s[e] = positive(g.edge(e), e) ? 1 : -1;
  return Signing(std::move(s));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// Moves a signing of `from` onto `to` through the vertex map from -> to.
Signing transport(const Graph& from, const Signing& s, const Graph& to, const std::vector<Vertex>& map) {
  std::vector<Vertex> back(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) back[map[i]] = static_cast<Vertex>(i);
  return signing_where(to, [&](const Edge& e, EdgeId) {
    const auto idx = from.edge_index(back[e.u], back[e.v]);
    if (!idx) throw Error("graphs do not match under the vertex map");
    return s[*idx] > 0;
  });
}

Graph special_graph(const std::string& tag) {
  if (tag == "c7sq") return square(cycle_graph(7));
  if (tag == "p6sq") return square(path_graph(6));
  if (tag == "theta4") return theta_graph({1, 2, 2, 3});
  if (tag == "g_small_even") return complete_graph(4);
  if (tag == "g_small_odd") return square(path_graph(5));
  throw PreconditionError("unknown witness tag '" + tag + "'");
}

Claim special_claim(const std::string& tag) {
  Claim c;
  if (tag == "c7sq") {
    c.kind = ClaimKind::k_canceling;
    c.k = 2;
  }
  return c;
}

void require_zero_wiener(const SignedWitness& w, const EngineLimits& limits) {
  require(w.signing.has_value(), "witness '" + w.name + "' has no signing");
  CheckOptions opt;
  opt.limits = limits;
  const bool ok = w.graph.order() < 2 || is_k_canceling_signing(w.graph, *w.signing, 1, opt).holds;
  require(ok, "witness '" + w.name + "' is not certified with W = 0");
}

void set_designated(SignedWitness& w) {
  const auto q = qualifying_edges(w.graph, *w.signing);
  if (!q.empty()) w.designated_edge = q.front();
}

std::string claim_text(const Claim& c) {
  std::string out;
  switch (c.kind) {
    case ClaimKind::zero_wiener:
      out = "W=0";
      break;
    case ClaimKind::k_canceling:
      out = std::to_string(c.k) + "-canceling";
      break;
    case ClaimKind::rk_canceling:
      out = "(" + std::to_string(c.r) + "," + std::to_string(c.k) + ")-canceling";
      break;
  }
  if (c.exceptional_pair) {
    out += " except pair " + std::to_string(c.exceptional_pair->first) + " " +
           std::to_string(c.exceptional_pair->second);
  } else if (!c.expected) {
    out += " expected false";
  }
  return out;
}

}  // namespace

EdgeColoring SignedWitness::labelling() const {
  if (coloring) return *coloring;
  if (signing) return EdgeColoring::from_signing(*signing);
  throw Error("witness '" + name + "' carries no labelling");
}

std::vector<std::pair<Vertex, Vertex>> noncanceling_pairs(const Graph& g, const EdgeColoring& c,
                                                         const EngineLimits& limits) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const int n = g.order();
  std::vector<PathWitness> unused;
  for (Vertex u = 0; u + 1 < n; ++u) {
    const VertexMask later = full_mask(n) & ~full_mask(u + 1);
    VertexMask found = 0;
    if (c.colors_count() == 2) {
      SignedPathEngine e(g, c.to_signing(), limits);
      found = e.zero_targets_from(u, later);
    } else {
      ColoredPathEngine e(g, c, limits);
      found = e.canceling_targets_from(u, later);
    }
    for (VertexMask m = later & ~found; m; m &= m - 1) out.emplace_back(u, std::countr_zero(m));
  }
  return out;
}

Certification certify(const SignedWitness& w, const CheckOptions& opt) {
  Certification cert;
  const EdgeColoring c = w.labelling();
  const int k = w.claim.kind == ClaimKind::zero_wiener ? 1 : w.claim.k;
  if (c.colors_count() == 2 && w.graph.order() >= k + 1) {
    cert.verdict = is_k_canceling_signing(w.graph, c.to_signing(), k, opt);
  } else {
    cert.verdict = is_rk_canceling_coloring(w.graph, c, k, SubsetSizes::all_below_k, opt);
  }
  if (w.claim.exceptional_pair) {
    cert.failing_pairs = noncanceling_pairs(w.graph, c, opt.limits);
    cert.claim_holds = cert.failing_pairs == std::vector{*w.claim.exceptional_pair};
  } else {
    cert.claim_holds = cert.verdict.holds == w.claim.expected;
  }
  return cert;
}

SignedWitness square_path_signing(int n) {
  require(n >= 2, "square_path_signing needs n >= 2");
  SignedWitness w;
  w.name = "square-path:" + std::to_string(n);
  w.graph = square(path_graph(n));
  // square() lists the n - 1 path edges first.
  w.signing = signing_where(w.graph, [&](const Edge&, EdgeId e) { return e + 1 < static_cast<EdgeId>(n); });
  if (n == 6) {
    w.claim.exceptional_pair = std::pair<Vertex, Vertex>{0, 5};
  } else if (n < 5) {
    w.claim.expected = false;
    w.claim.note = "too small to cancel";
  }
  if (n == 9) w.stored_paths.push_back(PathWitness{{0, 2, 1, 3, 4, 5, 7, 6, 8}});
  return w;
}

SignedWitness complete_cyclic_signing(int n) {
  require(n >= 3, "complete_cyclic_signing needs n >= 3");
  SignedWitness w;
  w.name = "complete-cyclic:" + std::to_string(n);
  w.graph = complete_graph(n);
  w.signing = signing_where(w.graph, [&](const Edge& e, EdgeId) { return e.v == e.u + 1 || (e.u == 0 && e.v == n - 1); });
  w.claim.kind = ClaimKind::k_canceling;
  w.claim.k = 2;
  w.claim.expected = n >= 5;
  return w;
}

SignedWitness square_tree_signing(const Graph& t) {
  require(is_tree(t), "square_tree_signing needs a tree");
  const int n = t.order();
  require(n >= 5, "square_tree_signing needs at least 5 vertices");
  SignedWitness w;
  w.name = "square-tree";
  w.graph = square(t);
  const bool star = std::any_of(t.edges().begin(), t.edges().end(),
                                [&](const Edge& e) { return t.degree(e.u) == n - 1 || t.degree(e.v) == n - 1; });
  if (star) {
    // T^2 = K_n on the same labels.
    w.signing = signing_where(w.graph, [&](const Edge& e, EdgeId) { return e.v == e.u + 1 || (e.u == 0 && e.v == n - 1); });
    w.claim.note = "star: cyclic signing of K_n";
    return w;
  }
  const bool path = n == 6 && std::all_of(t.edges().begin(), t.edges().end(), [&](const Edge& e) {
                      return t.degree(e.u) <= 2 && t.degree(e.v) <= 2;
                    });
  if (path) {
    std::vector<Vertex> order;
    Vertex prev = -1;
    Vertex cur = 0;
    while (t.degree(cur) != 1) ++cur;
    while (true) {
      order.push_back(cur);
      const auto nb = t.neighbors(cur);
      auto it = std::find_if(nb.begin(), nb.end(), [&](Vertex x) { return x != prev; });
      if (it == nb.end()) break;
      prev = cur;
      cur = *it;
    }
    const auto p6 = special_witness("p6sq");
    w.signing = transport(p6.graph, *p6.signing, w.graph, order);
    w.claim.note = "path on six vertices: stored p6sq signing";
    return w;
  }
  w.signing = signing_where(w.graph, [&](const Edge&, EdgeId e) { return e < t.size(); });
  return w;
}

SignedWitness square_cycle_signing(int n) {
  require(n >= 5, "square_cycle_signing needs n >= 5");
  if (n == 7) return special_witness("c7sq");
  SignedWitness w;
  w.name = "square-cycle:" + std::to_string(n);
  w.graph = square(cycle_graph(n));
  w.signing = signing_where(w.graph, [&](const Edge&, EdgeId e) { return e < static_cast<EdgeId>(n); });
  w.claim.kind = ClaimKind::k_canceling;
  w.claim.k = 2;
  return w;
}

std::vector<std::string> special_tags() { return {"c7sq", "p6sq", "theta4", "g_small_even", "g_small_odd"}; }

SignedWitness special_witness(const std::string& tag) {
  if (tag == "g_small_odd") {
    SignedWitness w = square_path_signing(5);
    w.name = tag;
    set_designated(w);
    return w;
  }
  SignedWitness w;
  w.name = tag;
  w.graph = special_graph(tag);
  auto it = std::find_if(std::begin(kStored), std::end(kStored), [&](const StoredSigning& s) { return s.tag == tag; });
  w.signing = parse_signs(it->signs);
  w.claim = special_claim(tag);
  set_designated(w);
  return w;
}

SignedWitness search_special_witness(const std::string& tag) {
  if (tag == "g_small_odd") return special_witness(tag);
  SignedWitness w;
  w.name = tag;
  w.graph = special_graph(tag);
  w.claim = special_claim(tag);
  if (tag == "g_small_even") {
    const std::size_t m = w.graph.size();
    CancelingChecker checker(w.graph, 2, 1, SubsetSizes::exactly_k_minus_1);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << (m - 1)) && !w.signing; ++i) {
      std::vector<int> s(m, 1);
      for (std::size_t j = 1; j < m; ++j) s[j] = ((i >> (j - 1)) & 1) ? -1 : 1;
      const Signing sig(std::move(s));
      if (checker.holds(sig) && !qualifying_edges(w.graph, sig).empty()) w.signing = sig;
    }
  } else {
    w.signing = find_k_canceling_signing(w.graph, w.claim.kind == ClaimKind::k_canceling ? w.claim.k : 1).signing;
  }
  if (!w.signing) throw Error("search found no witness for '" + tag + "'");
  set_designated(w);
  return w;
}

std::vector<EdgeId> qualifying_edges(const Graph& g, const Signing& s) {
  s.check_for(g);
  std::vector<EdgeId> order(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return g.edge(a) < g.edge(b); });
  std::vector<EdgeId> out;
  for (EdgeId e : order) {
    const Edge ed = g.edge(e);
    const int want = -2 * s[e];  // the rest of the cycle, a y..x path
    std::vector<bool> used(g.order(), false);
    std::function<bool(Vertex, int, int)> walk = [&](Vertex cur, int sum, int len) {
      if (cur == ed.u) return len >= 2 && sum == want;
      const auto nb = g.neighbors(cur);
      const auto inc = g.incident_edges(cur);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (inc[i] == e || used[nb[i]]) continue;
        used[nb[i]] = true;
        const bool hit = walk(nb[i], sum + s[inc[i]], len + 1);
        used[nb[i]] = false;
        if (hit) return true;
      }
      return false;
    };
    used[ed.v] = true;
    if (walk(ed.v, 0, 0)) out.push_back(e);
  }
  return out;
}

SignedWitness subdivision_extend(const SignedWitness& w, EdgeId e, int i, const EngineLimits& limits) {
  require(i >= 0, "subdivision needs i >= 0");
  require_zero_wiener(w, limits);
  require(e < w.graph.size(), "edge index out of range");
  const auto q = qualifying_edges(w.graph, *w.signing);
  require(std::find(q.begin(), q.end(), e) != q.end(),
          "edge " + std::to_string(e) + " lies on no cycle C with sigma(C) = -sigma(e)");
  if (i == 0) return w;
  const int n = w.graph.order();
  const Edge xy = w.graph.edge(e);
  const int base = (*w.signing)[e];
  auto edges = w.graph.edges();
  auto signs = w.signing->values();
  // Path x = w_0, w_1 = n, ..., w_{2i} = n + 2i - 1, w_{2i+1} = y.
  auto vertex = [&](int j) { return j == 0 ? xy.u : j == 2 * i + 1 ? xy.v : n + j - 1; };
  edges[e] = Edge::make(vertex(0), vertex(1));
  signs[e] = base;
  for (int j = 1; j <= 2 * i; ++j) {
    edges.push_back(Edge::make(vertex(j), vertex(j + 1)));
    signs.push_back(j % 2 == 0 ? base : -base);
  }
  SignedWitness out;
  out.name = w.name + "/sub" + std::to_string(e) + "x" + std::to_string(i);
  out.graph = Graph(n + 2 * i, std::move(edges));
  out.signing = Signing(std::move(signs));
  return out;
}

SignedWitness union_signing(const SignedWitness& w1, const SignedWitness& w2, Vertex v1, Vertex v2,
                            const EngineLimits& limits) {
  require_zero_wiener(w1, limits);
  require_zero_wiener(w2, limits);
  SignedWitness out;
  out.name = w1.name + "+" + w2.name;
  out.graph = union_at_vertex(w1.graph, w2.graph, v1, v2);
  auto signs = w1.signing->values();
  const auto& more = w2.signing->values();
  signs.insert(signs.end(), more.begin(), more.end());
  out.signing = Signing(std::move(signs));
  return out;
}

SignedWitness bipartite_clique_signing(const Graph& gprime, const std::vector<Vertex>& u_part,
                                       const std::vector<Vertex>& v_part, int k) {
  require(k >= 1, "k must be at least 1");
  const int n = gprime.order();
  std::vector<int> side(n, -1);
  for (Vertex u : u_part) {
    require(u >= 0 && u < n && side[u] == -1, "vertex " + std::to_string(u) + " listed twice or out of range");
    side[u] = 0;
  }
  for (Vertex v : v_part) {
    require(v >= 0 && v < n && side[v] == -1, "vertex " + std::to_string(v) + " listed twice or out of range");
    side[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v) require(side[v] != -1, "vertex " + std::to_string(v) + " is in neither part");
  require(static_cast<int>(u_part.size()) >= k + 2,
          "part U has " + std::to_string(u_part.size()) + " vertices, needs at least k + 2 = " + std::to_string(k + 2));
  require(static_cast<int>(v_part.size()) >= k + 2,
          "part V has " + std::to_string(v_part.size()) + " vertices, needs at least k + 2 = " + std::to_string(k + 2));
  for (const Edge& e : gprime.edges()) {
    require(side[e.u] != side[e.v], "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " lies inside a part");
  }
  for (Vertex v = 0; v < n; ++v) {
    require(gprime.degree(v) >= k + 1, "vertex " + std::to_string(v) + " has " + std::to_string(gprime.degree(v)) +
                                           " neighbors across the parts, needs at least k + 1 = " +
                                           std::to_string(k + 1));
  }
  auto edges = gprime.edges();
  const std::size_t cross = edges.size();
  for (const auto* part : {&u_part, &v_part}) {
    auto sorted = *part;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t a = 0; a < sorted.size(); ++a)
      for (std::size_t b = a + 1; b < sorted.size(); ++b) edges.push_back({sorted[a], sorted[b]});
  }
  SignedWitness w;
  w.name = "bipartite-clique";
  w.graph = Graph(n, std::move(edges));
  w.signing = signing_where(w.graph, [&](const Edge&, EdgeId e) { return e < cross; });
  w.claim.kind = ClaimKind::k_canceling;
  w.claim.k = k;
  return w;
}

SignedWitness blowup_cycle_signing(const std::vector<int>& parts, int k) {
  require(k >= 1, "k must be at least 1");
  require(parts.size() >= 3 && parts.size() % 2 == 1, "blowup needs an odd number (>= 3) of parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] >= 2 * k, "part " + std::to_string(i) + " has " + std::to_string(parts[i]) +
                                   " vertices, needs at least 2k = " + std::to_string(2 * k));
  }
  SignedWitness w;
  w.name = "blowup-cycle";
  w.graph = blowup(cycle_graph(static_cast<int>(parts.size())), parts);
  std::vector<int> half;
  for (int size : parts) {
    for (int j = 0; j < size; ++j) half.push_back(j < (size + 1) / 2 ? 0 : 1);
  }
  w.signing = signing_where(w.graph, [&](const Edge& e, EdgeId) { return half[e.u] == half[e.v]; });
  w.claim.kind = ClaimKind::k_canceling;
  w.claim.k = k;
  return w;
}

SignedWitness complete_rk_coloring(int n, int r, int k) {
  require(r >= 3, "complete_rk_coloring needs r >= 3");
  require(k >= 2, "complete_rk_coloring needs k >= 2");
  const int m = 3 * (k - 1) * (r - 1);
  require(n >= m, "n = " + std::to_string(n) + " is below 3(k-1)(r-1) = " + std::to_string(m));
  SignedWitness w;
  w.name = "complete-rk:" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(k);
  w.graph = complete_graph(n);
  std::vector<int> colors(w.graph.size(), r);
  for (int i = 1; i < m; ++i) colors[*w.graph.edge_index(i - 1, i)] = (i - 1) % (r - 1) + 1;
  colors[*w.graph.edge_index(0, m - 1)] = r - 1;
  w.coloring = EdgeColoring(r, std::move(colors));
  w.claim.kind = ClaimKind::rk_canceling;
  w.claim.r = r;
  w.claim.k = k;
  return w;
}

namespace {

std::vector<int> spec_ints(std::string_view text, const std::string& spec) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto tok = text.substr(0, comma);
    int v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw PreconditionError("bad parameter in '" + spec + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace

SignedWitness named_witness(std::string_view spec_view) {
  const std::string spec(spec_view);
  const auto tags = special_tags();
  if (std::find(tags.begin(), tags.end(), spec) != tags.end()) return special_witness(spec);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw PreconditionError("unknown construction '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string_view rest = spec_view.substr(colon + 1);
  auto ints = [&](std::size_t min_count) {
    auto v = spec_ints(rest, spec);
    if (v.size() < min_count) throw PreconditionError("too few parameters in '" + spec + "'");
    return v;
  };
  auto exactly = [&](std::size_t count) {
    auto v = ints(count);
    if (v.size() != count) throw PreconditionError("'" + kind + "' takes " + std::to_string(count) + " parameters");
    return v;
  };
  SignedWitness w;
  if (kind == "square-path") {
    w = square_path_signing(exactly(1)[0]);
  } else if (kind == "complete-cyclic") {
    w = complete_cyclic_signing(exactly(1)[0]);
  } else if (kind == "square-cycle") {
    w = square_cycle_signing(exactly(1)[0]);
  } else if (kind == "complete-rk") {
    const auto v = exactly(3);
    w = complete_rk_coloring(v[0], v[1], v[2]);
  } else if (kind == "square-tree") {
    w = square_tree_signing(make_family(parse_family_spec(rest)));
  } else if (kind == "bipartite-clique") {
    const auto v = exactly(3);
    require(v[0] >= 1 && v[1] >= 1, "part sizes must be positive");
    std::vector<Vertex> u_part(v[0]), v_part(v[1]);
    for (int i = 0; i < v[0]; ++i) u_part[i] = i;
    for (int i = 0; i < v[1]; ++i) v_part[i] = v[0] + i;
    w = bipartite_clique_signing(complete_bipartite_graph(v[0], v[1]), u_part, v_part, v[2]);
  } else if (kind == "blowup-cycle") {
    const auto v = ints(4);
    w = blowup_cycle_signing(std::vector<int>(v.begin() + 1, v.end()), v[0]);
  } else if (kind == "subdivision") {
    const auto comma = rest.find(',');
    require(comma != std::string_view::npos, "subdivision needs <tag>,i");
    const auto seed = named_witness(rest.substr(0, comma));
    require(seed.designated_edge.has_value(), "'" + seed.name + "' has no designated edge");
    w = subdivision_extend(seed, *seed.designated_edge, spec_ints(rest.substr(comma + 1), spec).at(0));
  } else {
    throw PreconditionError("unknown construction '" + kind + "'");
  }
  w.name = spec;
  return w;
}

std::vector<std::string> named_witness_forms() {
  std::vector<std::string> out = special_tags();
  for (const char* f : {"square-path:n", "complete-cyclic:n", "square-cycle:n", "complete-rk:n,r,k",
                        "square-tree:<family>", "bipartite-clique:a,b,k", "blowup-cycle:k,n_1,...,n_t",
                        "subdivision:<tag>,i"}) {
    out.push_back(f);
  }
  return out;
}

std::string to_fixture_text(const SignedWitness& w) {
  std::vector<std::string> comments{"name: " + w.name, "claim: " + claim_text(w.claim)};
  if (w.designated_edge) comments.push_back("designated edge: " + std::to_string(*w.designated_edge));
  for (const auto& p : w.stored_paths) comments.push_back("path: " + p.to_string());
  if (w.coloring) return emit_colored(w.graph, *w.coloring, comments);
  return emit_signed(w.graph, *w.signing, comments);
}

}  // namespace sgw
