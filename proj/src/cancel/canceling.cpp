#include "sgw/canceling.hpp"

#include <atomic>
#include <bit>
#include <limits>
#include <string>

#include "sgw/errors.hpp"
#include "sgw/parallel.hpp"
#include "sgw/wiener.hpp"

namespace sgw {
namespace {

// One labelled graph's canceling-path oracle; routes r = 2 to the signed
// engine. Engines are built on the first labelling.
class Prober {
 public:
  Prober(const Graph& g, int r, const EngineLimits& limits) : g_(&g), r_(r), limits_(limits) {}

  void set(const Signing& s) {
    if (signed_) {
      signed_->set_signing(s);
    } else {
      signed_.emplace(*g_, s, limits_);
    }
  }

  void set(const EdgeColoring& c) {
    if (c.colors_count() != r_) throw PreconditionError("coloring uses the wrong number of colors");
    if (r_ == 2) return set(c.to_signing());
    if (colored_) {
      colored_->set_coloring(c);
    } else {
      colored_.emplace(*g_, c, limits_);
    }
  }

  VertexMask canceling(Vertex source, VertexMask targets, VertexMask blocked, std::vector<PathWitness>* w) {
    if (r_ == 2) return signed_->zero_targets_from(source, targets, blocked, w);
    return colored_->canceling_targets_from(source, targets, blocked, w);
  }

 private:
  const Graph* g_;
  int r_;
  EngineLimits limits_;
  std::optional<SignedPathEngine> signed_;
  std::optional<ColoredPathEngine> colored_;
};

std::vector<VertexSet> deletion_sets(int n, int k, SubsetSizes sizes) {
  std::vector<VertexSet> out;
  const int top = std::min(k - 1, n);
  const int bottom = sizes == SubsetSizes::exactly_k_minus_1 ? top : 0;
  for (int size = bottom; size <= top; ++size) {
    for_each_subset(n, size, [&](const std::vector<Vertex>& pick) {
      out.emplace_back(pick);
      return true;
    });
  }
  return out;
}

// Sources of G - S that still have later surviving vertices, with those
// later vertices as targets.
template <class Fn>
bool for_each_source(int n, VertexMask deleted, Fn&& fn) {
  const VertexMask alive = full_mask(n) & ~deleted;
  for (VertexMask m = alive; m; m &= m - 1) {
    const Vertex u = std::countr_zero(m);
    const VertexMask later = alive & ~full_mask(u + 1);
    if (later == 0) break;
    if (!fn(u, later)) return false;
  }
  return true;
}

template <class Label>
CancelingVerdict verify(const Graph& g, int r, const Label& label, int k, SubsetSizes sizes,
                        const CheckOptions& opt) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  label.check_for(g);
  const int n = g.order();
  const auto sets = deletion_sets(n, k, sizes);

  if (opt.collect_witnesses) {
    std::size_t total = 0;
    for (const auto& s : sets) {
      const std::size_t alive = static_cast<std::size_t>(n) - s.size();
      total += alive * (alive - (alive > 0 ? 1 : 0)) / 2;
    }
    if (total > opt.max_witnesses) {
      throw GuardError("witness table would hold " + std::to_string(total) + " paths, limit is " +
                       std::to_string(opt.max_witnesses));
    }
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> first_failure{kNone};
  std::vector<std::optional<FailureCertificate>> failures(sets.size());
  std::vector<std::vector<PairWitness>> tables(opt.collect_witnesses ? sets.size() : 0);
  std::vector<std::optional<Prober>> probers(static_cast<std::size_t>(thread_count()));

  parallel_for(sets.size(), [&](std::size_t i, int worker) {
    if (i > first_failure.load()) return;
    auto& prober = probers[worker];
    if (!prober) {
      prober.emplace(g, r, opt.limits);
      prober->set(label);
    }
    const VertexMask deleted = sets[i].mask();
    std::vector<PathWitness> paths;
    for_each_source(n, deleted, [&](Vertex u, VertexMask later) {
      const VertexMask found = prober->canceling(u, later, deleted, opt.collect_witnesses ? &paths : nullptr);
      const VertexMask missing = later & ~found;
      if (missing) {
        failures[i] = FailureCertificate{sets[i], u, std::countr_zero(missing)};
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
        return false;
      }
      if (opt.collect_witnesses) {
        for (VertexMask m = later; m; m &= m - 1) {
          const Vertex v = std::countr_zero(m);
          tables[i].push_back(PairWitness{sets[i], u, v, paths[v]});
        }
      }
      return true;
    });
  });

  CancelingVerdict verdict;
  const std::size_t bad = first_failure.load();
  if (bad != kNone) {
    verdict.failure = failures[bad];
    return verdict;
  }
  verdict.holds = true;
  for (auto& t : tables) {
    for (auto& w : t) verdict.witnesses.push_back(std::move(w));
  }
  return verdict;
}

}  // namespace

CancelingVerdict is_k_canceling_signing(const Graph& g, const Signing& s, int k, const CheckOptions& opt) {
  if (k >= 1 && g.order() < k + 1) {
    throw PreconditionError("exact-size check needs at least k + 1 = " + std::to_string(k + 1) +
                            " vertices, graph has " + std::to_string(g.order()));
  }
  return verify(g, 2, s, k, SubsetSizes::exactly_k_minus_1, opt);
}

CancelingVerdict is_k_canceling_signing_literal(const Graph& g, const Signing& s, int k,
                                                const CheckOptions& opt) {
  return verify(g, 2, s, k, SubsetSizes::all_below_k, opt);
}

CancelingVerdict is_rk_canceling_coloring(const Graph& g, const EdgeColoring& c, int k, SubsetSizes sizes,
                                          const CheckOptions& opt) {
  if (sizes == SubsetSizes::exactly_k_minus_1 && k >= 1 && g.order() < k + 1) {
    throw PreconditionError("exact-size check needs at least k + 1 vertices");
  }
  return verify(g, c.colors_count(), c, k, sizes, opt);
}

bool certificate_fails(const Graph& g, const EdgeColoring& c, const FailureCertificate& cert,
                       const EngineLimits& limits) {
  if (cert.deleted.contains(cert.u) || cert.deleted.contains(cert.v) || cert.u == cert.v) return false;
  const auto sub = delete_vertices(g, cert.deleted);
  const auto path =
      find_canceling_path(sub.graph, restrict_coloring(c, sub), *sub.old_to_new[cert.u], *sub.old_to_new[cert.v],
                          limits);
  return !path.has_value();
}

struct CancelingChecker::Impl {
  Impl(const Graph& g, int r, int k, SubsetSizes sizes, const EngineLimits& limits)
      : graph(g), prober(graph, r, limits) {
    for (const auto& s : deletion_sets(g.order(), k, sizes)) masks.push_back(s.mask());
  }

  bool probe(std::size_t set, Vertex u) {
    const VertexMask later = full_mask(graph.order()) & ~masks[set] & ~full_mask(u + 1);
    return (prober.canceling(u, later, masks[set], nullptr) & later) == later;
  }

  bool run() {
    if (killer && !probe(killer->first, killer->second)) return false;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      const bool ok = for_each_source(graph.order(), masks[i], [&](Vertex u, VertexMask later) {
        if ((prober.canceling(u, later, masks[i], nullptr) & later) == later) return true;
        killer.emplace(i, u);
        return false;
      });
      if (!ok) return false;
    }
    return true;
  }

  Graph graph;
  Prober prober;
  std::vector<VertexMask> masks;
  std::optional<std::pair<std::size_t, Vertex>> killer;
};

CancelingChecker::CancelingChecker(const Graph& g, int r, int k, SubsetSizes sizes, const EngineLimits& limits)
    : impl_(std::make_unique<Impl>(g, r, k, sizes, limits)) {
  if (k < 1) throw PreconditionError("k must be at least 1");
}

CancelingChecker::~CancelingChecker() = default;
CancelingChecker::CancelingChecker(CancelingChecker&&) noexcept = default;

bool CancelingChecker::holds(const Signing& s) {
  s.check_for(impl_->graph);
  impl_->prober.set(s);
  return impl_->run();
}

bool CancelingChecker::holds(const EdgeColoring& c) {
  c.check_for(impl_->graph);
  impl_->prober.set(c);
  return impl_->run();
}

std::vector<std::string> NecessaryReport::failures() const {
  std::vector<std::string> out;
  if (!k_connected) out.push_back(k == 1 ? "not connected" : "not " + std::to_string(k) + "-connected");
  if (!odd_cycle) out.push_back("no odd cycle");
  if (!min_degree_ok) {
    out.push_back("minimum degree " + std::to_string(min_degree) + " < " + std::to_string(required_min_degree));
  }
  if (!edge_count_ok) {
    out.push_back("edge count " + std::to_string(edge_count) + " < " + std::to_string(required_edges));
  }
  return out;
}

NecessaryReport necessary_conditions(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  const auto report = structural_report(g);
  NecessaryReport r;
  r.k = k;
  r.k_connected = is_k_connected(g, k);
  r.odd_cycle = report.has_odd_cycle;
  r.min_degree = report.min_degree;
  r.required_min_degree = k + 1;
  r.min_degree_ok = r.min_degree >= r.required_min_degree;
  r.edge_count = g.size();
  r.required_edges = static_cast<std::size_t>(g.order() + k * (k - 1) / 2 + 2 * k);
  r.edge_count_ok = r.edge_count >= r.required_edges;
  return r;
}

std::vector<int> ThetaDecomposition::lengths() const {
  std::vector<int> out;
  for (const auto& p : paths) out.push_back(static_cast<int>(p.size()) - 1);
  return out;
}

std::optional<ThetaDecomposition> theta_recognize(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return std::nullopt;
  std::vector<Vertex> high;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return std::nullopt;
    if (g.degree(v) > 2) high.push_back(v);
  }
  ThetaDecomposition d;
  if (high.empty()) {
    d.x = 0;
    d.y = 1;
  } else if (high.size() == 2 && g.degree(high[0]) == g.degree(high[1])) {
    d.x = high[0];
    d.y = high[1];
  } else {
    return std::nullopt;
  }
  int covered = 2;
  for (Vertex first : g.neighbors(d.x)) {
    std::vector<Vertex> path{d.x, first};
    Vertex prev = d.x;
    Vertex cur = first;
    while (cur != d.y) {
      if (cur == d.x || g.degree(cur) != 2) return std::nullopt;
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
    covered += static_cast<int>(path.size()) - 2;
    d.paths.push_back(std::move(path));
  }
  if (covered != n) return std::nullopt;
  d.t = static_cast<int>(d.paths.size());
  return d;
}

std::optional<bool> theta_verdict(const Graph& g) {
  const auto d = theta_recognize(g);
  if (d && d->t <= 3) return false;
  return std::nullopt;
}

namespace {

template <class Wiener>
SoltesReport soltes(const Graph& g, Wiener&& wiener) {
  if (g.order() < 2) throw PreconditionError("vertex-deletion check needs at least 2 vertices");
  SoltesReport r;
  r.whole = wiener(g, nullptr);
  r.holds = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto sub = delete_vertices(g, VertexSet{v});
    r.deleted.push_back(wiener(sub.graph, &sub));
    if (r.deleted.back() != r.whole) r.holds = false;
  }
  return r;
}

}  // namespace

SoltesReport soltes_check_classical(const Graph& g) {
  return soltes(g, [](const Graph& h, const InducedSubgraph*) { return wiener_classical(h); });
}

SoltesReport soltes_check_signed(const Graph& g, const Signing& s, const EngineLimits& limits) {
  s.check_for(g);
  return soltes(g, [&](const Graph& h, const InducedSubgraph* sub) {
    return wiener_signed(h, sub ? restrict_signing(s, *sub) : s, limits);
  });
}

}  // namespace sgw
