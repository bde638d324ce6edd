#include "sgw/path_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "sgw/errors.hpp"
#include "sgw/parallel.hpp"

namespace sgw {
namespace {

constexpr int kHardSignedLimit = 32;  // sums must fit a 64-bit offset bitset

void guard(int n, int limit, const char* what) {
  if (n > limit) {
    throw GuardError(std::string(what) + ": graph has " + std::to_string(n) + " vertices, guard is " +
                     std::to_string(limit) + " (raise it with --max-n)");
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
}

}  // namespace

SignedPathEngine::SignedPathEngine(const Graph& g, const Signing& s, const EngineLimits& limits)
    : graph_(&g), n_(g.order()), arcs_(g.order()) {
  guard(n_, std::min(limits.max_signed_order, kHardSignedLimit), "signed path search");
  for (Vertex v = 0; v < n_; ++v) {
    const auto nb = g.neighbors(v);
    const auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) arcs_[v].push_back({nb[i], 1, inc[i]});
  }
  set_signing(s);
}

void SignedPathEngine::set_signing(const Signing& s) {
  s.check_for(*graph_);
  for (auto& list : arcs_)
    for (Arc& a : list) a.sign = s[a.edge];
}

void SignedPathEngine::run(Vertex source, VertexMask targets, VertexMask blocked, bool zero_only,
                           bool keep_paths) {
  check_vertex(*graph_, source);
  if (blocked & bit(source)) throw PreconditionError("source vertex is deleted");
  seen_.clear();
  blocked_ = blocked;
  targets_ = targets & ~blocked & full_mask(n_);
  pending_ = targets_;
  zero_only_ = zero_only;
  keep_paths_ = keep_paths;
  done_ = pending_ == 0;
  best_.assign(n_, n_);  // n exceeds every achievable |sum|
  bound_ = zero_only ? 1 : n_;
  if (keep_paths) paths_.assign(n_, PathWitness{});
  stack_.assign(1, source);
  const int available = n_ - std::popcount(blocked_ & full_mask(n_));
  if (!done_) dfs(bit(source), source, 0, available - 1);
}

void SignedPathEngine::record(Vertex t, int sum) {
  const int a = std::abs(sum);
  if (a >= best_[t] || (zero_only_ && a != 0)) return;
  best_[t] = a;
  if (keep_paths_) paths_[t].vertices = stack_;
  if (a == 0) {
    pending_ &= ~bit(t);
    if (pending_ == 0) done_ = true;
  }
  if (!zero_only_) {
    bound_ = 0;
    for (VertexMask m = targets_; m; m &= m - 1) bound_ = std::max(bound_, best_[std::countr_zero(m)]);
  }
}

void SignedPathEngine::dfs(VertexMask visited, Vertex cur, int sum, int remaining) {
  auto& seen = seen_[(visited << 5) | static_cast<VertexMask>(cur)];
  const std::uint64_t sum_bit = std::uint64_t{1} << (sum + n_ - 1);
  if (seen & sum_bit) return;
  seen |= sum_bit;
  if (targets_ & bit(cur)) {
    record(cur, sum);
    if (done_) return;
  }
  // Each further edge changes the sum by one.
  if (std::abs(sum) - remaining >= bound_) return;
  const VertexMask closed = visited | blocked_;
  for (const Arc& a : arcs_[cur]) {
    if (closed & bit(a.to)) continue;
    stack_.push_back(a.to);
    dfs(visited | bit(a.to), a.to, sum + a.sign, remaining - 1);
    stack_.pop_back();
    if (done_) return;
  }
}

std::vector<SignedPathEngine::Target> SignedPathEngine::distances_from(Vertex source, VertexMask targets,
                                                                       VertexMask blocked) {
  run(source, targets, blocked, /*zero_only=*/false, /*keep_paths=*/true);
  std::vector<Target> out(n_);
  for (VertexMask m = targets_; m; m &= m - 1) {
    const Vertex t = std::countr_zero(m);
    if (best_[t] < n_) out[t] = Target{ExtendedCount(static_cast<std::uint64_t>(best_[t])), paths_[t]};
  }
  return out;
}

VertexMask SignedPathEngine::zero_targets_from(Vertex source, VertexMask targets, VertexMask blocked,
                                               std::vector<PathWitness>* witnesses) {
  run(source, targets, blocked, /*zero_only=*/true, witnesses != nullptr);
  const VertexMask found = targets_ & ~pending_;
  if (witnesses) {
    witnesses->assign(n_, PathWitness{});
    for (VertexMask m = found; m; m &= m - 1) (*witnesses)[std::countr_zero(m)] = paths_[std::countr_zero(m)];
  }
  return found;
}

ColoredPathEngine::ColoredPathEngine(const Graph& g, const EdgeColoring& c, const EngineLimits& limits)
    : graph_(&g), n_(g.order()), r_(c.colors_count()), arcs_(g.order()) {
  guard(n_, std::min(c.colors_count() <= 2 ? limits.max_signed_order : limits.max_colored_order, kOffset),
        "colored path search");
  if (r_ > kMaxColors) throw GuardError("colored path search supports at most 11 colors");
  for (int k = 0; k + 1 < r_; ++k) {
    zero_code_ |= std::uint64_t{kOffset} << (kBits * k);
    all_ones_ |= std::uint64_t{1} << (kBits * k);
  }
  set_coloring(c);
}

void ColoredPathEngine::set_coloring(const EdgeColoring& c) {
  c.check_for(*graph_);
  if (c.colors_count() != r_) throw PreconditionError("color count changed");
  for (auto& list : arcs_) list.clear();
  for (Vertex v = 0; v < n_; ++v) {
    const auto nb = graph_->neighbors(v);
    const auto inc = graph_->incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) arcs_[v].push_back({nb[i], c[inc[i]]});
  }
}

// Fewest extra edges that could equalize the color counts: every color must
// climb to the current maximum.
int ColoredPathEngine::moves_needed() const {
  int top = 0;
  int total = 0;
  for (int k = 0; k + 1 < r_; ++k) {
    top = std::max(top, diff_[k]);
    total += diff_[k];
  }
  return r_ * top - total;
}

VertexMask ColoredPathEngine::canceling_targets_from(Vertex source, VertexMask targets, VertexMask blocked,
                                                     std::vector<PathWitness>* witnesses) {
  check_vertex(*graph_, source);
  if (blocked & bit(source)) throw PreconditionError("source vertex is deleted");
  seen_.clear();
  blocked_ = blocked;
  targets_ = targets & ~blocked & full_mask(n_);
  pending_ = targets_;
  keep_paths_ = witnesses != nullptr;
  if (keep_paths_) paths_.assign(n_, PathWitness{});
  std::fill(std::begin(diff_), std::end(diff_), 0);
  stack_.assign(1, source);
  done_ = pending_ == 0;
  const int available = n_ - std::popcount(blocked_ & full_mask(n_));
  if (!done_) dfs(bit(source), source, zero_code_, available - 1);
  const VertexMask found = targets_ & ~pending_;
  if (witnesses) {
    witnesses->assign(n_, PathWitness{});
    for (VertexMask m = found; m; m &= m - 1) (*witnesses)[std::countr_zero(m)] = paths_[std::countr_zero(m)];
  }
  return found;
}

void ColoredPathEngine::dfs(VertexMask visited, Vertex cur, std::uint64_t code, int remaining) {
  if (!seen_.insert({(visited << 5) | static_cast<VertexMask>(cur), code}).second) return;
  if (code == zero_code_ && (pending_ & bit(cur))) {
    pending_ &= ~bit(cur);
    if (keep_paths_) paths_[cur].vertices = stack_;
    if (pending_ == 0) {
      done_ = true;
      return;
    }
  }
  if (moves_needed() > remaining) return;
  const VertexMask closed = visited | blocked_;
  for (const Arc& a : arcs_[cur]) {
    if (closed & bit(a.to)) continue;
    std::uint64_t next = code;
    if (a.color == 1) {
      next -= all_ones_;
      for (int k = 0; k + 1 < r_; ++k) --diff_[k];
    } else {
      next += std::uint64_t{1} << (kBits * (a.color - 2));
      ++diff_[a.color - 2];
    }
    stack_.push_back(a.to);
    dfs(visited | bit(a.to), a.to, next, remaining - 1);
    stack_.pop_back();
    if (a.color == 1) {
      for (int k = 0; k + 1 < r_; ++k) ++diff_[k];
    } else {
      --diff_[a.color - 2];
    }
    if (done_) return;
  }
}

DistanceResult signed_distance(const Graph& g, const Signing& s, Vertex u, Vertex v, const EngineLimits& limits) {
  check_vertex(g, u);
  check_vertex(g, v);
  s.check_for(g);
  if (u == v) return {ExtendedCount(0), PathWitness{{u}}};
  SignedPathEngine engine(g, s, limits);
  auto res = engine.distances_from(u, bit(v));
  if (res[v].value.is_infinite()) return {ExtendedCount::infinite(), std::nullopt};
  return {res[v].value, std::move(res[v].witness)};
}

std::optional<PathWitness> find_canceling_path(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v,
                                               const EngineLimits& limits) {
  check_vertex(g, u);
  check_vertex(g, v);
  c.check_for(g);
  if (u == v) return PathWitness{{u}};
  std::vector<PathWitness> w;
  VertexMask found = 0;
  if (c.colors_count() == 2) {
    SignedPathEngine engine(g, c.to_signing(), limits);
    found = engine.zero_targets_from(u, bit(v), 0, &w);
  } else {
    ColoredPathEngine engine(g, c, limits);
    found = engine.canceling_targets_from(u, bit(v), 0, &w);
  }
  if (!(found & bit(v))) return std::nullopt;
  return w[v];
}

std::vector<std::vector<ExtendedCount>> signed_distance_matrix(const Graph& g, const Signing& s,
                                                               const EngineLimits& limits) {
  s.check_for(g);
  const int n = g.order();
  std::vector<std::vector<ExtendedCount>> d(n, std::vector<ExtendedCount>(n, ExtendedCount::infinite()));
  if (n == 0) return d;
  std::vector<std::optional<SignedPathEngine>> engines(static_cast<std::size_t>(thread_count()));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i, int worker) {
    auto& engine = engines[worker];
    if (!engine) engine.emplace(g, s, limits);
    const Vertex u = static_cast<Vertex>(i);
    const VertexMask later = full_mask(n) & ~full_mask(u + 1);
    auto res = engine->distances_from(u, later);
    d[u][u] = ExtendedCount(0);
    for (Vertex v = u + 1; v < n; ++v) d[u][v] = res[v].value;
  });
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < u; ++v) d[u][v] = d[v][u];
  return d;
}

}  // namespace sgw
