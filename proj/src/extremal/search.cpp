#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "sgw/errors.hpp"
#include "sgw/extremal.hpp"
#include "sgw/families.hpp"
#include "sgw/parallel.hpp"
#include "sgw/wiener.hpp"

namespace sgw {
namespace {

constexpr std::uint64_t kBlock = 1024;

// Lowest index in [0, count) accepted by pred(index, worker), scanning blocks
// in waves of one block per worker so the answer never depends on timing.
template <class Pred>
std::optional<std::uint64_t> first_accepted(std::uint64_t count, Pred&& pred) {
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  const auto wave = static_cast<std::uint64_t>(thread_count());
  for (std::uint64_t first = 0; first < blocks; first += wave) {
    const std::uint64_t in_wave = std::min(wave, blocks - first);
    std::vector<std::optional<std::uint64_t>> hit(in_wave);
    parallel_for(in_wave, [&](std::size_t b, int worker) {
      const std::uint64_t lo = (first + b) * kBlock;
      const std::uint64_t hi = std::min(count, lo + kBlock);
      for (std::uint64_t i = lo; i < hi; ++i) {
        if (pred(i, worker)) {
          hit[b] = i;
          return;
        }
      }
    });
    for (const auto& h : hit) {
      if (h) return h;
    }
  }
  return std::nullopt;
}

void guard_free_bits(std::size_t free, const SearchOptions& opt) {
  if (free > static_cast<std::size_t>(opt.max_free_edges)) {
    throw GuardError("search space has " + std::to_string(free) + " free edges, guard is " +
                     std::to_string(opt.max_free_edges) + " (raise it with --max-edges)");
  }
}

// Edge 0 positive; bit j of index negates edge j + 1.
Signing signing_from_index(std::size_t m, std::uint64_t index) {
  std::vector<int> s(m, 1);
  for (std::size_t j = 1; j < m; ++j) {
    if ((index >> (j - 1)) & 1) s[j] = -1;
  }
  return Signing(std::move(s));
}

// Restricted growth strings of length `len` over at most r symbols that
// extend a prefix whose largest symbol is `used`.
class GrowthCounter {
 public:
  GrowthCounter(std::size_t m, int r) : r_(r), table_(m + 1, std::vector<std::uint64_t>(r + 1, 0)) {
    for (int u = 0; u <= r; ++u) table_[0][u] = 1;
    for (std::size_t len = 1; len <= m; ++len) {
      for (int u = 0; u <= r; ++u) {
        std::uint64_t c = static_cast<std::uint64_t>(u) * table_[len - 1][u];
        if (u < r) c += table_[len - 1][u + 1];
        table_[len][u] = c;
      }
    }
  }
  std::uint64_t count(std::size_t len, int used) const { return table_[len][used]; }
  int colors() const { return r_; }

 private:
  int r_;
  std::vector<std::vector<std::uint64_t>> table_;
};

// The index-th restricted growth string (colors 1..r) in lexicographic order.
std::vector<int> growth_string(const GrowthCounter& gc, std::size_t m, std::uint64_t index) {
  std::vector<int> out(m);
  int used = 0;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const std::size_t rest = m - pos - 1;
    for (int c = 1; c <= std::min(used + 1, gc.colors()); ++c) {
      const std::uint64_t block = gc.count(rest, std::max(used, c));
      if (index < block) {
        out[pos] = c;
        used = std::max(used, c);
        break;
      }
      index -= block;
    }
  }
  return out;
}

std::uint64_t factorial(int r) {
  std::uint64_t f = 1;
  for (int i = 2; i <= r; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

SearchResult find_k_canceling_signing(const Graph& g, int k, const SearchOptions& opt) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  SearchResult result;
  result.symmetry_factor = g.size() > 0 ? 2 : 1;
  const bool exact = g.order() >= k + 1;
  if (opt.use_filter && exact) {
    const auto report = necessary_conditions(g, k);
    if (!report.pass()) {
      result.rejected_by_filter = true;
      result.filter_reasons = report.failures();
      return result;
    }
  }
  const std::size_t m = g.size();
  const std::size_t free = m > 0 ? m - 1 : 0;
  guard_free_bits(free, opt);
  const SubsetSizes sizes = exact ? SubsetSizes::exactly_k_minus_1 : SubsetSizes::all_below_k;
  std::vector<std::optional<CancelingChecker>> checkers(static_cast<std::size_t>(thread_count()));
  const auto hit = first_accepted(std::uint64_t{1} << free, [&](std::uint64_t i, int worker) {
    auto& c = checkers[worker];
    if (!c) c.emplace(g, 2, k, sizes, opt.limits);
    return c->holds(signing_from_index(m, i));
  });
  if (hit) {
    result.found = true;
    result.examined = *hit + 1;
    result.signing = signing_from_index(m, *hit);
  } else {
    result.examined = std::uint64_t{1} << free;
  }
  return result;
}

SearchResult find_rk_canceling_coloring(const Graph& g, int r, int k, const SearchOptions& opt) {
  if (r < 2) throw PreconditionError("r must be at least 2");
  if (k < 1) throw PreconditionError("k must be at least 1");
  SearchResult result;
  const std::size_t m = g.size();
  const GrowthCounter gc(m, r);
  const std::uint64_t total = gc.count(m, 0);
  if (total > (std::uint64_t{1} << opt.max_free_edges)) {
    throw GuardError("search space has " + std::to_string(total) + " colorings, guard is 2^" +
                     std::to_string(opt.max_free_edges) + " (raise it with --max-edges)");
  }
  result.symmetry_factor = factorial(r);
  const bool exact = g.order() >= k + 1;
  if (opt.use_filter && exact) {
    const auto report = necessary_conditions(g, k);
    if (!report.pass()) {
      result.rejected_by_filter = true;
      result.filter_reasons = report.failures();
      return result;
    }
  }
  std::vector<std::optional<CancelingChecker>> checkers(static_cast<std::size_t>(thread_count()));
  auto coloring = [&](std::uint64_t i) { return EdgeColoring(r, growth_string(gc, m, i)); };
  const auto hit = first_accepted(total, [&](std::uint64_t i, int worker) {
    auto& c = checkers[worker];
    if (!c) c.emplace(g, r, k, SubsetSizes::all_below_k, opt.limits);
    return c->holds(coloring(i));
  });
  if (hit) {
    result.found = true;
    result.examined = *hit + 1;
    result.coloring = coloring(*hit);
  } else {
    result.examined = total;
  }
  return result;
}

MinWienerResult min_signed_wiener(const Graph& g, const SearchOptions& opt) {
  MinWienerResult result;
  const std::size_t m = g.size();
  if (!is_connected(g)) {
    result.argmin = Signing::constant(m);
    result.examined = 1;
    return result;
  }
  const std::size_t free = m > 0 ? m - 1 : 0;
  guard_free_bits(free, opt);
  const bool tree = is_tree(g);
  const auto bipartite = bipartite_lower_bound(g);
  const std::uint64_t floor = std::max(bipartite.is_finite() ? bipartite.value() : 0, leaf_lower_bound(g));
  const std::uint64_t count = std::uint64_t{1} << free;
  auto gray = [&](std::uint64_t i) { return signing_from_index(m, i ^ (i >> 1)); };

  // W_sigma, abandoned as soon as the running sum reaches `cutoff`.
  std::vector<std::optional<SignedPathEngine>> engines(static_cast<std::size_t>(thread_count()));
  auto evaluate = [&](const Signing& s, int worker, std::uint64_t cutoff) -> std::uint64_t {
    if (tree) return tree_signed_wiener(g, s);
    auto& engine = engines[worker];
    if (engine) {
      engine->set_signing(s);
    } else {
      engine.emplace(g, s, opt.limits);
    }
    std::uint64_t total = 0;
    const int n = g.order();
    for (Vertex u = 0; u + 1 < n && total < cutoff; ++u) {
      const auto res = engine->distances_from(u, full_mask(n) & ~full_mask(u + 1));
      for (Vertex v = u + 1; v < n; ++v) total += res[v].value.value();
    }
    return total;
  };

  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  const auto wave = static_cast<std::uint64_t>(thread_count());
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t best_index = 0;
  for (std::uint64_t first = 0; first < blocks && best > floor; first += wave) {
    const std::uint64_t in_wave = std::min(wave, blocks - first);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> local(in_wave, {std::numeric_limits<std::uint64_t>::max(), 0});
    parallel_for(in_wave, [&](std::size_t b, int worker) {
      const std::uint64_t lo = (first + b) * kBlock;
      const std::uint64_t hi = std::min(count, lo + kBlock);
      auto& [value, index] = local[b];
      value = best;  // only strict improvements on earlier waves matter
      index = count;
      for (std::uint64_t i = lo; i < hi && value > floor; ++i) {
        const std::uint64_t w = evaluate(gray(i), worker, value);
        if (w < value) {
          value = w;
          index = i;
        }
      }
    });
    for (const auto& [value, index] : local) {
      if (index != count && value < best) {
        best = value;
        best_index = index;
      }
    }
  }
  result.value = ExtendedCount(best);
  result.argmin = gray(best_index);
  result.examined = std::min(count, best <= floor ? best_index + 1 : count);
  return result;
}

std::vector<ThresholdRow> threshold_scan(int r, int k, int n_from, int n_to, const SearchOptions& opt) {
  if (r < 2 || k < 1) throw PreconditionError("threshold scan needs r >= 2 and k >= 1");
  if (n_from < 1 || n_to < n_from) throw PreconditionError("bad n range");
  SearchOptions unfiltered = opt;
  unfiltered.use_filter = false;
  std::vector<ThresholdRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    const Graph kn = complete_graph(n);
    const auto res = r == 2 ? find_k_canceling_signing(kn, k, unfiltered)
                            : find_rk_canceling_coloring(kn, r, k, unfiltered);
    rows.push_back(ThresholdRow{n, res.found, res.examined, res.signing, res.coloring});
  }
  return rows;
}

std::optional<int> stable_threshold(const std::vector<ThresholdRow>& rows) {
  if (rows.empty() || !rows.back().holds) return std::nullopt;
  int n = rows.back().n;
  for (auto it = rows.rbegin(); it != rows.rend() && it->holds; ++it) n = it->n;
  return n;
}

ThresholdBounds n2k_bounds(int k) {
  if (k < 5) throw PreconditionError("bounds are stated for k >= 5");
  ThresholdBounds b;
  b.exact_lower = k + std::log2(static_cast<double>(k)) / 2.0;
  b.lower = static_cast<int>(std::ceil(b.exact_lower - 1e-9));
  b.upper = 2 * k + 4;
  return b;
}

}  // namespace sgw
