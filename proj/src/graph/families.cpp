#include "sgw/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sgw/errors.hpp"

namespace sgw {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError("invalid family parameters: " + what);
}

int single_param(const FamilySpec& spec, int min_n, const char* name) {
  require(spec.params.size() == 1, std::string(name) + " takes one parameter");
  require(spec.params[0] >= min_n, std::string(name) + " needs n >= " + std::to_string(min_n));
  return spec.params[0];
}

constexpr std::pair<Family, std::string_view> kNames[] = {
    {Family::path, "path"},       {Family::cycle, "cycle"},
    {Family::star, "star"},       {Family::complete, "complete"},
    {Family::complete_bipartite, "complete-bipartite"},
    {Family::blowup, "blowup"},   {Family::theta, "theta"},
};

}  // namespace

Graph blowup(const Graph& base, const std::vector<int>& parts) {
  require(parts.size() == static_cast<std::size_t>(base.order()), "one part size per base vertex");
  std::vector<int> start(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] >= 1, "part sizes must be positive");
    start[i + 1] = start[i] + parts[i];
  }
  std::vector<Edge> edges;
  for (const Edge& e : base.edges()) {
    for (int a = start[e.u]; a < start[e.u + 1]; ++a) {
      for (int b = start[e.v]; b < start[e.v + 1]; ++b) edges.push_back(Edge::make(a, b));
    }
  }
  return Graph(start.back(), std::move(edges));
}

Graph make_family(const FamilySpec& spec) {
  std::vector<Edge> edges;
  switch (spec.family) {
    case Family::path: {
      const int n = single_param(spec, 1, "path");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return Graph(n, std::move(edges));
    }
    case Family::cycle: {
      const int n = single_param(spec, 3, "cycle");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, n - 1});
      return Graph(n, std::move(edges));
    }
    case Family::star: {
      const int n = single_param(spec, 1, "star");
      for (int i = 1; i < n; ++i) edges.push_back({0, i});
      return Graph(n, std::move(edges));
    }
    case Family::complete: {
      const int n = single_param(spec, 1, "complete");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      return Graph(n, std::move(edges));
    }
    case Family::complete_bipartite: {
      require(spec.params.size() == 2, "complete-bipartite takes two part sizes");
      const int a = spec.params[0], b = spec.params[1];
      require(a >= 1 && b >= 1, "part sizes must be positive");
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
      return Graph(a + b, std::move(edges));
    }
    case Family::blowup: {
      require(spec.params.size() >= 3, "blowup needs at least three parts (a cycle)");
      return blowup(cycle_graph(static_cast<int>(spec.params.size())), spec.params);
    }
    case Family::theta: {
      const auto& len = spec.params;
      require(len.size() >= 2, "theta needs at least two paths");
      require(std::all_of(len.begin(), len.end(), [](int l) { return l >= 1; }),
              "theta path lengths must be >= 1");
      require(std::count(len.begin(), len.end(), 1) <= 1, "at most one theta path of length 1");
      Vertex next = 2;
      for (int l : len) {
        Vertex prev = 0;
        for (int step = 1; step < l; ++step) {
          edges.push_back(Edge::make(prev, next));
          prev = next++;
        }
        edges.push_back(Edge::make(prev, 1));
      }
      return Graph(next, std::move(edges));
    }
  }
  throw PreconditionError("unknown family");
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  auto it = std::find_if(std::begin(kNames), std::end(kNames),
                         [&](const auto& p) { return p.second == name; });
  if (it == std::end(kNames)) throw PreconditionError("unknown family '" + std::string(name) + "'");
  spec.family = it->first;
  if (colon == std::string_view::npos) throw PreconditionError("family spec needs parameters");
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view tok = rest.substr(0, comma);
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw PreconditionError("bad family parameter '" + std::string(tok) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out;
  for (const auto& [f, name] : kNames)
    if (f == spec.family) out = std::string(name);
  out += ':';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

}  // namespace sgw
