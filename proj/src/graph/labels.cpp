#include "sgw/labels.hpp"

#include <algorithm>
#include <sstream>

#include "sgw/errors.hpp"

namespace sgw {

Signing::Signing(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw PreconditionError("signs must be +1 or -1");
  }
}

Signing Signing::negated() const {
  std::vector<int> out(signs_);
  for (int& s : out) s = -s;
  return Signing(std::move(out));
}

void Signing::check_for(const Graph& g) const {
  if (signs_.size() != g.size()) {
    throw PreconditionError("signing has " + std::to_string(signs_.size()) + " entries but graph has " +
                            std::to_string(g.size()) + " edges");
  }
}

EdgeColoring::EdgeColoring(int r, std::vector<int> colors) : r_(r), colors_(std::move(colors)) {
  if (r < 1) throw PreconditionError("color count must be positive");
  for (int c : colors_) {
    if (c < 1 || c > r) {
      throw PreconditionError("color " + std::to_string(c) + " outside 1.." + std::to_string(r));
    }
  }
}

EdgeColoring EdgeColoring::from_signing(const Signing& s) {
  std::vector<int> colors(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) colors[i] = s[i] > 0 ? 1 : 2;
  return EdgeColoring(2, std::move(colors));
}

Signing EdgeColoring::to_signing() const {
  if (r_ != 2) throw PreconditionError("only 2-colorings convert to signings");
  std::vector<int> signs(colors_.size());
  for (std::size_t i = 0; i < colors_.size(); ++i) signs[i] = colors_[i] == 1 ? 1 : -1;
  return Signing(std::move(signs));
}

void EdgeColoring::check_for(const Graph& g) const {
  if (colors_.size() != g.size()) {
    throw PreconditionError("coloring has " + std::to_string(colors_.size()) + " entries but graph has " +
                            std::to_string(g.size()) + " edges");
  }
}

Signing restrict_signing(const Signing& s, const InducedSubgraph& sub) {
  std::vector<int> out;
  out.reserve(sub.edge_origin.size());
  for (EdgeId e : sub.edge_origin) out.push_back(s[e]);
  return Signing(std::move(out));
}

EdgeColoring restrict_coloring(const EdgeColoring& c, const InducedSubgraph& sub) {
  std::vector<int> out;
  out.reserve(sub.edge_origin.size());
  for (EdgeId e : sub.edge_origin) out.push_back(c[e]);
  return EdgeColoring(c.colors_count(), std::move(out));
}

ExtendedCount ExtendedCount::parse(const std::string& text) {
  if (text == "inf") return infinite();
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size()) return ExtendedCount(v);
  } catch (const std::exception&) {
  }
  throw ParseError(0, "bad extended count '" + text + "'");
}

std::vector<EdgeId> PathWitness::edges(const Graph& g) const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const auto e = g.edge_index(vertices[i], vertices[i + 1]);
    if (!e) throw PreconditionError("path uses a non-edge");
    out.push_back(*e);
  }
  return out;
}

std::vector<int> PathWitness::color_counts(const Graph& g, const EdgeColoring& c) const {
  std::vector<int> counts(static_cast<std::size_t>(c.colors_count()) + 1, 0);
  for (EdgeId e : edges(g)) ++counts[c[e]];
  return counts;
}

int PathWitness::signed_sum(const Graph& g, const Signing& s) const {
  int sum = 0;
  for (EdgeId e : edges(g)) sum += s[e];
  return sum;
}

bool PathWitness::is_valid(const Graph& g, Vertex u, Vertex v) const {
  if (vertices.empty() || vertices.front() != u || vertices.back() != v) return false;
  std::vector<Vertex> sorted(vertices);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!g.adjacent(vertices[i], vertices[i + 1])) return false;
  }
  return true;
}

std::string PathWitness::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vertices[i]);
  }
  return out;
}

PathWitness PathWitness::parse(const std::string& text) {
  PathWitness p;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      p.vertices.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(0, "bad vertex '" + tok + "' in path");
    }
  }
  return p;
}

}  // namespace sgw
