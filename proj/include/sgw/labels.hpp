#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sgw/graph.hpp"

namespace sgw {

// One sign per edge index of a host graph.
class Signing {
 public:
  Signing() = default;
  explicit Signing(std::vector<int> signs);
  static Signing constant(std::size_t m, int sign = +1) { return Signing(std::vector<int>(m, sign)); }

  std::size_t size() const noexcept { return signs_.size(); }
  int operator[](EdgeId e) const { return signs_[e]; }
  const std::vector<int>& values() const noexcept { return signs_; }

  Signing negated() const;
  // Requires size() == g.size().
  void check_for(const Graph& g) const;

  auto operator<=>(const Signing&) const = default;

 private:
  std::vector<int> signs_;
};

// Colors 1..r, one per edge index. A signing is the r = 2 case with
// +1 -> color 1 and -1 -> color 2.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(int r, std::vector<int> colors);
  static EdgeColoring from_signing(const Signing& s);

  int colors_count() const noexcept { return r_; }
  std::size_t size() const noexcept { return colors_.size(); }
  int operator[](EdgeId e) const { return colors_[e]; }
  const std::vector<int>& values() const noexcept { return colors_; }

  // The inverse of from_signing; requires r == 2.
  Signing to_signing() const;
  void check_for(const Graph& g) const;

  auto operator<=>(const EdgeColoring&) const = default;

 private:
  int r_ = 1;
  std::vector<int> colors_;
};

// Restricts a labelling of G to an induced subgraph using its edge back-references.
Signing restrict_signing(const Signing& s, const InducedSubgraph& sub);
EdgeColoring restrict_coloring(const EdgeColoring& c, const InducedSubgraph& sub);

// Non-negative integer or Infinite.
class ExtendedCount {
 public:
  constexpr ExtendedCount() = default;
  constexpr ExtendedCount(std::uint64_t v) : value_(v) {}
  static constexpr ExtendedCount infinite() {
    ExtendedCount c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  // Requires is_finite().
  constexpr std::uint64_t value() const noexcept { return value_; }

  friend constexpr ExtendedCount operator+(ExtendedCount a, ExtendedCount b) {
    if (a.infinite_ || b.infinite_) return infinite();
    return ExtendedCount(a.value_ + b.value_);
  }
  ExtendedCount& operator+=(ExtendedCount b) { return *this = *this + b; }

  friend constexpr bool operator==(ExtendedCount a, ExtendedCount b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedCount a, ExtendedCount b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
  // Accepts "inf" or a decimal integer.
  static ExtendedCount parse(const std::string& text);

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, ExtendedCount c) { return os << c.to_string(); }

// A simple path given by its vertex sequence. A single vertex is the empty
// path.
struct PathWitness {
  std::vector<Vertex> vertices;

  std::vector<EdgeId> edges(const Graph& g) const;
  // Per-color edge counts, index 0 unused.
  std::vector<int> color_counts(const Graph& g, const EdgeColoring& c) const;
  int signed_sum(const Graph& g, const Signing& s) const;
  // Simple, consecutive vertices adjacent, endpoints u and v.
  bool is_valid(const Graph& g, Vertex u, Vertex v) const;

  // Whitespace-separated vertex sequence.
  std::string to_string() const;
  static PathWitness parse(const std::string& text);

  bool operator==(const PathWitness&) const = default;
};

}  // namespace sgw
