#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgw/graph.hpp"
#include "sgw/labels.hpp"

namespace sgw {

// Contents of a native graph file. Edge lines may carry a trailing "+"/"-"
// (signed variant) or a color >= 1 (colored variant); all edge lines of one
// file must agree. The colored variant takes r from a "# colors: r" comment
// when present, otherwise from the largest color used.
struct LabeledGraph {
  Graph graph;
  std::optional<Signing> signing;
  std::optional<EdgeColoring> coloring;
  // Comment lines with the leading '#' and one space removed.
  std::vector<std::string> comments;
};

// Native edge-list format: "n m", then m lines "u v [label]". Text after '#'
// is a comment; blank lines are skipped. Errors carry the offending line.
LabeledGraph parse_labeled_graph(std::string_view text);
Graph parse_graph(std::string_view text);

// graph6, read-only. One graph per call; an optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view line);
// One graph per non-empty line.
std::vector<Graph> parse_graph6_corpus(std::string_view text);

std::string emit_graph(const Graph& g, const std::vector<std::string>& comments = {});
std::string emit_signed(const Graph& g, const Signing& s, const std::vector<std::string>& comments = {});
std::string emit_colored(const Graph& g, const EdgeColoring& c,
                         const std::vector<std::string>& comments = {});

// Reads a file in either format; graph6 is detected by its header or by a
// first line that is a single printable-ASCII token.
LabeledGraph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sgw
