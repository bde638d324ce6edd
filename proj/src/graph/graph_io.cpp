#include "sgw/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sgw/errors.hpp"

namespace sgw {
namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool to_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && p == tok.data() + tok.size();
}

enum class LabelKind { unknown, none, sign, color };

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

LabeledGraph parse_labeled_graph(std::string_view text) {
  LabeledGraph out;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::vector<int> labels;
  std::vector<int> edge_lines;
  LabelKind kind = LabelKind::unknown;
  std::optional<int> declared_r;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      std::string_view c = trim(line.substr(hash + 1));
      out.comments.emplace_back(c);
      if (c.rfind("colors:", 0) == 0) {
        long long r = 0;
        if (!to_int(trim(c.substr(7)), r) || r < 1) throw ParseError(line_no, "bad colors comment");
        declared_r = static_cast<int>(r);
      }
      line = line.substr(0, hash);
    }
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 2 || !to_int(tok[0], n) || !to_int(tok[1], m) || n < 0 || m < 0) {
        throw ParseError(line_no, "expected header 'n m'");
      }
      continue;
    }
    long long a = 0, b = 0;
    if (tok.size() < 2 || tok.size() > 3 || !to_int(tok[0], a) || !to_int(tok[1], b)) {
      throw ParseError(line_no, "malformed edge line");
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(line_no, "vertex index out of range 0.." + std::to_string(n - 1));
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    LabelKind this_kind = LabelKind::none;
    int label = 0;
    if (tok.size() == 3) {
      if (tok[2] == "+") {
        this_kind = LabelKind::sign;
        label = 1;
      } else if (tok[2] == "-") {
        this_kind = LabelKind::sign;
        label = -1;
      } else {
        long long c = 0;
        if (!to_int(tok[2], c) || c < 1) throw ParseError(line_no, "edge label must be +, - or a color >= 1");
        this_kind = LabelKind::color;
        label = static_cast<int>(c);
      }
    }
    if (kind == LabelKind::unknown) kind = this_kind;
    if (kind != this_kind) throw ParseError(line_no, "edge labels are mixed");
    const Edge e = Edge::make(static_cast<Vertex>(a), static_cast<Vertex>(b));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == e) {
        throw ParseError(line_no, "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                      "), first given on line " + std::to_string(edge_lines[i]));
      }
    }
    edges.push_back(e);
    labels.push_back(label);
    edge_lines.push_back(line_no);
  }
  if (n < 0) throw ParseError(0, "missing header 'n m'");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " edges but " + std::to_string(edges.size()) +
                            " were given");
  }
  out.graph = Graph(static_cast<int>(n), std::move(edges));
  if (kind == LabelKind::sign) {
    out.signing = Signing(labels);
  } else if (kind == LabelKind::color) {
    int r = 1;
    for (int c : labels) r = std::max(r, c);
    if (declared_r) {
      if (*declared_r < r) throw ParseError(0, "color exceeds declared color count");
      r = *declared_r;
    }
    out.coloring = EdgeColoring(r, labels);
  }
  return out;
}

Graph parse_graph(std::string_view text) { return parse_labeled_graph(text).graph; }

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);
  std::size_t i = 0;
  auto next = [&]() -> int {
    if (i >= line.size()) throw ParseError(0, "graph6 string truncated");
    const int c = static_cast<unsigned char>(line[i++]);
    if (c < 63 || c > 126) throw ParseError(0, "graph6 byte outside 63..126");
    return c - 63;
  };
  long long n = 0;
  if (!line.empty() && line[0] == '~') {
    ++i;
    if (line.size() > 1 && line[1] == '~') {
      ++i;
      for (int k = 0; k < 6; ++k) n = (n << 6) | next();
    } else {
      for (int k = 0; k < 3; ++k) n = (n << 6) | next();
    }
  } else {
    n = next();
  }
  std::vector<Edge> edges;
  int bits = 0, word = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        word = next();
        bits = 6;
      }
      --bits;
      if ((word >> bits) & 1) edges.push_back(Edge{u, v});
    }
  }
  if (i != line.size()) throw ParseError(0, "trailing bytes after graph6 data");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::vector<Graph> parse_graph6_corpus(std::string_view text) {
  std::vector<Graph> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

namespace {

std::string emit_with(const Graph& g, const std::vector<std::string>& comments,
                      const std::vector<std::string>& labels) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << g.order() << ' ' << g.size() << '\n';
  for (EdgeId e = 0; e < g.size(); ++e) {
    os << g.edge(e).u << ' ' << g.edge(e).v;
    if (!labels.empty()) os << ' ' << labels[e];
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string emit_graph(const Graph& g, const std::vector<std::string>& comments) {
  return emit_with(g, comments, {});
}

std::string emit_signed(const Graph& g, const Signing& s, const std::vector<std::string>& comments) {
  s.check_for(g);
  std::vector<std::string> labels;
  for (int x : s.values()) labels.push_back(x > 0 ? "+" : "-");
  return emit_with(g, comments, labels);
}

std::string emit_colored(const Graph& g, const EdgeColoring& c, const std::vector<std::string>& comments) {
  c.check_for(g);
  std::vector<std::string> all{"colors: " + std::to_string(c.colors_count())};
  all.insert(all.end(), comments.begin(), comments.end());
  std::vector<std::string> labels;
  for (int x : c.values()) labels.push_back(std::to_string(x));
  return emit_with(g, all, labels);
}

LabeledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string_view first = trim(std::string_view(text).substr(0, text.find('\n')));
  const bool graph6 = first.rfind(">>graph6<<", 0) == 0 ||
                      (!first.empty() && first.find(' ') == std::string_view::npos && first[0] != '#' &&
                       !(first[0] >= '0' && first[0] <= '9'));
  if (graph6) return LabeledGraph{parse_graph6(first), std::nullopt, std::nullopt, {}};
  return parse_labeled_graph(text);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

}  // namespace sgw
