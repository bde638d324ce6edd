#include "sgw/report.hpp"

#include "sgw/errors.hpp"

namespace sgw {
namespace {

template <class T>
void put(Json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? Json(*v) : Json(nullptr);
}

template <class T>
void take(const Json& j, const char* key, std::optional<T>& v) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    v.reset();
  } else {
    v = it->template get<T>();
  }
}

}  // namespace

void to_json(Json& j, const Edge& e) { j = Json::array({e.u, e.v}); }
void from_json(const Json& j, Edge& e) {
  if (!j.is_array() || j.size() != 2) throw ParseError(0, "edge must be a pair");
  e = Edge{j[0].get<Vertex>(), j[1].get<Vertex>()};
}

void to_json(Json& j, const Graph& g) { j = Json{{"n", g.order()}, {"edges", g.edges()}}; }
void from_json(const Json& j, Graph& g) { g = Graph(j.at("n").get<int>(), j.at("edges").get<std::vector<Edge>>()); }

void to_json(Json& j, const Signing& s) {
  std::string text;
  for (int x : s.values()) text += x > 0 ? '+' : '-';
  j = text;
}
void from_json(const Json& j, Signing& s) {
  std::vector<int> signs;
  for (char c : j.get<std::string>()) {
    if (c != '+' && c != '-') throw ParseError(0, std::string("bad sign '") + c + "'");
    signs.push_back(c == '+' ? 1 : -1);
  }
  s = Signing(std::move(signs));
}

void to_json(Json& j, const EdgeColoring& c) { j = Json{{"r", c.colors_count()}, {"colors", c.values()}}; }
void from_json(const Json& j, EdgeColoring& c) {
  c = EdgeColoring(j.at("r").get<int>(), j.at("colors").get<std::vector<int>>());
}

void to_json(Json& j, const ExtendedCount& x) {
  if (x.is_infinite()) {
    j = "inf";
  } else {
    j = x.value();
  }
}
void from_json(const Json& j, ExtendedCount& x) {
  x = j.is_string() ? ExtendedCount::parse(j.get<std::string>()) : ExtendedCount(j.get<std::uint64_t>());
}

void to_json(Json& j, const VertexSet& s) { j = s.members(); }
void from_json(const Json& j, VertexSet& s) { s = VertexSet(j.get<std::vector<Vertex>>()); }

void to_json(Json& j, const PathWitness& p) { j = p.vertices; }
void from_json(const Json& j, PathWitness& p) { p.vertices = j.get<std::vector<Vertex>>(); }

void to_json(Json& j, const DistanceResult& r) {
  j = Json{{"value", r.value}};
  put(j, "path", r.witness);
}
void from_json(const Json& j, DistanceResult& r) {
  r.value = j.at("value").get<ExtendedCount>();
  take(j, "path", r.witness);
}

void to_json(Json& j, const StructuralReport& r) {
  j = Json{{"connected", r.connected},       {"bipartite", r.bipartite},   {"part_u", r.part_u},
           {"part_v", r.part_v},             {"has_odd_cycle", r.has_odd_cycle}, {"min_degree", r.min_degree},
           {"edge_count", r.edge_count},     {"leaf_count", r.leaf_count}};
}
void from_json(const Json& j, StructuralReport& r) {
  j.at("connected").get_to(r.connected);
  j.at("bipartite").get_to(r.bipartite);
  j.at("part_u").get_to(r.part_u);
  j.at("part_v").get_to(r.part_v);
  j.at("has_odd_cycle").get_to(r.has_odd_cycle);
  j.at("min_degree").get_to(r.min_degree);
  j.at("edge_count").get_to(r.edge_count);
  j.at("leaf_count").get_to(r.leaf_count);
}

void to_json(Json& j, const FailureCertificate& c) { j = Json{{"deleted", c.deleted}, {"u", c.u}, {"v", c.v}}; }
void from_json(const Json& j, FailureCertificate& c) {
  j.at("deleted").get_to(c.deleted);
  j.at("u").get_to(c.u);
  j.at("v").get_to(c.v);
}

void to_json(Json& j, const PairWitness& w) {
  j = Json{{"deleted", w.deleted}, {"u", w.u}, {"v", w.v}, {"path", w.path}};
}
void from_json(const Json& j, PairWitness& w) {
  j.at("deleted").get_to(w.deleted);
  j.at("u").get_to(w.u);
  j.at("v").get_to(w.v);
  j.at("path").get_to(w.path);
}

void to_json(Json& j, const CancelingVerdict& v) {
  j = Json{{"holds", v.holds}};
  put(j, "failure", v.failure);
  if (!v.witnesses.empty()) j["witnesses"] = v.witnesses;
}
void from_json(const Json& j, CancelingVerdict& v) {
  j.at("holds").get_to(v.holds);
  take(j, "failure", v.failure);
  v.witnesses = j.value("witnesses", std::vector<PairWitness>{});
}

void to_json(Json& j, const NecessaryReport& r) {
  j = Json{{"k", r.k},
           {"pass", r.pass()},
           {"k_connected", r.k_connected},
           {"odd_cycle", r.odd_cycle},
           {"min_degree_ok", r.min_degree_ok},
           {"edge_count_ok", r.edge_count_ok},
           {"min_degree", r.min_degree},
           {"required_min_degree", r.required_min_degree},
           {"edge_count", r.edge_count},
           {"required_edges", r.required_edges},
           {"failures", r.failures()}};
}
void from_json(const Json& j, NecessaryReport& r) {
  j.at("k").get_to(r.k);
  j.at("k_connected").get_to(r.k_connected);
  j.at("odd_cycle").get_to(r.odd_cycle);
  j.at("min_degree_ok").get_to(r.min_degree_ok);
  j.at("edge_count_ok").get_to(r.edge_count_ok);
  j.at("min_degree").get_to(r.min_degree);
  j.at("required_min_degree").get_to(r.required_min_degree);
  j.at("edge_count").get_to(r.edge_count);
  j.at("required_edges").get_to(r.required_edges);
}

void to_json(Json& j, const SoltesReport& r) { j = Json{{"holds", r.holds}, {"whole", r.whole}, {"deleted", r.deleted}}; }
void from_json(const Json& j, SoltesReport& r) {
  j.at("holds").get_to(r.holds);
  j.at("whole").get_to(r.whole);
  j.at("deleted").get_to(r.deleted);
}

void to_json(Json& j, const SearchResult& r) {
  j = Json{{"found", r.found},
           {"examined", r.examined},
           {"symmetry_factor", r.symmetry_factor},
           {"rejected_by_filter", r.rejected_by_filter},
           {"filter_reasons", r.filter_reasons}};
  put(j, "signing", r.signing);
  put(j, "coloring", r.coloring);
}
void from_json(const Json& j, SearchResult& r) {
  j.at("found").get_to(r.found);
  j.at("examined").get_to(r.examined);
  j.at("symmetry_factor").get_to(r.symmetry_factor);
  j.at("rejected_by_filter").get_to(r.rejected_by_filter);
  j.at("filter_reasons").get_to(r.filter_reasons);
  take(j, "signing", r.signing);
  take(j, "coloring", r.coloring);
}

void to_json(Json& j, const MinWienerResult& r) {
  j = Json{{"value", r.value}, {"examined", r.examined}};
  put(j, "argmin", r.argmin);
}
void from_json(const Json& j, MinWienerResult& r) {
  j.at("value").get_to(r.value);
  j.at("examined").get_to(r.examined);
  take(j, "argmin", r.argmin);
}

void to_json(Json& j, const ThresholdRow& r) {
  j = Json{{"n", r.n}, {"holds", r.holds}, {"examined", r.examined}};
  put(j, "signing", r.signing);
  put(j, "coloring", r.coloring);
}
void from_json(const Json& j, ThresholdRow& r) {
  j.at("n").get_to(r.n);
  j.at("holds").get_to(r.holds);
  j.at("examined").get_to(r.examined);
  take(j, "signing", r.signing);
  take(j, "coloring", r.coloring);
}

void to_json(Json& j, const SignedTreeInstance& t) {
  j = Json{{"tree", t.tree}, {"signing", t.signing}, {"value", t.value}};
}
void from_json(const Json& j, SignedTreeInstance& t) {
  j.at("tree").get_to(t.tree);
  j.at("signing").get_to(t.signing);
  j.at("value").get_to(t.value);
}

void to_json(Json& j, const SandwichReport& r) {
  j = Json{{"n", r.n},
           {"holds", r.holds()},
           {"trees", r.trees},
           {"lower_anchor", r.lower_anchor},
           {"upper_anchor", r.upper_anchor},
           {"observed_min", r.observed_min},
           {"observed_max", r.observed_max},
           {"lower_holds", r.lower_holds},
           {"upper_holds", r.upper_holds}};
  put(j, "lower_counterexample", r.lower_counterexample);
  put(j, "upper_counterexample", r.upper_counterexample);
}
void from_json(const Json& j, SandwichReport& r) {
  j.at("n").get_to(r.n);
  j.at("trees").get_to(r.trees);
  j.at("lower_anchor").get_to(r.lower_anchor);
  j.at("upper_anchor").get_to(r.upper_anchor);
  j.at("observed_min").get_to(r.observed_min);
  j.at("observed_max").get_to(r.observed_max);
  j.at("lower_holds").get_to(r.lower_holds);
  j.at("upper_holds").get_to(r.upper_holds);
  take(j, "lower_counterexample", r.lower_counterexample);
  take(j, "upper_counterexample", r.upper_counterexample);
}

void to_json(Json& j, const DoubleStarReport& r) {
  j = Json{{"n", r.n},
           {"holds", r.holds()},
           {"trees", r.trees},
           {"path_min", r.path_min},
           {"double_star_max", r.double_star_max},
           {"adjacent_max", r.adjacent_max},
           {"best_a", r.best_a},
           {"best_b", r.best_b},
           {"star_value", r.star_value},
           {"tree_max", r.tree_max},
           {"lower_holds", r.lower_holds},
           {"upper_holds", r.upper_holds},
           {"star_only_holds", r.star_only_holds}};
  put(j, "best_double_star", r.best_double_star);
  put(j, "counterexample", r.counterexample);
  put(j, "star_counterexample", r.star_counterexample);
}
void from_json(const Json& j, DoubleStarReport& r) {
  j.at("n").get_to(r.n);
  j.at("trees").get_to(r.trees);
  j.at("path_min").get_to(r.path_min);
  j.at("double_star_max").get_to(r.double_star_max);
  j.at("adjacent_max").get_to(r.adjacent_max);
  j.at("best_a").get_to(r.best_a);
  j.at("best_b").get_to(r.best_b);
  j.at("star_value").get_to(r.star_value);
  j.at("tree_max").get_to(r.tree_max);
  j.at("lower_holds").get_to(r.lower_holds);
  j.at("upper_holds").get_to(r.upper_holds);
  j.at("star_only_holds").get_to(r.star_only_holds);
  take(j, "best_double_star", r.best_double_star);
  take(j, "counterexample", r.counterexample);
  take(j, "star_counterexample", r.star_counterexample);
}

void to_json(Json& j, const DyckRecord& r) {
  j = Json{{"steps", r.steps}, {"signing", r.signing}, {"wiener", r.wiener}};
}
void from_json(const Json& j, DyckRecord& r) {
  j.at("steps").get_to(r.steps);
  j.at("signing").get_to(r.signing);
  j.at("wiener").get_to(r.wiener);
}

std::string json_line(const Json& j) { return j.dump() + '\n'; }

std::vector<Json> parse_json_lines(std::string_view text) {
  std::vector<Json> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

}  // namespace sgw
