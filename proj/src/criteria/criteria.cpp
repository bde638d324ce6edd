#include "sgw/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "sgw/canceling.hpp"
#include "sgw/constructions.hpp"
#include "sgw/errors.hpp"
#include "sgw/extremal.hpp"
#include "sgw/families.hpp"
#include "sgw/path_engine.hpp"
#include "sgw/testing/oracles.hpp"
#include "sgw/wiener.hpp"

namespace sgw {
namespace {

// Collects the first failed requirement and free-form measurements.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
    pass_ = pass_ && ok;
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool pass() const { return pass_; }
  std::string detail() const {
    std::string out;
    if (!failure_.empty()) out = "FIRST FAILURE: " + failure_;
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  bool pass_ = true;
  std::string failure_;
  std::vector<std::string> notes_;
};

std::string str(int v) { return std::to_string(v); }

std::uint64_t pow2(std::size_t e) { return std::uint64_t{1} << e; }

SearchOptions unfiltered() {
  SearchOptions opt;
  opt.use_filter = false;
  return opt;
}

void square_paths(Tally& t) {
  for (int n : {5, 7, 8, 9, 10, 11, 12}) {
    const auto w = square_path_signing(n);
    const auto wiener = wiener_signed(w.graph, *w.signing);
    t.require(wiener == ExtendedCount(0), "W(P_" + str(n) + "^2) = " + wiener.to_string());
    t.require(certify(w).claim_holds, "certification of P_" + str(n) + "^2");
  }
  const auto w6 = square_path_signing(6);
  const auto pairs = noncanceling_pairs(w6.graph, w6.labelling());
  t.require(pairs == std::vector<std::pair<Vertex, Vertex>>{{0, 5}}, "P_6^2 failing pairs differ from {(0,5)}");
  t.require(certify(w6).claim_holds, "P_6^2 exceptional-pair claim");
  t.note("W = 0 for n in {5,7..12}; P_6^2 fails only at (v1,v6)");
}

void complete_cyclic(Tally& t) {
  for (int n = 5; n <= 10; ++n) {
    t.require(certify(complete_cyclic_signing(n)).claim_holds, "cyclic signing of K_" + str(n) + " not 2-canceling");
  }
  const auto k4 = find_k_canceling_signing(complete_graph(4), 2, unfiltered());
  t.require(!k4.found, "K_4 has a 2-canceling signing");
  t.require(k4.examined == pow2(5), "K_4 search examined " + std::to_string(k4.examined));
  t.note("K_5..K_10 certified; K_4 refuted over " + std::to_string(k4.examined) + " signings (x2 by negation)");
}

void special_searches(Tally& t) {
  for (const auto& [tag, host] : std::vector<std::pair<std::string, Graph>>{{"c7sq", square(cycle_graph(7))},
                                                                           {"p6sq", square(path_graph(6))}}) {
    const auto w = search_special_witness(tag);
    t.require(w.graph == host, tag + " host graph");
    t.require(certify(w).claim_holds, tag + " witness does not certify");
  }
  t.note("C_7^2 2-canceling and P_6^2 canceling witnesses found and certified");
}

void exhaustive_small_graphs(Tally& t) {
  for (int n = 2; n <= 6; ++n) {
    int canceling = 0;
    bool tight = false;
    for (const Graph& g : enumerate_graphs(n, true)) {
      const auto res = find_k_canceling_signing(g, 1, unfiltered());
      if (!res.found) continue;
      ++canceling;
      t.require(is_k_canceling_signing(g, *res.signing, 1).holds, "search witness fails certification");
      const auto nec = necessary_conditions(g, 1);
      t.require(nec.pass(), "canceling graph on " + str(n) + " vertices violates a necessary condition");
      const auto rep = structural_report(g);
      if (rep.min_degree == 2 && rep.edge_count == static_cast<std::size_t>(n + 2)) tight = true;
    }
    if (n >= 5) t.require(tight, "no tight canceling graph on " + str(n) + " vertices");
    t.note("n=" + str(n) + ": " + str(canceling) + " canceling");
  }
}

void theta_graphs(Tally& t) {
  int checked = 0;
  auto check = [&](const std::vector<int>& lengths) {
    const Graph g = theta_graph(lengths);
    ++checked;
    t.require(!find_k_canceling_signing(g, 1, unfiltered()).found, "a theta graph with t <= 3 is canceling");
    t.require(theta_verdict(g) == std::optional<bool>(false), "theta recognizer disagrees");
  };
  for (int a = 1; a <= 10; ++a) {
    for (int b = std::max(a, 2); a + b <= 10; ++b) {
      check({a, b});
      for (int c = b; a + b + c <= 10; ++c) check({a, b, c});
    }
  }
  const auto w = special_witness("theta4");
  const auto dec = theta_recognize(w.graph);
  t.require(dec && dec->t == 4, "stored t=4 witness is not a theta graph with four paths");
  t.require(certify(w).claim_holds, "t=4 witness does not certify");
  t.note(str(checked) + " theta graphs with t <= 3 refuted; t=4 witness certified");
}

void subdivision_chain(Tally& t) {
  const auto even = special_witness("g_small_even");
  const auto odd = special_witness("g_small_odd");
  for (int n = 5; n <= 10; ++n) {
    const auto& seed = n % 2 == 0 ? even : odd;
    const int i = (n - seed.graph.order()) / 2;
    const auto w = subdivision_extend(seed, *seed.designated_edge, i);
    const auto rep = structural_report(w.graph);
    t.require(w.graph.order() == n, "chain order " + str(w.graph.order()) + " != " + str(n));
    t.require(rep.edge_count == static_cast<std::size_t>(n + 2), "n=" + str(n) + " edge count");
    t.require(rep.min_degree == 2, "n=" + str(n) + " minimum degree");
    t.require(certify(w).claim_holds, "n=" + str(n) + " subdivision does not certify");
  }
  t.note("canceling graphs with n+2 edges and minimum degree 2 for n=5..10");
}

void clique_and_blowup(Tally& t) {
  const auto k6 = bipartite_clique_signing(complete_bipartite_graph(3, 3), {0, 1, 2}, {3, 4, 5}, 1);
  const auto k8 = bipartite_clique_signing(complete_bipartite_graph(4, 4), {0, 1, 2, 3}, {4, 5, 6, 7}, 2);
  t.require(k6.graph.size() == 15 && k8.graph.size() == 28, "clique constructions are not complete graphs");
  t.require(certify(k6).claim_holds, "K_6 (k=1) does not certify");
  t.require(certify(k8).claim_holds, "K_8 (k=2) does not certify");
  t.require(certify(blowup_cycle_signing({2, 2, 2}, 1)).claim_holds, "blowup (2,2,2) does not certify");
  t.require(certify(blowup_cycle_signing({4, 4, 4}, 2)).claim_holds, "blowup (4,4,4) with k=2 does not certify");
  t.note("K_6, K_8, C_3[2,2,2], C_3[4,4,4] certified");
}

void colored_complete(Tally& t) {
  t.require(certify(complete_rk_coloring(6, 3, 2)).claim_holds, "K_6 (3,2) coloring does not certify");
  t.require(certify(complete_rk_coloring(12, 3, 3)).claim_holds, "K_12 (3,3) coloring does not certify");
  t.note("K_6 (3,2) and K_12 (3,3) certified");
}

void thresholds(Tally& t) {
  struct Case {
    int k;
    int expected;
    std::vector<int> negatives;
  };
  for (const Case& c : {Case{1, 4, {3}}, Case{2, 5, {4}}, Case{3, 7, {5, 6}}}) {
    // K_8 has 27 free edges; each row stops at its first witness.
    SearchOptions opt;
    opt.max_free_edges = 27;
    const auto rows = threshold_scan(2, c.k, 2, 8, opt);
    const auto stable = stable_threshold(rows);
    t.require(stable == c.expected, "k=" + str(c.k) + " threshold " + (stable ? str(*stable) : "none"));
    for (int n : c.negatives) {
      const auto& row = rows[n - 2];
      t.require(!row.holds, "K_" + str(n) + " unexpectedly " + str(c.k) + "-canceling");
      t.require(row.examined == pow2(n * (n - 1) / 2 - 1), "K_" + str(n) + " search not exhaustive");
    }
    for (const auto& row : rows) {
      if (row.holds) {
        t.require(is_k_canceling_signing_literal(complete_graph(row.n), *row.signing, c.k).holds,
                  "threshold witness fails certification");
      }
    }
    t.note("n_{2," + str(c.k) + "}=" + (stable ? str(*stable) : "none"));
  }
}

void conjectures(Tally& t) {
  std::optional<int> star_fails;
  for (int n = 1; n <= 9; ++n) {
    t.require(verify_tree_sandwich(n).holds(), "tree sandwich fails at n=" + str(n));
    if (n < 2) continue;
    const auto ds = verify_double_star(n);
    t.require(ds.holds(), "double-star bound fails at n=" + str(n));
    if (!ds.star_only_holds && !star_fails) star_fails = n;
  }
  t.require(star_fails.has_value(), "star-only bound never fails for n <= 9");
  t.note("both hold for n <= 9; star-only bound first fails at n=" + (star_fails ? str(*star_fails) : "none"));
}

void soltes(Tally& t) {
  t.require(soltes_check_classical(cycle_graph(11)).holds, "C_11 fails");
  for (int n : {5, 6, 7, 8, 9, 10, 12, 13}) {
    t.require(!soltes_check_classical(cycle_graph(n)).holds, "C_" + str(n) + " passes");
  }
  t.note("C_11 only");
}

bool engine_matches_naive(const Graph& g, const Signing& s) {
  const auto matrix = signed_distance_matrix(g, s);
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto row = oracle::naive_distance_row(g, s, u);
    for (Vertex v = 0; v < g.order(); ++v) {
      const ExtendedCount expect = row[v] ? ExtendedCount(*row[v]) : ExtendedCount::infinite();
      if (matrix[u][v] != expect) return false;
    }
  }
  return true;
}

void properties(Tally& t) {
  std::mt19937_64 rng(20240601);
  std::size_t compared = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const auto m = g.size();
      const Signing random = oracle::random_signing(m, rng);
      t.require(engine_matches_naive(g, random), "engine and naive paths disagree on n=" + str(n));
      ++compared;
      if (n <= 7) {
        const Signing plus = Signing::constant(m);
        t.require(wiener_signed(g, plus) == wiener_classical(g), "constant signing differs from classical");
        t.require(engine_matches_naive(g, random.negated()), "engine and naive disagree after negation");
        compared += 1;
      }
    }
  }
  t.note(std::to_string(compared) + " graph/signing pairs match the naive oracle for every n <= 8 graph");

  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 6;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const Signing s = oracle::random_signing(g.size(), rng);
    const auto rep = structural_report(g);
    const auto matrix = signed_distance_matrix(g, s);
    t.require(matrix == signed_distance_matrix(g, s.negated()), "negation changes a distance");
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const auto d = signed_distance(g, s, u, v);
        if (d.value.is_infinite()) continue;
        const auto& p = *d.witness;
        t.require(p.is_valid(g, u, v), "distance witness is not a uv-path");
        const int sum = p.signed_sum(g, s);
        t.require(static_cast<std::uint64_t>(std::abs(sum)) == d.value.value(), "witness sum differs");
        t.require((p.vertices.size() - 1) % 2 == d.value.value() % 2, "parity of |sigma(P)| and |P| differ");
        if (rep.bipartite) {
          const bool across = std::count(rep.part_u.begin(), rep.part_u.end(), u) !=
                              std::count(rep.part_u.begin(), rep.part_u.end(), v);
          t.require(d.value.value() % 2 == (across ? 1u : 0u), "bipartite parity");
        }
      }
    }
    std::vector<Vertex> del;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) del.push_back(v);
    const auto sub = delete_vertices(g, VertexSet(del));
    const auto sub_matrix = signed_distance_matrix(sub.graph, restrict_signing(s, sub));
    for (Vertex a = 0; a < sub.graph.order(); ++a) {
      for (Vertex b = 0; b < sub.graph.order(); ++b) {
        t.require(sub_matrix[a][b] >= matrix[sub.new_to_old[a]][sub.new_to_old[b]], "deletion lowered a distance");
      }
    }
  }
  t.note("parity, negation, deletion monotonicity on 300 random instances");

  // Exact-size subsets against every size below k, on witnesses and random
  // signings of the same graphs.
  std::vector<std::pair<SignedWitness, int>> seeds;
  for (int n = 5; n <= 8; ++n) seeds.push_back({complete_cyclic_signing(n), 2});
  seeds.push_back({special_witness("c7sq"), 2});
  seeds.push_back({special_witness("p6sq"), 1});
  seeds.push_back({bipartite_clique_signing(complete_bipartite_graph(4, 4), {0, 1, 2, 3}, {4, 5, 6, 7}, 2), 2});
  seeds.push_back({blowup_cycle_signing({4, 4, 4}, 2), 2});
  int agreements = 0;
  for (const auto& [w, k] : seeds) {
    for (int kk = 1; kk <= std::min(k + 1, w.graph.order() - 1); ++kk) {
      for (int rep = 0; rep < 4; ++rep) {
        const Signing s = rep == 0 ? *w.signing : oracle::random_signing(w.graph.size(), rng);
        const bool exact = is_k_canceling_signing(w.graph, s, kk).holds;
        t.require(exact == is_k_canceling_signing_literal(w.graph, s, kk).holds, "exact-size shortcut disagrees");
        if (w.graph.order() <= 8) {
          t.require(exact == oracle::naive_is_k_canceling(w.graph, s, kk), "shortcut disagrees with naive check");
        }
        ++agreements;
      }
    }
    // Adding edges with arbitrary signs to a k-canceling spanning subgraph.
    for (int rep = 0; rep < 3; ++rep) {
      auto edges = w.graph.edges();
      auto signs = w.signing->values();
      for (Vertex a = 0; a < w.graph.order(); ++a) {
        for (Vertex b = a + 1; b < w.graph.order(); ++b) {
          if (!w.graph.adjacent(a, b) && rng() % 2 == 0) {
            edges.push_back({a, b});
            signs.push_back(rng() % 2 == 0 ? 1 : -1);
          }
        }
      }
      const Graph super(w.graph.order(), edges);
      t.require(is_k_canceling_signing(super, Signing(signs), k).holds, "spanning supergraph loses cancelation");
    }
  }
  t.note(str(agreements) + " shortcut/literal/naive agreements; supergraph extensions stay canceling");
}

struct Entry {
  const char* title;
  std::function<void(Tally&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {"square-path signings cancel, P_6^2 fails only at its end pair", square_paths},
      {"cyclic signing of K_n is 2-canceling for n=5..10, K_4 is not", complete_cyclic},
      {"searched C_7^2 and P_6^2 witnesses certify", special_searches},
      {"every canceling connected graph on n <= 6 vertices meets the necessary conditions", exhaustive_small_graphs},
      {"theta graphs with t <= 3 never cancel, the t=4 witness does", theta_graphs},
      {"subdivision chain gives tight canceling graphs for n=5..10", subdivision_chain},
      {"bipartite-clique and cycle-blowup signings certify", clique_and_blowup},
      {"3-colorings of K_6 (k=2) and K_12 (k=3) certify", colored_complete},
      {"signed thresholds n_{2,1}=4, n_{2,2}=5, n_{2,3}=7", thresholds},
      {"tree sandwich and double-star bounds for n <= 9, star-only bound refuted", conjectures},
      {"C_11 is the only cycle with W(G) = W(G - v) among n=5..13", soltes},
      {"property suites and engine-vs-naive equivalence on all graphs n <= 8", properties},
  };
  return table;
}

}  // namespace

std::string criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) throw PreconditionError("no criterion " + std::to_string(id));
  return entries()[id - 1].title;
}

CriterionResult run_criterion(int id) {
  CriterionResult r;
  r.id = id;
  r.title = criterion_title(id);
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    entries()[id - 1].run(t);
  } catch (const std::exception& e) {
    t.require(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = t.pass();
  r.detail = t.detail();
  return r;
}

std::vector<std::string> suite_names() { return {"paper-core", "paper-exhaustive", "conjectures"}; }

std::vector<int> suite_criteria(std::string_view suite) {
  if (suite == "paper-core") return {1, 2, 3, 5, 6, 7, 8, 11, 12};
  if (suite == "paper-exhaustive") return {4, 9};
  if (suite == "conjectures") return {10};
  throw PreconditionError("unknown suite '" + std::string(suite) + "'");
}

void to_json(Json& j, const CriterionResult& r) {
  j = Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}};
}

void from_json(const Json& j, CriterionResult& r) {
  j.at("id").get_to(r.id);
  j.at("title").get_to(r.title);
  j.at("pass").get_to(r.pass);
  j.at("detail").get_to(r.detail);
  j.at("seconds").get_to(r.seconds);
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f s", r.seconds);
  return "criterion " + std::to_string(r.id) + ": " + (r.pass ? "PASS" : "FAIL") + "  " + r.title + "  (" + r.detail +
         ", " + secs + ")";
}

}  // namespace sgw
