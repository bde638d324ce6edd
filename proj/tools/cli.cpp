#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "sgw/canceling.hpp"
#include "sgw/constructions.hpp"
#include "sgw/criteria.hpp"
#include "sgw/errors.hpp"
#include "sgw/extremal.hpp"
#include "sgw/families.hpp"
#include "sgw/graph_io.hpp"
#include "sgw/parallel.hpp"
#include "sgw/path_engine.hpp"
#include "sgw/report.hpp"
#include "sgw/wiener.hpp"

namespace sgw {
namespace {

struct InputOptions {
  std::string file;
  std::string family;
  std::string fixture;
  std::string signing;
  std::string coloring;
};

struct Loaded {
  Graph graph;
  std::optional<Signing> signing;
  std::optional<EdgeColoring> coloring;
  std::string label;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--file", in.file, "graph file: native edge list, or graph6 when the name ends in .g6");
  cmd->add_option("--family", in.family, "named family, e.g. cycle:11, blowup:2,2,2, theta:1,2,2,3");
  cmd->add_option("--fixture", in.fixture, "construction spec, e.g. complete-cyclic:5 or c7sq");
  cmd->add_option("--signing", in.signing, "edge signs in edge order, e.g. +-+-");
  cmd->add_option("--coloring", in.coloring, "edge colors in edge order, e.g. 1,2,3");
}

Signing parse_sign_string(const std::string& text) {
  std::vector<int> s;
  for (char c : text) {
    if (c != '+' && c != '-') throw PreconditionError(std::string("bad sign character '") + c + "'");
    s.push_back(c == '+' ? 1 : -1);
  }
  return Signing(std::move(s));
}

EdgeColoring parse_color_list(const std::string& text) {
  std::vector<int> colors;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      colors.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw PreconditionError("bad color '" + tok + "'");
    }
  }
  const int r = colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end());
  return EdgeColoring(std::max(r, 1), std::move(colors));
}

Loaded load_input(const InputOptions& in) {
  const int sources = !in.file.empty() + !in.family.empty() + !in.fixture.empty();
  if (sources != 1) throw CLI::ValidationError("input", "give exactly one of --file, --family, --fixture");
  Loaded out;
  if (!in.file.empty()) {
    out.label = in.file;
    if (in.file.size() > 3 && in.file.ends_with(".g6")) {
      std::ifstream f(in.file);
      if (!f) throw Error("cannot open " + in.file);
      std::string line;
      std::getline(f, line);
      out.graph = parse_graph6(line);
    } else {
      auto lg = read_graph_file(in.file);
      out.graph = std::move(lg.graph);
      out.signing = std::move(lg.signing);
      out.coloring = std::move(lg.coloring);
    }
  } else if (!in.family.empty()) {
    out.label = in.family;
    out.graph = make_family(parse_family_spec(in.family));
  } else {
    auto w = named_witness(in.fixture);
    out.label = w.name;
    out.graph = std::move(w.graph);
    out.signing = std::move(w.signing);
    out.coloring = std::move(w.coloring);
  }
  if (!in.signing.empty()) out.signing = parse_sign_string(in.signing);
  if (!in.coloring.empty()) out.coloring = parse_color_list(in.coloring);
  if (out.signing) out.signing->check_for(out.graph);
  if (out.coloring) out.coloring->check_for(out.graph);
  return out;
}

const Signing& need_signing(const Loaded& l) {
  if (!l.signing) throw PreconditionError("this command needs a signed graph (use --signing or a signed file)");
  return *l.signing;
}

std::string signs_text(const Signing& s) { return Json(s).get<std::string>(); }

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s.members()[i]);
  return out + "}";
}

void print_verdict(std::ostream& out, const CancelingVerdict& v) {
  if (v.holds) {
    out << "holds\n";
    for (const auto& w : v.witnesses) {
      out << "S=" << set_text(w.deleted) << " " << w.u << " " << w.v << ": " << w.path.to_string() << "\n";
    }
  } else {
    const auto& f = *v.failure;
    out << "fails: no canceling path between " << f.u << " and " << f.v << " in G - " << set_text(f.deleted) << "\n";
  }
}

struct Globals {
  bool json = false;
  int threads = 0;
  int max_n = 0;
  int max_edges = 0;
};

EngineLimits limits_of(const Globals& g) {
  EngineLimits lim;
  if (g.max_n > 0) {
    lim.max_signed_order = g.max_n;
    lim.max_colored_order = g.max_n;
  }
  return lim;
}

SearchOptions search_options(const Globals& g) {
  SearchOptions opt;
  opt.limits = limits_of(g);
  if (g.max_edges > 0) opt.max_free_edges = g.max_edges;
  return opt;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed and colored graph toolkit: signed distances, canceling labellings, searches", "sgw"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals glob;
  app.add_flag("--json", glob.json, "one JSON object per line instead of text");
  app.add_option("--threads", glob.threads, "worker threads (default: hardware)")->check(CLI::NonNegativeNumber);
  app.add_option("--max-n", glob.max_n, "raise the path-engine vertex guard")->check(CLI::PositiveNumber);
  app.add_option("--max-edges", glob.max_edges, "raise the search free-edge guard")->check(CLI::PositiveNumber);

  InputOptions in;
  int u = 0, v = 0, k = 1, r = 2;
  bool literal = false, witnesses = false, exact_size = false, no_filter = false, classical_only = false;
  bool signed_soltes = false, list_paths = false, list_forms = false;
  int n_from = 2, n_to = 2, n = 1;
  std::string conjecture, suite, emit, out_file, name;
  std::vector<std::string> params;

  auto* dist = app.add_subcommand("dist", "signed distance between two vertices");
  add_input_options(dist, in);
  dist->add_option("--u", u)->required();
  dist->add_option("--v", v)->required();

  auto* wiener = app.add_subcommand("wiener", "classical and signed Wiener index");
  add_input_options(wiener, in);
  wiener->add_flag("--classical", classical_only, "classical index only");

  auto* check = app.add_subcommand("check", "k-canceling verdict for a signing");
  add_input_options(check, in);
  check->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  check->add_flag("--literal", literal, "check every deleted-set size below k");
  check->add_flag("--witnesses", witnesses, "print a canceling path for every pair");

  auto* check_colored = app.add_subcommand("check-colored", "(r,k)-canceling verdict for a coloring");
  add_input_options(check_colored, in);
  check_colored->add_option("--r", r)->required()->check(CLI::Range(2, 64));
  check_colored->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  check_colored->add_flag("--exact-size", exact_size, "check only deleted sets of size k-1");
  check_colored->add_flag("--witnesses", witnesses, "print a canceling path for every pair");

  auto* filter = app.add_subcommand("filter", "necessary conditions for k-canceling");
  add_input_options(filter, in);
  filter->add_option("--k", k)->required()->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "emit a certified construction in fixture format");
  construct->add_option("name", name, "construction, e.g. square-path or square-path:7");
  construct->add_option("params", params, "parameters appended to the spec");
  construct->add_option("--out", out_file, "write the fixture to this file");
  construct->add_flag("--list", list_forms, "list the construction forms");

  auto* search = app.add_subcommand("search", "find a k-canceling signing or (r,k)-canceling coloring");
  add_input_options(search, in);
  search->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  search->add_option("--r", r, "colors (2 = signings)")->check(CLI::Range(2, 64));
  search->add_flag("--no-filter", no_filter, "skip the necessary-condition filter");
  search->add_option("--emit-witness", emit, "write the witness in fixture format");

  auto* min_wiener = app.add_subcommand("min-wiener", "minimum signed Wiener index over all signings");
  add_input_options(min_wiener, in);

  auto* threshold = app.add_subcommand("threshold", "per-n (r,k)-canceling verdicts for K_n");
  threshold->add_option("--r", r)->required()->check(CLI::Range(2, 64));
  threshold->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  threshold->add_option("--n-from", n_from)->required()->check(CLI::PositiveNumber);
  threshold->add_option("--n-to", n_to)->required()->check(CLI::PositiveNumber);

  auto* trees = app.add_subcommand("trees", "check a tree conjecture over every tree on n vertices");
  trees->add_option("--conjecture", conjecture)->required()->check(CLI::IsMember({"sandwich", "double-star"}));
  trees->add_option("--n", n)->required()->check(CLI::Range(1, 10));

  auto* dyck = app.add_subcommand("dyck", "signed Wiener distribution over Dyck paths");
  dyck->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  dyck->add_flag("--paths", list_paths, "list every path");

  auto* soltes = app.add_subcommand("soltes", "check W(G) = W(G - v) for every vertex v");
  add_input_options(soltes, in);
  soltes->add_flag("--signed", signed_soltes, "use the signed index");

  auto* reproduce = app.add_subcommand("reproduce", "run a reproduction suite");
  reproduce->add_option("suite", suite)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto emit_json = [&](const Json& j) { out << json_line(j); };

  try {
    if (glob.threads > 0) set_thread_count(glob.threads);
    if (glob.max_n > 0 || glob.max_edges > 0) err << "note: size guards raised; this may take a long time\n";
    const EngineLimits lim = limits_of(glob);

    if (*dist) {
      const auto l = load_input(in);
      const auto d = signed_distance(l.graph, need_signing(l), u, v, lim);
      if (glob.json) {
        emit_json(d);
      } else {
        out << "d(" << u << "," << v << ") = " << d.value << "\n";
        if (d.witness) out << "path: " << d.witness->to_string() << "\n";
      }
      return 0;
    }
    if (*wiener) {
      const auto l = load_input(in);
      const auto classical = wiener_classical(l.graph);
      std::optional<ExtendedCount> sw;
      if (!classical_only && l.signing) sw = wiener_signed(l.graph, *l.signing, lim);
      if (glob.json) {
        Json j{{"classical", classical}};
        if (sw) j["signed"] = *sw;
        emit_json(j);
      } else {
        out << "classical " << classical << "\n";
        if (sw) out << "signed " << *sw << "\n";
      }
      return 0;
    }
    if (*check) {
      const auto l = load_input(in);
      const auto& s = need_signing(l);
      CheckOptions opt;
      opt.limits = lim;
      opt.collect_witnesses = witnesses;
      const bool use_literal = literal || l.graph.order() <= k;
      const auto verdict = use_literal ? is_k_canceling_signing_literal(l.graph, s, k, opt)
                                       : is_k_canceling_signing(l.graph, s, k, opt);
      if (glob.json) {
        emit_json(verdict);
      } else {
        print_verdict(out, verdict);
      }
      return verdict.holds ? 0 : 1;
    }
    if (*check_colored) {
      const auto l = load_input(in);
      std::optional<EdgeColoring> c = l.coloring;
      if (!c && l.signing && r == 2) c = EdgeColoring::from_signing(*l.signing);
      if (!c) throw PreconditionError("this command needs a colored graph (use --coloring or a colored file)");
      if (c->colors_count() > r) throw PreconditionError("coloring uses more than r colors");
      const EdgeColoring colored(r, c->values());
      CheckOptions opt;
      opt.limits = lim;
      opt.collect_witnesses = witnesses;
      const auto verdict = is_rk_canceling_coloring(
          l.graph, colored, k, exact_size ? SubsetSizes::exactly_k_minus_1 : SubsetSizes::all_below_k, opt);
      if (glob.json) {
        emit_json(verdict);
      } else {
        print_verdict(out, verdict);
      }
      return verdict.holds ? 0 : 1;
    }
    if (*filter) {
      const auto l = load_input(in);
      const auto rep = necessary_conditions(l.graph, k);
      if (glob.json) {
        emit_json(rep);
      } else if (rep.pass()) {
        out << "pass\n";
      } else {
        for (const auto& f : rep.failures()) out << f << "\n";
      }
      return rep.pass() ? 0 : 1;
    }
    if (*construct) {
      if (list_forms) {
        for (const auto& f : named_witness_forms()) out << f << "\n";
        return 0;
      }
      if (name.empty()) throw CLI::ValidationError("construct", "needs a construction name (see --list)");
      std::string spec = name;
      for (std::size_t i = 0; i < params.size(); ++i) spec += (i == 0 && name.find(':') == std::string::npos ? ":" : ",") + params[i];
      const auto w = named_witness(spec);
      CheckOptions opt;
      opt.limits = lim;
      const auto cert = certify(w, opt);
      const std::string text = to_fixture_text(w);
      if (!out_file.empty()) write_text_file(out_file, text);
      if (glob.json) {
        Json j{{"name", w.name}, {"graph", w.graph}, {"claim_holds", cert.claim_holds}, {"verdict", cert.verdict}};
        if (w.signing) j["signing"] = *w.signing;
        if (w.coloring) j["coloring"] = *w.coloring;
        emit_json(j);
      } else if (out_file.empty()) {
        out << text;
      }
      if (!cert.claim_holds) err << "claim does not hold for " << w.name << "\n";
      return cert.claim_holds ? 0 : 1;
    }
    if (*search) {
      const auto l = load_input(in);
      auto opt = search_options(glob);
      opt.use_filter = !no_filter;
      const auto res = r == 2 ? find_k_canceling_signing(l.graph, k, opt) : find_rk_canceling_coloring(l.graph, r, k, opt);
      if (res.found && !emit.empty()) {
        SignedWitness w;
        w.name = l.label;
        w.graph = l.graph;
        w.signing = res.signing;
        w.coloring = res.coloring;
        w.claim.kind = r == 2 ? ClaimKind::k_canceling : ClaimKind::rk_canceling;
        w.claim.k = k;
        w.claim.r = r;
        write_text_file(emit, to_fixture_text(w));
      }
      if (glob.json) {
        emit_json(res);
      } else if (res.found) {
        out << "found after " << res.examined << " labellings\n";
        out << (res.signing ? emit_signed(l.graph, *res.signing) : emit_colored(l.graph, *res.coloring));
      } else if (res.rejected_by_filter) {
        out << "not found: necessary conditions fail\n";
        for (const auto& f : res.filter_reasons) out << f << "\n";
      } else {
        out << "not found after " << res.examined << " labellings\n";
      }
      return res.found ? 0 : 1;
    }
    if (*min_wiener) {
      const auto l = load_input(in);
      const auto res = min_signed_wiener(l.graph, search_options(glob));
      if (glob.json) {
        emit_json(res);
      } else {
        out << "W_* = " << res.value << "\n";
        if (res.argmin) out << "signing " << signs_text(*res.argmin) << "\n";
      }
      return 0;
    }
    if (*threshold) {
      const auto rows = threshold_scan(r, k, n_from, n_to, search_options(glob));
      const auto stable = stable_threshold(rows);
      if (glob.json) {
        for (const auto& row : rows) emit_json(row);
      } else {
        out << "n\tholds\texamined\n";
        for (const auto& row : rows) out << row.n << "\t" << (row.holds ? "yes" : "no") << "\t" << row.examined << "\n";
        out << "threshold " << (stable ? std::to_string(*stable) : "none") << "\n";
      }
      return stable ? 0 : 1;
    }
    if (*trees) {
      bool holds = false;
      if (conjecture == "sandwich") {
        const auto rep = verify_tree_sandwich(n);
        holds = rep.holds();
        if (glob.json) {
          emit_json(rep);
        } else {
          out << "n " << n << ", " << rep.trees << " trees\n";
          out << "anchors " << rep.lower_anchor << " .. " << rep.upper_anchor << ", observed " << rep.observed_min
              << " .. " << rep.observed_max << "\n";
          out << (holds ? "holds" : "fails") << "\n";
          for (const auto* c : {&rep.lower_counterexample, &rep.upper_counterexample}) {
            if (*c) out << "counterexample:\n" << emit_signed((*c)->tree, (*c)->signing);
          }
        }
      } else {
        if (n < 2) throw PreconditionError("double-star check needs n >= 2");
        const auto rep = verify_double_star(n);
        holds = rep.holds();
        if (glob.json) {
          emit_json(rep);
        } else {
          out << "n " << n << ", " << rep.trees << " trees\n";
          out << "W_*(P_n) " << rep.path_min << ", max over double stars " << rep.double_star_max
              << ", max over trees " << rep.tree_max << ", W_*(S_n) " << rep.star_value << "\n";
          out << "best D(a,b): a=" << rep.best_a << " b=" << rep.best_b << " (" << rep.adjacent_max << ")\n";
          out << (holds ? "holds" : "fails") << "\n";
          out << "star-only bound " << (rep.star_only_holds ? "holds" : "fails") << "\n";
          if (rep.counterexample) out << "counterexample:\n" << emit_graph(*rep.counterexample);
          if (rep.star_counterexample) out << "tree above the star:\n" << emit_graph(*rep.star_counterexample);
        }
      }
      return holds ? 0 : 1;
    }
    if (*dyck) {
      if (list_paths) {
        for (const auto& rec : dyck_paths(n)) {
          if (glob.json) {
            emit_json(rec);
          } else {
            out << rec.steps << "\t" << rec.wiener << "\n";
          }
        }
        return 0;
      }
      const auto dist_table = dyck_distribution(n);
      if (!glob.json) out << "W\tcount\n";
      for (const auto& [w, count] : dist_table) {
        if (glob.json) {
          emit_json(Json{{"wiener", w}, {"count", count}});
        } else {
          out << w << "\t" << count << "\n";
        }
      }
      return 0;
    }
    if (*soltes) {
      const auto l = load_input(in);
      const auto rep = signed_soltes ? soltes_check_signed(l.graph, need_signing(l), lim) : soltes_check_classical(l.graph);
      if (glob.json) {
        emit_json(rep);
      } else {
        out << "W(G) = " << rep.whole << "\n";
        for (std::size_t i = 0; i < rep.deleted.size(); ++i) out << "W(G - " << i << ") = " << rep.deleted[i] << "\n";
        out << (rep.holds ? "holds" : "fails") << "\n";
      }
      return rep.holds ? 0 : 1;
    }
    if (*reproduce) {
      const auto ids = suite_criteria(suite);
      bool all = true;
      for (int id : ids) {
        const auto res = run_criterion(id);
        all = all && res.pass;
        if (glob.json) {
          emit_json(res);
        } else {
          out << format_result(res) << std::endl;
        }
      }
      return all ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sgw
