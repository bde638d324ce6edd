#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "sgw/constructions.hpp"
#include "sgw/criteria.hpp"
#include "sgw/families.hpp"
#include "sgw/graph_io.hpp"
#include "sgw/report.hpp"

namespace sgw {
namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

template <class T>
T only_line(const Run& r) {
  const auto lines = parse_json_lines(r.out);
  EXPECT_EQ(lines.size(), 1u);
  return lines.at(0).get<T>();
}

TEST(Cli, ExamplesAndExitCodes) {
  EXPECT_EQ(run({"check", "--k", "2", "--fixture", "complete-cyclic:5"}).code, 0);
  EXPECT_EQ(run({"soltes", "--family", "cycle:11"}).code, 0);
  EXPECT_EQ(run({"soltes", "--family", "cycle:10"}).code, 1);
  const auto filtered = run({"filter", "--k", "1", "--family", "cycle:11"});
  EXPECT_EQ(filtered.code, 1);
  EXPECT_NE(filtered.out.find("edge count 11 < 13"), std::string::npos);
  EXPECT_EQ(run({"reproduce", "nosuch"}).code, 2);
  EXPECT_EQ(run({"check", "--k", "1", "--fixture", "square-path:6"}).code, 1);
  EXPECT_EQ(run({"search", "--k", "1", "--family", "theta:1,2,2,3"}).code, 0);
  EXPECT_EQ(run({"search", "--k", "1", "--family", "theta:2,2,3"}).code, 1);
  EXPECT_EQ(run({"threshold", "--r", "2", "--k", "1", "--n-from", "2", "--n-to", "6"}).code, 0);
  EXPECT_EQ(run({"trees", "--conjecture", "sandwich", "--n", "7"}).code, 0);
  EXPECT_EQ(run({"check-colored", "--r", "3", "--k", "2", "--fixture", "complete-rk:6,3,2"}).code, 0);
  EXPECT_EQ(run({"construct", "complete-cyclic", "4"}).code, 0);  // expected failure, as claimed
}

TEST(Cli, UsageAndGuardErrorsGoToStderr) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"bogus"}, {"check", "--k", "1"}, {"check", "--family", "cycle:5"},
        {"check", "--k", "1", "--family", "cycle:5"}, {"dist", "--family", "nosuch:3", "--u", "0", "--v", "1"},
        {"check", "--k", "1", "--family", "cycle:5", "--signing", "+-"},
        {"search", "--k", "1", "--family", "complete:8"}, {"trees", "--conjecture", "other", "--n", "5"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
  const auto raised = run({"--max-edges", "27", "search", "--k", "1", "--family", "complete:8"});
  EXPECT_EQ(raised.code, 0);
  EXPECT_NE(raised.err.find("may take a long time"), std::string::npos);
}

TEST(Cli, StructuredOutputRoundTrips) {
  const auto w = square_path_signing(6);
  EXPECT_EQ(only_line<CancelingVerdict>(run({"--json", "check", "--k", "1", "--fixture", "square-path:6"})),
            is_k_canceling_signing(w.graph, *w.signing, 1));
  EXPECT_EQ(only_line<DistanceResult>(run({"--json", "dist", "--fixture", "square-path:6", "--u", "0", "--v", "5"})),
            signed_distance(w.graph, *w.signing, 0, 5));
  EXPECT_EQ(only_line<NecessaryReport>(run({"--json", "filter", "--k", "1", "--family", "cycle:11"})),
            necessary_conditions(cycle_graph(11), 1));
  EXPECT_EQ(only_line<SearchResult>(run({"--json", "search", "--k", "2", "--family", "complete:5"})),
            find_k_canceling_signing(complete_graph(5), 2));
  EXPECT_EQ(only_line<SearchResult>(run({"--json", "search", "--k", "1", "--r", "3", "--family", "complete:4"})),
            find_rk_canceling_coloring(complete_graph(4), 3, 1));
  EXPECT_EQ(only_line<MinWienerResult>(run({"--json", "min-wiener", "--family", "star:4"})),
            min_signed_wiener(star_graph(4)));
  EXPECT_EQ(only_line<DoubleStarReport>(run({"--json", "trees", "--conjecture", "double-star", "--n", "8"})),
            verify_double_star(8));
  EXPECT_EQ(only_line<SandwichReport>(run({"--json", "trees", "--conjecture", "sandwich", "--n", "6"})),
            verify_tree_sandwich(6));
  EXPECT_EQ(only_line<SoltesReport>(run({"--json", "soltes", "--family", "cycle:11"})),
            soltes_check_classical(cycle_graph(11)));

  const auto rows = parse_json_lines(run({"--json", "threshold", "--r", "2", "--k", "2", "--n-from", "3", "--n-to", "6"}).out);
  const auto expect = threshold_scan(2, 2, 3, 6);
  ASSERT_EQ(rows.size(), expect.size());
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].get<ThresholdRow>(), expect[i]);

  const auto paths = parse_json_lines(run({"--json", "dyck", "--n", "4", "--paths"}).out);
  const auto records = dyck_paths(4);
  ASSERT_EQ(paths.size(), records.size());
  for (std::size_t i = 0; i < paths.size(); ++i) EXPECT_EQ(paths[i].get<DyckRecord>(), records[i]);
  std::uint64_t total = 0;
  for (const auto& j : parse_json_lines(run({"--json", "dyck", "--n", "5"}).out)) total += j.at("count").get<std::uint64_t>();
  EXPECT_EQ(total, 42u);

  const auto suite = parse_json_lines(run({"--json", "reproduce", "conjectures"}).out);
  ASSERT_EQ(suite.size(), 1u);
  EXPECT_TRUE(suite[0].get<CriterionResult>().pass);
}

TEST(Cli, VerdictIndependentOfThreads) {
  for (const char* spec : {"square-path:6", "complete-cyclic:7", "c7sq"}) {
    const auto one = run({"--threads", "1", "--json", "check", "--k", "2", "--fixture", spec});
    const auto many = run({"--threads", "4", "--json", "check", "--k", "2", "--fixture", spec});
    EXPECT_EQ(one.code, many.code);
    EXPECT_EQ(one.out, many.out);
  }
}

TEST(Cli, FilesAndEmittedWitnesses) {
  const auto dir = std::filesystem::temp_directory_path() / "sgw_cli_test";
  std::filesystem::create_directories(dir);
  const auto witness = (dir / "k5.txt").string();
  EXPECT_EQ(run({"search", "--k", "2", "--family", "complete:5", "--emit-witness", witness}).code, 0);
  const auto lg = read_graph_file(witness);
  ASSERT_TRUE(lg.signing);
  EXPECT_TRUE(is_k_canceling_signing(lg.graph, *lg.signing, 2).holds);
  EXPECT_EQ(run({"check", "--k", "2", "--file", witness}).code, 0);

  const auto fixture = (dir / "c7sq.txt").string();
  EXPECT_EQ(run({"construct", "c7sq", "--out", fixture}).code, 0);
  const auto text = run({"construct", "c7sq"}).out;
  EXPECT_EQ(text, to_fixture_text(special_witness("c7sq")));
  EXPECT_EQ(run({"wiener", "--file", fixture}).out, "classical 28\nsigned 0\n");

  const auto g6 = (dir / "k4.g6").string();
  write_text_file(g6, "C~\n");
  EXPECT_EQ(run({"search", "--k", "1", "--file", g6}).code, 0);
  EXPECT_EQ(run({"wiener", "--file", (dir / "missing.txt").string()}).code, 2);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace sgw
