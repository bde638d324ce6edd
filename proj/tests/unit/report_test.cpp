#include <gtest/gtest.h>

#include "sgw/constructions.hpp"
#include "sgw/criteria.hpp"
#include "sgw/errors.hpp"
#include "sgw/families.hpp"
#include "sgw/report.hpp"
#include "sgw/wiener.hpp"

namespace sgw {
namespace {

// Serializes, writes as a line, parses the line back and converts.
template <class T>
T round_trip(const T& value) {
  const auto lines = parse_json_lines(json_line(Json(value)));
  EXPECT_EQ(lines.size(), 1u);
  return lines.at(0).get<T>();
}

TEST(Report, Basics) {
  const Graph g = theta_graph({1, 2, 2, 3});
  EXPECT_EQ(round_trip(g), g);
  const Signing s({1, -1, -1, 1, 1});
  EXPECT_EQ(round_trip(s), s);
  EXPECT_EQ(Json(s), Json("+--++"));
  const EdgeColoring c(3, {1, 3, 2});
  EXPECT_EQ(round_trip(c), c);
  EXPECT_EQ(round_trip(ExtendedCount::infinite()), ExtendedCount::infinite());
  EXPECT_EQ(round_trip(ExtendedCount(165)), ExtendedCount(165));
  EXPECT_EQ(round_trip(VertexSet{1, 4}), (VertexSet{1, 4}));
}

TEST(Report, EngineAndCancelingReports) {
  const auto w = square_path_signing(6);
  const auto d = signed_distance(w.graph, *w.signing, 0, 5);
  EXPECT_EQ(round_trip(d), d);
  const auto disconnected = signed_distance(Graph(2), Signing(), 0, 1);
  EXPECT_EQ(round_trip(disconnected), disconnected);
  EXPECT_EQ(round_trip(structural_report(w.graph)), structural_report(w.graph));

  const auto fail = is_k_canceling_signing(w.graph, *w.signing, 1);
  ASSERT_TRUE(fail.failure);
  EXPECT_EQ(round_trip(fail), fail);
  CheckOptions opt;
  opt.collect_witnesses = true;
  const auto k5 = complete_cyclic_signing(5);
  const auto holds = is_k_canceling_signing(k5.graph, *k5.signing, 2, opt);
  ASSERT_FALSE(holds.witnesses.empty());
  EXPECT_EQ(round_trip(holds), holds);

  const auto nec = necessary_conditions(cycle_graph(11), 1);
  EXPECT_EQ(round_trip(nec), nec);
  EXPECT_EQ(Json(nec)["failures"][0], "edge count 11 < 13");
  EXPECT_EQ(round_trip(soltes_check_classical(cycle_graph(11))), soltes_check_classical(cycle_graph(11)));
  EXPECT_EQ(round_trip(soltes_check_classical(star_graph(4))), soltes_check_classical(star_graph(4)));
}

TEST(Report, ExtremalReports) {
  const auto found = find_rk_canceling_coloring(complete_graph(4), 3, 1);
  EXPECT_EQ(round_trip(found), found);
  const auto filtered = find_k_canceling_signing(cycle_graph(11), 1);
  EXPECT_EQ(round_trip(filtered), filtered);
  const auto minw = min_signed_wiener(complete_graph(4));
  EXPECT_EQ(round_trip(minw), minw);
  for (const auto& row : threshold_scan(2, 1, 2, 5)) EXPECT_EQ(round_trip(row), row);
  const auto sandwich = verify_tree_sandwich(6);
  EXPECT_EQ(round_trip(sandwich), sandwich);
  SandwichReport broken = sandwich;
  broken.lower_holds = false;
  broken.lower_counterexample = SignedTreeInstance{path_graph(3), Signing({1, 1}), 4};
  EXPECT_EQ(round_trip(broken), broken);
  const auto ds = verify_double_star(8);
  ASSERT_TRUE(ds.star_counterexample);
  EXPECT_EQ(round_trip(ds), ds);
  for (const auto& r : dyck_paths(3)) EXPECT_EQ(round_trip(r), r);
}

TEST(Report, CriterionLines) {
  const CriterionResult r{11, criterion_title(11), true, "C_11 only", 0.25};
  EXPECT_EQ(round_trip(r), r);
  EXPECT_EQ(format_result(r).rfind("criterion 11: PASS", 0), 0u);
}

TEST(Report, Suites) {
  std::vector<int> all;
  for (const auto& name : suite_names()) {
    const auto ids = suite_criteria(name);
    all.insert(all.end(), ids.begin(), ids.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<int> expect(kCriterionCount);
  std::iota(expect.begin(), expect.end(), 1);
  EXPECT_EQ(all, expect);
  EXPECT_THROW(suite_criteria("nosuch"), PreconditionError);
  EXPECT_THROW(criterion_title(13), PreconditionError);
}

TEST(Report, ParseErrors) {
  EXPECT_EQ(parse_json_lines("\n{\"a\":1}\n\n[2]\n").size(), 2u);
  try {
    parse_json_lines("{}\n{oops\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(Json("+x-").get<Signing>(), ParseError);
}

}  // namespace
}  // namespace sgw
