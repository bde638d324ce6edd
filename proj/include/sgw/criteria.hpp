#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgw/report.hpp"

// Reproduction checks 1..12, shared by the acceptance binary and the
// `reproduce` command.
namespace sgw {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  // Measured values and the first discrepancy, if any.
  std::string detail;
  double seconds = 0;

  bool operator==(const CriterionResult&) const = default;
};

constexpr int kCriterionCount = 12;

std::string criterion_title(int id);

// Exceptions thrown by a check are caught and reported as a failure.
CriterionResult run_criterion(int id);

// paper-core, paper-exhaustive, conjectures.
std::vector<std::string> suite_names();
// PreconditionError for an unknown suite.
std::vector<int> suite_criteria(std::string_view suite);

void to_json(Json& j, const CriterionResult& r);
void from_json(const Json& j, CriterionResult& r);

// "criterion 3: PASS  title  (detail, 0.12 s)"
std::string format_result(const CriterionResult& r);

}  // namespace sgw
