#pragma once

// Verification suites behind `lpp verify`. Each suite sweeps a fixed set of
// cases and lists every failing case with the expected and computed values.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lpp/graph.hpp"

namespace lpp {

struct SuiteFailure {
  std::string case_name;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;

  bool passed() const { return failures.empty(); }
};

nlohmann::json to_json(const SuiteReport& report);

// coefficients, closed-forms, y1, residuals, expansion, decomposition.
const std::vector<std::string>& suite_names();
// Throws ParseError for an unknown suite.
SuiteReport run_suite(std::string_view name, unsigned threads = 1);

// Dumbbells with 3 <= p <= q <= 7, 0 <= r <= 5.
std::vector<FamilySpec> dumbbell_sweep();
// Thetas with p <= q <= r, at most one zero, p + q + r <= 12.
std::vector<FamilySpec> theta_sweep();

}  // namespace lpp
