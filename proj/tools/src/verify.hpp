#pragma once

#include <optional>
#include <string>
#include <vector>

namespace latgreen::cli {

struct CaseResult {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  double tol = 0.0;
  std::vector<CaseResult> cases;

  bool pass() const;
};

/// Suites: helmholtz, oracle, overlap, identities, walk. Without tol each
/// suite uses its own default. Throws ParseError for an unknown suite.
SuiteReport run_suite(const std::string& suite, std::optional<double> tol);

std::vector<std::string> suite_names();

}  // namespace latgreen::cli
