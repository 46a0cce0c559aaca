#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lnewton/document.hpp"
#include "lnewton/oracle.hpp"

namespace lnewton {

struct JobSpec {
  std::string command = "auto";  ///< oracle | slopes | tables | auto | gauss-check | congruence
  std::string f;
  std::uint32_t p = 0;
  unsigned a = 1;
  long precision = 0;  ///< pi-adic precision for gauss-check; 0 picks 4 (p - 1)
  std::uint64_t budget = 600'000'000;
  unsigned threads = 1;
  unsigned s_max = 4;  ///< coefficients for tables, levels for congruence
};

struct RunResult {
  PolygonDocument doc;
  int exit_code = 0;  ///< 0 proved, 2 inconclusive, 1 error
};

RunResult run(const JobSpec& job);

struct SuiteCase {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string id;
  std::vector<SuiteCase> cases;
  bool ok() const;
  double seconds() const;
  double max_case_seconds() const;
};

std::vector<std::string> suite_ids();

/// Pinned reproduction cases; "sextic" runs every sextic:<case>.
SuiteReport reproduce(const std::string& id, const OracleOptions& opt = {});

std::string format_report(const SuiteReport& r);

}  // namespace lnewton
