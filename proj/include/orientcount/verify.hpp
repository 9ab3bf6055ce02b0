#pragma once

#include <string>
#include <vector>

namespace oc {

struct Check {
  std::string what;
  bool pass = true;
  std::string detail;
  bool info = false;    // reported only, never fails a suite
  bool timing = false;  // detail is a wall-clock reading
};

struct SuiteReport {
  std::string name;
  int criterion = 0;
  std::string title;
  bool pass = true;
  std::vector<Check> checks;
  double ms = 0;
};

// In criterion order.
const std::vector<std::string>& suite_names();

// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, int threads = 1);

}  // namespace oc
