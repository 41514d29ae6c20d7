#pragma once

#include <string>
#include <vector>

namespace twistcert::cli {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  // Fixtures that corrupt one input so that the matching suite must fail.
  std::vector<std::string> inject;
  int threads = 1;
};

std::vector<std::string> known_faults();  // "chartable-perturbation", "drop-class"

// Every module's invariant suite at reduced scale. Throws InputError for an
// unknown fault name; suite failures are reported, not thrown.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

}  // namespace twistcert::cli
