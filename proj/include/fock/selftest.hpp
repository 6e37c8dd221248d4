#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fock {

struct AcceptanceResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double measured = 0.0;  ///< worst observed value of the checked quantity
  double tolerance = 0.0; ///< pass threshold for `measured`
  std::string detail;
};

/// Runs the ten acceptance checks in order. Each check catches its own
/// exceptions and reports them as a failure.
std::vector<AcceptanceResult> run_acceptance();

/// One "PASS"/"FAIL" line per result; returns true when all passed.
bool print_acceptance(std::ostream &os, const std::vector<AcceptanceResult> &results);

} // namespace fock
