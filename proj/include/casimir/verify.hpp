#pragma once

#include <string>
#include <vector>

// Self-check suites run by `casimir verify`: each check measures a
// discrepancy and compares it with a fixed tolerance.
namespace casimir::verify {

enum class Suite { Quick, Full };

struct Check {
  std::string name;
  double measured;
  double tolerance;
  bool passed;
};

struct Report {
  std::vector<Check> checks;

  bool passed() const noexcept;
};

/// Runs the suite. Every tolerance is multiplied by tolerance_scale before
/// comparison; a check passes when measured <= tolerance.
Report run(Suite suite, double tolerance_scale = 1.0);

}  // namespace casimir::verify
