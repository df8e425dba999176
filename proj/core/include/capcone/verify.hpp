#pragma once

// The bundled invariant suite: every module contributes property checks that
// can be run from the CLI (`capcone verify`) or reused by tests.

#include "capcone/hclass.hpp"

#include <functional>
#include <string>
#include <vector>

namespace capcone {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct Check {
  std::string module;  // lattice | negative_classes | numbers_game | wall_crossing
  std::string name;
  std::function<CheckResult()> run;
};

const std::vector<Check>& verification_checks();

// Exposed with an injectable constant so tests can verify that a corrupted
// value is actually detected.
CheckResult check_d9_decomposition(const HClass& d9);

}  // namespace capcone
