#pragma once

/*
 * Built-in self-check over the worked examples: the catalog codes, their
 * enumerators, the shadow of C1 and the transform constants.
 */

#include <string>
#include <vector>

namespace z2z4 {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // observed value when the check fails
};

std::vector<CheckResult> verify_examples();

}  // namespace z2z4
