#pragma once

#include <string>
#include <vector>

namespace looplab {

// One located residual or violation. `value` is exact ("p/q" sums, words)
// for algebraic checks and a printed float for numerical ones.
struct Finding {
  std::string location;
  std::string value;
  double magnitude = 0.0;
};

struct CheckReport {
  bool pass = true;
  std::vector<Finding> findings;

  void fail(std::string location, std::string value, double magnitude = 1.0) {
    pass = false;
    findings.push_back(Finding{std::move(location), std::move(value), magnitude});
  }
};

}  // namespace looplab
