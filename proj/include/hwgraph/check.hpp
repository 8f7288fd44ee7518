#pragma once

#include <string>

namespace hwg {

/// One line of a verification report.
struct CheckResult {
  std::string id;
  bool pass = false;
  double max_residual = 0.0;
  std::string details;
};

inline CheckResult residual_check(std::string id, double residual, double tol, std::string details = {}) {
  return {std::move(id), residual <= tol, residual, std::move(details)};
}

}  // namespace hwg
