#pragma once

#include <cstdint>
#include <vector>

#include "hwgraph/check.hpp"
#include "hwgraph/graph.hpp"

namespace hwg {

struct VerificationReport {
  int n = 0;
  double tol = 0.0;
  std::vector<CheckResult> checks;  // canonical order, see check_ids()
  GraphAudit graph;
  std::vector<Discrepancy> discrepancies;
  std::int64_t timing_ms = 0;

  bool all_pass() const;
};

struct ReportOptions {
  /// Record wall-clock time. Off by default so reports are reproducible byte for byte.
  bool timing = false;
  /// Random Hermitian inputs for the expectation checks (I and Q_0 are always added).
  std::size_t random_samples = 3;
};

const std::vector<std::string>& check_ids();

VerificationReport build_report(int n, double tol, const ReportOptions& options = {});

}  // namespace hwg
