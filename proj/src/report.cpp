#include "hwgraph/report.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "hwgraph/covariant.hpp"

namespace hwg {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "rep_unitary",
      "rep_order",
      "weyl_relation",
      "subspace_invariance",
      "intertwiner",
      "expectation_forms_agree",
      "expectation_idempotent",
      "theorem1",
      "resolution_mass",
      "resolution_covariance",
      "kl_anticliques",
      "spectral_pk_match",
      "graphs_coincide",
      "orbit_equals_z",
  };
  return ids;
}

VerificationReport build_report(int n, double tol, const ReportOptions& options) {
  require_modulus(n);
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  const auto start = std::chrono::steady_clock::now();

  const WeylRepresentation rep(n);
  const FixedPointUnits units = fixed_units(rep.basis());

  VerificationReport out;
  out.n = n;
  out.tol = tol;
  out.checks = verify_representation(rep, tol);

  std::vector<Matrix> samples;
  for (std::size_t i = 0; i < options.random_samples; ++i)
    samples.push_back(random_hermitian(rep.dim(), 1000u * static_cast<std::uint64_t>(n) + i));
  samples.push_back(Matrix::identity(rep.dim()));
  samples.push_back(q_projection(n, 0));
  out.checks.push_back(check_expectation_forms(rep, units, samples, tol));
  out.checks.push_back(check_expectation_idempotent(rep, samples, tol));

  std::vector<Matrix> qs;
  for (int s = 0; s < n; ++s) qs.push_back(q_projection(n, s));
  out.checks.push_back(check_q_average(rep, units, qs, tol));

  const CovariantResolution res = covariant_resolution(rep, 0);
  out.checks.push_back(check_resolution_mass(res, tol));
  out.checks.push_back(check_resolution_covariance(rep, res, n <= 6, tol));

  CheckResult kl = check_kl_anticliques(rep, tol);
  kl.details += "; " + spectral_projection_scan(rep, 0, tol).summary();
  out.checks.push_back(std::move(kl));
  out.checks.push_back(check_spectral_identification(rep, tol));

  GraphSpanAudit audit = audit_graph_spans(rep, tol);
  out.checks.push_back(std::move(audit.graphs_coincide));
  out.checks.push_back(std::move(audit.orbit_equals_z));
  out.graph = audit.graph;
  out.discrepancies = std::move(audit.discrepancies);

  if (options.timing) {
    out.timing_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

}  // namespace hwg
