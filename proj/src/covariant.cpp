#include "hwgraph/covariant.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "hwgraph/kernels.hpp"
#include "hwgraph/linalg.hpp"

namespace hwg {

const Matrix& FixedPointUnits::operator()(int p, int q) const {
  if (p < 0 || p >= n || q < 0 || q >= n) throw std::out_of_range("fixed-point unit index out of range");
  return units[static_cast<std::size_t>(p) * static_cast<std::size_t>(n) + static_cast<std::size_t>(q)];
}

FixedPointUnits fixed_units(const EntangledBasis& basis) {
  const int n = basis.n();
  FixedPointUnits out{n, {}};
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      Matrix x(basis.ambient_dim());
      for (int k = 0; k < n; ++k) x.add_outer(1.0, basis(k, p), basis(k, q));
      out.units.push_back(std::move(x));
    }
  return out;
}

FixedPointUnits fixed_units(int n) { return fixed_units(EntangledBasis(n)); }

Complex trace_product(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "trace_product");
  const std::size_t d = a.dim();
  Complex t = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) t += a(i, k) * b(k, i);
  return t;
}

Matrix expectation_avg(const WeylRepresentation& rep, const Matrix& x) {
  if (x.dim() != rep.dim()) throw DimensionError("expectation_avg: operand must be n^2 x n^2");
  Matrix acc(rep.dim());
  for (const auto& g : rep.quotient_elements()) acc += rep.conjugate(g, x);
  acc *= 1.0 / static_cast<double>(rep.n() * rep.n());
  return acc;
}

Matrix expectation_avg(int n, const Matrix& x) { return expectation_avg(WeylRepresentation(n), x); }

Matrix expectation_trace(const FixedPointUnits& units, const Matrix& x) {
  const int n = units.n;
  if (x.dim() != static_cast<std::size_t>(n * n)) throw DimensionError("expectation_trace: operand must be n^2 x n^2");
  Matrix acc(x.dim());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const Complex w = trace_product(units(q, p), x);
      if (w == 0.0) continue;
      acc += w * units(p, q);
    }
  acc *= 1.0 / static_cast<double>(n);
  return acc;
}

Matrix expectation_trace(int n, const Matrix& x, const FixedPointUnits& units) {
  if (units.n != n) throw std::invalid_argument("expectation_trace: units built for a different n");
  return expectation_trace(units, x);
}

Matrix q_projection(int n, int s) {
  require_modulus(n);
  if (s < 0 || s >= n) throw std::out_of_range("q_projection: s out of range");
  const auto dn = static_cast<std::size_t>(n);
  Matrix q(dn * dn);
  for (int k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(s) * dn + static_cast<std::size_t>((s + k) % n);
    q(idx, idx) = 1.0;
  }
  return q;
}

// ---------------------------------------------------------------------------

const Matrix& CovariantResolution::atom(const GroupElement& g) const {
  if (!is_valid(g, n)) throw std::out_of_range("resolution atom index out of range");
  return atoms[static_cast<std::size_t>(g.p) * static_cast<std::size_t>(n) + static_cast<std::size_t>(g.q)];
}

Matrix CovariantResolution::total() const {
  Matrix acc(base_operator.dim());
  for (const auto& a : atoms) acc += a;
  return acc;
}

CovariantResolution covariant_resolution(const WeylRepresentation& rep, int s) {
  const int n = rep.n();
  Matrix base = static_cast<double>(n) * q_projection(n, s);
  const double weight = 1.0 / static_cast<double>(n * n);
  std::vector<Matrix> atoms;
  for (const auto& g : rep.quotient_elements()) atoms.push_back(weight * rep.conjugate(g, base));
  return {n, s, std::move(atoms), std::move(base)};
}

CovariantResolution covariant_resolution(int n, int s) { return covariant_resolution(WeylRepresentation(n), s); }

// ---------------------------------------------------------------------------

CheckResult check_q_average(const WeylRepresentation& rep, const FixedPointUnits& units,
                            std::span<const Matrix> q_family, double tol) {
  const Matrix target = (1.0 / static_cast<double>(rep.n())) * Matrix::identity(rep.dim());
  double worst = 0.0;
  for (const auto& q : q_family) {
    worst = std::max(worst, distance(expectation_avg(rep, q), target));
    worst = std::max(worst, distance(expectation_trace(units, q), target));
  }
  return residual_check("theorem1", worst, tol, "E(Q_s) = I/n for s = 0.." + std::to_string(q_family.size() - 1));
}

CheckResult check_q_average(int n, double tol) {
  const WeylRepresentation rep(n);
  std::vector<Matrix> qs;
  for (int s = 0; s < n; ++s) qs.push_back(q_projection(n, s));
  return check_q_average(rep, fixed_units(rep.basis()), qs, tol);
}

Matrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix h(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    h(r, r) = dist(rng);
    for (std::size_t c = r + 1; c < dim; ++c) {
      const double re = dist(rng);
      const double im = dist(rng);
      h(r, c) = {re, im};
      h(c, r) = {re, -im};
    }
  }
  h *= 1.0 / h.frobenius_norm();
  return h;
}

CheckResult check_expectation_forms(const WeylRepresentation& rep, const FixedPointUnits& units,
                                    std::span<const Matrix> samples, double tol) {
  double worst = 0.0;
  for (const auto& x : samples) worst = std::max(worst, distance(expectation_avg(rep, x), expectation_trace(units, x)));
  return residual_check("expectation_forms_agree", worst, tol,
                        std::to_string(samples.size()) + " inputs, group average vs trace form");
}

CheckResult check_expectation_idempotent(const WeylRepresentation& rep, std::span<const Matrix> samples,
                                         double tol) {
  const Matrix id = Matrix::identity(rep.dim());
  double worst = distance(expectation_avg(rep, id), id);
  for (const auto& x : samples) {
    const Matrix ex = expectation_avg(rep, x);
    worst = std::max(worst, distance(expectation_avg(rep, ex), ex));
    worst = std::max(worst, std::abs(ex.trace() - x.trace()));
  }
  return residual_check("expectation_idempotent", worst, tol, "idempotent, unital, trace-preserving");
}

CheckResult check_resolution_mass(const CovariantResolution& res, double tol) {
  const double mass = distance(res.total(), Matrix::identity(res.base_operator.dim()));
  double negativity = 0.0;
  for (const auto& a : res.atoms) negativity = std::max(negativity, -hermitian_eigenvalues(a).front());
  return residual_check("resolution_mass", std::max(mass, negativity), tol,
                        "s = " + std::to_string(res.s) + ", atoms sum to I and are positive");
}

CheckResult check_resolution_covariance(const WeylRepresentation& rep, const CovariantResolution& res,
                                        bool all_pairs, double tol) {
  const int n = rep.n();
  std::vector<GroupElement> actors;
  if (all_pairs) {
    actors = rep.quotient_elements();
  } else {
    actors = {{1, 0, 0}, {0, 1, 0}};
  }
  double worst = 0.0;
  for (const auto& h : actors)
    for (const auto& g : rep.quotient_elements()) {
      const GroupElement hg = make_element(n, h.p + g.p, h.q + g.q);
      worst = std::max(worst, distance(rep.conjugate(h, res.atom(g)), res.atom(hg)));
    }
  return residual_check("resolution_covariance", worst, tol,
                        all_pairs ? "all (h, g) pairs" : "h in {pi(S), pi(M)}, all g");
}

}  // namespace hwg
