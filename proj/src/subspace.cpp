#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "hwgraph/kernels.hpp"
#include "hwgraph/linalg.hpp"

namespace hwg {
namespace {

using kernels::PackedOperators;

Eigen::MatrixXcd as_eigen(const std::vector<Complex>& g, std::size_t r) {
  const auto n = static_cast<Eigen::Index>(r);
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = g[static_cast<std::size_t>(i * n + j)];
  return out;
}

// sum_i coeffs[i] * rows[i], all rows of length `len`
std::vector<Complex> combine(std::span<const Complex> rows, std::size_t len, const Eigen::VectorXcd& coeffs) {
  std::vector<Complex> out(len);
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    const Complex c = coeffs(i);
    if (c == 0.0) continue;
    const Complex* src = rows.data() + static_cast<std::size_t>(i) * len;
    for (std::size_t t = 0; t < len; ++t) out[t] += mul(c, src[t]);
  }
  return out;
}

// ||x - sum_b <b, x> b|| over packed rows; `basis` holds `count` orthonormal rows.
double packed_residual(std::span<const Complex> basis, std::size_t count, std::span<const Complex> x) {
  const std::size_t len = x.size();
  std::vector<Complex> rest(x.begin(), x.end());
  for (std::size_t b = 0; b < count; ++b) {
    const std::span<const Complex> row = basis.subspan(b * len, len);
    const Complex c = inner(row, x);
    for (std::size_t t = 0; t < len; ++t) rest[t] -= mul(c, row[t]);
  }
  return norm(rest);
}

}  // namespace

OperatorSubspace span_operators(std::span<const Matrix> generators, double tol) {
  if (generators.empty()) throw std::invalid_argument("span_operators: empty generator list");
  for (const auto& g : generators) require_same_dim(generators.front(), g, "span_operators");

  OperatorSubspace out;
  out.ambient_dim = generators.front().dim();
  out.build_tol = tol;

  const PackedOperators packed = kernels::pack(generators);
  const std::size_t len = packed.support.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      as_eigen(kernels::gram_packed(packed.rows, generators.size(), len), generators.size()));
  const auto& evals = solver.eigenvalues();
  const auto& evecs = solver.eigenvectors();
  const auto r = evals.size();
  for (Eigen::Index i = r - 1; i >= 0; --i) out.gram_spectrum.push_back(evals(i));

  const double largest = evals(r - 1);
  if (largest <= tol * tol) {
    out.all_zero = true;
    return out;
  }

  std::vector<Complex> raw;
  std::size_t kept = 0;
  for (Eigen::Index i = r - 1; i >= 0; --i) {
    if (evals(i) <= tol * largest) break;
    const auto row = combine(packed.rows, len, evecs.col(i) / std::sqrt(evals(i)));
    raw.insert(raw.end(), row.begin(), row.end());
    ++kept;
  }

  // One symmetric (Loewdin) pass removes the rounding left by near-threshold
  // Gram eigenvalues: B' = B G^{-1/2}.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> refine(as_eigen(kernels::gram_packed(raw, kept, len), kept));
  const Eigen::MatrixXcd inv_sqrt = refine.operatorInverseSqrt();
  for (Eigen::Index c = 0; c < inv_sqrt.cols(); ++c) out.basis.push_back(packed.unpack(combine(raw, len, inv_sqrt.col(c))));
  return out;
}

double projection_residual(const OperatorSubspace& v, const Matrix& x) {
  if (v.ambient_dim != x.dim()) throw DimensionError("projection_residual: ambient dimension mismatch");
  Matrix rest = x;
  for (const auto& b : v.basis) {
    const Complex c = hs_inner(b, x);
    auto dst = rest.entries();
    const auto src = b.entries();
    for (std::size_t t = 0; t < src.size(); ++t) dst[t] -= c * src[t];
  }
  return rest.frobenius_norm();
}

SubspaceComparison subspace_equal(const OperatorSubspace& v, const OperatorSubspace& w, double tol) {
  if (v.ambient_dim != w.ambient_dim) throw DimensionError("subspace_equal: ambient dimension mismatch");
  SubspaceComparison out;
  if (v.basis.empty() || w.basis.empty()) {
    for (const auto& b : v.basis) out.max_residual = std::max(out.max_residual, b.frobenius_norm());
    for (const auto& b : w.basis) out.max_residual = std::max(out.max_residual, b.frobenius_norm());
  } else {
    std::vector<Matrix> all(v.basis);
    all.insert(all.end(), w.basis.begin(), w.basis.end());
    const kernels::PackedOperators packed = kernels::pack(all);
    const std::size_t len = packed.support.size();
    const std::span<const Complex> rows = packed.rows;
    const std::span<const Complex> vrows = rows.first(v.dimension() * len);
    const std::span<const Complex> wrows = rows.subspan(v.dimension() * len);
    for (std::size_t i = 0; i < v.dimension(); ++i)
      out.max_residual = std::max(out.max_residual, packed_residual(wrows, w.dimension(), packed.row(i)));
    for (std::size_t i = 0; i < w.dimension(); ++i)
      out.max_residual =
          std::max(out.max_residual, packed_residual(vrows, v.dimension(), packed.row(v.dimension() + i)));
  }
  out.equal = v.dimension() == w.dimension() && out.max_residual <= tol;
  return out;
}

}  // namespace hwg
