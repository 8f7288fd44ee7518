#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hwgraph/matrix.hpp"

namespace hwg {

/// Kronecker product. Composite index of |a> (x) |b> is a * dim(B) + b.
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Tr(a^dagger b)
Complex hs_inner(const Matrix& a, const Matrix& b);

/// F[k][j] = exp(2 pi i k j / n) / sqrt(n)
Matrix dft_unitary(std::size_t n);

/// ||U^dagger U - I||_F
double unitarity_residual(const Matrix& u);

/// Eigenvalues of a Hermitian matrix in ascending order. Only the lower
/// triangle is read.
std::vector<double> hermitian_eigenvalues(const Matrix& h);

/// Orthonormal columns spanning the range of an orthogonal projection, as a
/// row-major dim x rank block. `rank` must be the projection's trace.
std::vector<Complex> projection_isometry(const Matrix& p, std::size_t rank);

// ---------------------------------------------------------------------------
// Spectral projections of unitaries

class NotUnitaryError : public std::invalid_argument {
 public:
  NotUnitaryError(double residual, double bound);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Raised when clustering the spectrum at two nearby thresholds disagrees.
class DegenerateClusteringError : public std::runtime_error {
 public:
  explicit DegenerateClusteringError(double gap);
  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

struct SpectralDecomposition {
  std::vector<Complex> eigenvalues;  ///< one per cluster, sorted by argument in [0, 2 pi)
  std::vector<Matrix> projectors;
  std::vector<std::size_t> ranks;
  /// Per cluster: orthonormal eigenvectors as a row-major dim x rank block.
  std::vector<std::vector<Complex>> bases;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  Matrix reconstruct() const;
};

/// Clusters the spectrum of a unitary by single linkage on the unit circle
/// (gap 10 * tol) and returns the orthogonal projection of each eigenspace.
SpectralDecomposition spectral_projections(const Matrix& u, double tol);

// ---------------------------------------------------------------------------
// Operator subspaces

struct OperatorSubspace {
  std::size_t ambient_dim = 0;
  std::vector<Matrix> basis;  ///< Hilbert-Schmidt orthonormal
  double build_tol = 0.0;
  /// Every generator was numerically zero; `basis` is empty.
  bool all_zero = false;
  /// Eigenvalues of the generators' Gram matrix, descending.
  std::vector<double> gram_spectrum;

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Orthonormal basis of span(generators) from the eigendecomposition of their
/// Gram matrix. Gram eigenvalues at or below tol * (largest eigenvalue) are
/// dropped. If the largest eigenvalue is itself at most tol^2 the result is
/// the zero subspace with `all_zero` set.
OperatorSubspace span_operators(std::span<const Matrix> generators, double tol);

/// ||x - P_V(x)||_F, where P_V is the orthogonal projection onto the span.
double projection_residual(const OperatorSubspace& v, const Matrix& x);

struct SubspaceComparison {
  bool equal = false;
  double max_residual = 0.0;
};

/// Equal dimensions and every basis element of each space lies in the other
/// up to `tol`.
SubspaceComparison subspace_equal(const OperatorSubspace& v, const OperatorSubspace& w, double tol);

}  // namespace hwg
