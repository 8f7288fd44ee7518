#pragma once

// Dense kernels. Each parallel kernel has a serial reference twin used by the
// tests and the benchmark. Parallel kernels split work over output rows (or
// Gram rows) only, so every output entry is accumulated by one thread in
// ascending index order and results are bit-identical to a one-thread run.

#include <cstddef>
#include <span>
#include <vector>

#include "hwgraph/matrix.hpp"

namespace hwg::kernels {

/// c = a * b with a: rows x inner, b: inner x cols, all row-major.
/// Exact-zero entries of `a` are skipped.
void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t rows, std::size_t inner, std::size_t cols);

/// Plain triple loop, no skipping, no threads.
void gemm_reference(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                    std::size_t rows, std::size_t inner, std::size_t cols);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix multiply_reference(const Matrix& a, const Matrix& b);

/// u * x * u^dagger, evaluated as (u * (u * x)^dagger)^dagger so that the
/// sparse operand `u` is always on the left.
Matrix conjugate(const Matrix& u, const Matrix& x);
Matrix conjugate_reference(const Matrix& u, const Matrix& x);

/// Operators restricted to the union of their nonzero positions. Entries
/// outside `support` are zero in every operator, so inner products and linear
/// combinations can be taken on the packed rows.
struct PackedOperators {
  std::size_t dim = 0;
  std::vector<std::size_t> support;  // ascending flat indices
  std::vector<Complex> rows;         // count x support.size(), row-major

  std::size_t count() const noexcept { return support.empty() ? 0 : rows.size() / support.size(); }
  std::span<const Complex> row(std::size_t i) const { return {rows.data() + i * support.size(), support.size()}; }
  Matrix unpack(std::span<const Complex> row) const;
};

PackedOperators pack(std::span<const Matrix> ops);

/// Gram matrix of packed rows: G[i][j] = <row_i, row_j>, row-major count x count.
std::vector<Complex> gram_packed(std::span<const Complex> rows, std::size_t count, std::size_t len);

/// Hilbert-Schmidt Gram matrix G[i][j] = Tr(ops[i]^dagger ops[j]), row-major r x r.
/// Entries are gathered over the union of the operators' nonzero positions first.
std::vector<Complex> gram(std::span<const Matrix> ops);
std::vector<Complex> gram_reference(std::span<const Matrix> ops);

}  // namespace hwg::kernels
