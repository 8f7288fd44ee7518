#include "hwgraph/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hwg::kernels {
namespace {

constexpr std::size_t kParallelWork = 1u << 15;

void check_gemm_shapes(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                       std::size_t rows, std::size_t inner, std::size_t cols) {
  if (a.size() != rows * inner || b.size() != inner * cols || c.size() != rows * cols) {
    throw DimensionError("gemm: operand sizes do not match " + std::to_string(rows) + "x" +
                         std::to_string(inner) + "x" + std::to_string(cols));
  }
}

}  // namespace

void gemm(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
          std::size_t rows, std::size_t inner, std::size_t cols) {
  check_gemm_shapes(a, b, c, rows, inner, cols);
  std::fill(c.begin(), c.end(), Complex{0.0, 0.0});

  // std::complex is layout-compatible with double[2]; the explicit real
  // arithmetic avoids the NaN-recovery path of complex multiplication.
  const double* A = reinterpret_cast<const double*>(a.data());
  const double* B = reinterpret_cast<const double*>(b.data());
  double* C = reinterpret_cast<double*>(c.data());
  const auto nrows = static_cast<std::int64_t>(rows);
  const bool parallel = rows * inner * cols >= kParallelWork;

#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < nrows; ++i) {
    double* crow = C + 2 * static_cast<std::size_t>(i) * cols;
    const double* arow = A + 2 * static_cast<std::size_t>(i) * inner;
    for (std::size_t k = 0; k < inner; ++k) {
      const double ar = arow[2 * k];
      const double ai = arow[2 * k + 1];
      if (ar == 0.0 && ai == 0.0) continue;
      const double* brow = B + 2 * k * cols;
      for (std::size_t j = 0; j < cols; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void gemm_reference(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> c,
                    std::size_t rows, std::size_t inner, std::size_t cols) {
  check_gemm_shapes(a, b, c, rows, inner, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < inner; ++k) s += a[i * inner + k] * b[k * cols + j];
      c[i * cols + j] = s;
    }
  }
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "multiply");
  Matrix c(a.dim());
  gemm(a.entries(), b.entries(), c.entries(), a.dim(), a.dim(), a.dim());
  return c;
}

Matrix multiply_reference(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "multiply_reference");
  Matrix c(a.dim());
  gemm_reference(a.entries(), b.entries(), c.entries(), a.dim(), a.dim(), a.dim());
  return c;
}

Matrix conjugate(const Matrix& u, const Matrix& x) {
  const Matrix ux_dag = multiply(u, x).adjoint();
  return multiply(u, ux_dag).adjoint();
}

Matrix conjugate_reference(const Matrix& u, const Matrix& x) {
  return multiply_reference(multiply_reference(u, x), u.adjoint());
}

Matrix PackedOperators::unpack(std::span<const Complex> row) const {
  if (row.size() != support.size()) throw DimensionError("unpack: row length does not match the support");
  Matrix out(dim);
  auto e = out.entries();
  for (std::size_t t = 0; t < support.size(); ++t) e[support[t]] = row[t];
  return out;
}

PackedOperators pack(std::span<const Matrix> ops) {
  if (ops.empty()) throw std::invalid_argument("pack: empty operator list");
  for (const auto& op : ops) require_same_dim(ops[0], op, "pack");
  const std::size_t len = ops[0].entries().size();

  std::vector<char> used(len, 0);
  for (const auto& op : ops) {
    const auto e = op.entries();
    for (std::size_t idx = 0; idx < len; ++idx)
      if (e[idx] != 0.0) used[idx] = 1;
  }
  PackedOperators out;
  out.dim = ops[0].dim();
  for (std::size_t idx = 0; idx < len; ++idx)
    if (used[idx]) out.support.push_back(idx);
  // An all-zero family still needs one column so that rows are addressable.
  if (out.support.empty()) out.support.push_back(0);

  const std::size_t s = out.support.size();
  out.rows.resize(ops.size() * s);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const auto e = ops[i].entries();
    for (std::size_t t = 0; t < s; ++t) out.rows[i * s + t] = e[out.support[t]];
  }
  return out;
}

std::vector<Complex> gram_packed(std::span<const Complex> rows, std::size_t count, std::size_t len) {
  if (rows.size() != count * len) throw DimensionError("gram_packed: rows do not match count x len");
  std::vector<Complex> g(count * count);
  const auto nr = static_cast<std::int64_t>(count);
  const double* base = reinterpret_cast<const double*>(rows.data());
#pragma omp parallel for schedule(dynamic) if (count * count * len >= kParallelWork)
  for (std::int64_t ii = 0; ii < nr; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const double* pi = base + 2 * i * len;
    for (std::size_t j = i; j < count; ++j) {
      const double* pj = base + 2 * j * len;
      double re = 0.0;
      double im = 0.0;
      for (std::size_t t = 0; t < len; ++t) {
        // conj(pi) * pj
        re += pi[2 * t] * pj[2 * t] + pi[2 * t + 1] * pj[2 * t + 1];
        im += pi[2 * t] * pj[2 * t + 1] - pi[2 * t + 1] * pj[2 * t];
      }
      g[i * count + j] = {re, im};
      g[j * count + i] = {re, -im};
    }
  }
  return g;
}

std::vector<Complex> gram(std::span<const Matrix> ops) {
  if (ops.empty()) return {};
  const PackedOperators p = pack(ops);
  return gram_packed(p.rows, ops.size(), p.support.size());
}

std::vector<Complex> gram_reference(std::span<const Matrix> ops) {
  const std::size_t r = ops.size();
  std::vector<Complex> g(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g[i * r + j] = inner(ops[i].entries(), ops[j].entries());
  return g;
}

}  // namespace hwg::kernels
