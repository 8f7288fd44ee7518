#include "hwgraph/matrix.hpp"

#include <cmath>
#include <string>

#include "hwgraph/kernels.hpp"

namespace hwg {

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
  if (data_.size() != dim * dim) {
    throw DimensionError("matrix of dim " + std::to_string(dim) + " needs " +
                         std::to_string(dim * dim) + " entries, got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw std::invalid_argument("matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != bra.size()) throw DimensionError("outer: ket and bra lengths differ");
  Matrix m(ket.size());
  m.add_outer(1.0, ket, bra);
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool Matrix::all_finite() const {
  for (const auto& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

void Matrix::add_outer(Complex coeff, std::span<const Complex> ket, std::span<const Complex> bra) {
  if (ket.size() != dim_ || bra.size() != dim_) throw DimensionError("add_outer: vector length mismatch");
  for (std::size_t r = 0; r < dim_; ++r) {
    if (ket[r] == 0.0) continue;
    const Complex a = coeff * ket[r];
    for (std::size_t c = 0; c < dim_; ++c) {
      if (bra[c] == 0.0) continue;
      data_[r * dim_ + c] += mul(a, std::conj(bra[c]));
    }
  }
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(*this, other, "operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(*this, other, "operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(Complex scalar) {
  for (auto& z : data_) z = mul(z, scalar);
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(Complex scalar, Matrix m) { return m *= scalar; }
Matrix operator*(Matrix m, Complex scalar) { return m *= scalar; }
Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return kernels::multiply(lhs, rhs); }

Vector apply(const Matrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw DimensionError("apply: vector length mismatch");
  Vector out(m.dim());
  kernels::gemm(m.entries(), v, out, m.dim(), m.dim(), 1);
  return out;
}

Matrix power(const Matrix& m, unsigned exponent) {
  Matrix result = Matrix::identity(m.dim());
  for (unsigned i = 0; i < exponent; ++i) result = result * m;
  return result;
}

double distance(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "distance");
  double s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += std::norm(ea[i] - eb[i]);
  return std::sqrt(s);
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("inner: vector length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += mul(std::conj(a[i]), b[i]);
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace hwg
