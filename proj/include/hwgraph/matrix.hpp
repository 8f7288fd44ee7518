#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwg {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Thrown when operands disagree on dimension.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square complex matrix in double precision, stored row-major.
///
/// This is the carrier for every operator in B(H). Entries are finite by
/// construction when built through the checked constructor; arithmetic
/// helpers do not re-validate.
class Matrix {
 public:
  explicit Matrix(std::size_t dim);
  Matrix(std::size_t dim, std::vector<Complex> entries);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const Complex> diag);
  /// |ket><bra|
  static Matrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t dim() const noexcept { return dim_; }

  Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  Matrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  /// this += coeff * |ket><bra|
  void add_outer(Complex coeff, std::span<const Complex> ket, std::span<const Complex> bra);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scalar);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// a * b without the inf/NaN recovery of std::complex operator*; all values
/// handled here are finite.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(Complex scalar, Matrix m);
Matrix operator*(Matrix m, Complex scalar);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);

Vector apply(const Matrix& m, std::span<const Complex> v);
Matrix power(const Matrix& m, unsigned exponent);

/// ||a - b||_F
double distance(const Matrix& a, const Matrix& b);

/// <a|b>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

void require_same_dim(const Matrix& a, const Matrix& b, const char* what);

}  // namespace hwg
