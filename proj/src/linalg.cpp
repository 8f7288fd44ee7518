#include <cmath>
#include <numbers>

#include "hwgraph/kernels.hpp"
#include "hwgraph/linalg.hpp"

namespace hwg {

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  Matrix out(da * db);
  for (std::size_t ar = 0; ar < da; ++ar)
    for (std::size_t ac = 0; ac < da; ++ac) {
      const Complex x = a(ar, ac);
      if (x == 0.0) continue;
      for (std::size_t br = 0; br < db; ++br)
        for (std::size_t bc = 0; bc < db; ++bc) out(ar * db + br, ac * db + bc) = x * b(br, bc);
    }
  return out;
}

Complex hs_inner(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "hs_inner");
  return inner(a.entries(), b.entries());
}

Matrix dft_unitary(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dft_unitary: n must be positive");
  Matrix f(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      // Reduce the exponent first so the phase argument stays in [0, 2 pi).
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n);
      f(k, j) = std::polar(scale, angle);
    }
  return f;
}

double unitarity_residual(const Matrix& u) {
  return distance(kernels::multiply(u.adjoint(), u), Matrix::identity(u.dim()));
}

}  // namespace hwg
