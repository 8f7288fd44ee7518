#pragma once

#include <Eigen/Dense>

#include <random>

#include "hwgraph/matrix.hpp"

namespace hwg::test {

inline Eigen::MatrixXcd to_eigen(const Matrix& m) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd out(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return out;
}

inline Matrix from_eigen(const Eigen::MatrixXcd& m) {
  Matrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
  return out;
}

inline Matrix random_matrix(std::size_t dim, std::uint64_t seed, double zero_fraction = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Matrix m(dim);
  for (auto& z : m.entries()) {
    if (coin(rng) < zero_fraction) continue;
    z = {u(rng), u(rng)};
  }
  return m;
}

/// Haar-ish unitary from the QR factor of a random matrix.
inline Matrix random_unitary(std::size_t dim, std::uint64_t seed) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(random_matrix(dim, seed)));
  return from_eigen(qr.householderQ() * Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim)));
}

inline Matrix pauli_x() { return Matrix(2, {0.0, 1.0, 1.0, 0.0}); }
inline Matrix pauli_z() { return Matrix(2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace hwg::test
