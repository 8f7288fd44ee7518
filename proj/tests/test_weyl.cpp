#include <gtest/gtest.h>

#include <Eigen/SVD>

#include <cmath>

#include "hwgraph/linalg.hpp"
#include "hwgraph/weyl.hpp"
#include "support.hpp"

using namespace hwg;

namespace {

Complex omega(int n) { return std::polar(1.0, 2.0 * 3.14159265358979323846 / n); }

Vector ket(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v[index] = 1.0;
  return v;
}

double vec_distance(std::span<const Complex> a, std::span<const Complex> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST(ShiftClock, PauliCase) {
  const auto [s, m] = shift_clock(2);
  EXPECT_EQ(s, test::pauli_x());
  EXPECT_LE(distance(m, test::pauli_z()), 1e-15);
  EXPECT_THROW(shift_clock(1), std::invalid_argument);
}

TEST(ShiftClock, WeylRelationAtThree) {
  const auto [s, m] = shift_clock(3);
  // Entrywise product without the library kernels.
  Matrix ms(3), sm(3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < 3; ++k) {
        ms(r, c) += m(r, k) * s(k, c);
        sm(r, c) += s(r, k) * m(k, c);
      }
  EXPECT_LE(distance(ms, omega(3) * sm), 1e-15);
}

TEST(ShiftClock, OrderN) {
  for (int n = 2; n <= 9; ++n) {
    const auto [s, m] = shift_clock(n);
    EXPECT_EQ(power(s, static_cast<unsigned>(n)), Matrix::identity(static_cast<std::size_t>(n)));
    EXPECT_LE(distance(power(m, static_cast<unsigned>(n)), Matrix::identity(static_cast<std::size_t>(n))), 1e-13);
  }
}

TEST(EntangledBasis, BellVectorsAtTwo) {
  const EntangledBasis b(2);
  const double h = 1.0 / std::sqrt(2.0);
  const Vector h00{h, 0.0, 0.0, h};
  const Vector h10{h, 0.0, 0.0, -h};
  const Vector h01{0.0, h, h, 0.0};
  EXPECT_LE(vec_distance(b(0, 0), h00), 1e-15);
  EXPECT_LE(vec_distance(b(1, 0), h10), 1e-15);
  EXPECT_LE(vec_distance(b(0, 1), h01), 1e-15);
}

TEST(EntangledBasis, OrthonormalUpToSixteen) {
  for (int n = 2; n <= 16; ++n) {
    const EntangledBasis b(n);
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int k2 = 0; k2 < n; ++k2)
          for (int j2 = 0; j2 < n; ++j2) {
            const Complex ip = inner(b(k, j), b(k2, j2));
            worst = std::max(worst, std::abs(ip - ((k == k2 && j == j2) ? 1.0 : 0.0)));
          }
    EXPECT_LE(worst, 1e-12) << "n = " << n;
  }
}

TEST(EntangledBasis, MaximallyEntangled) {
  // Reshape h_k^j into an n x n matrix; all singular values equal 1/sqrt(n).
  for (int n = 2; n <= 7; ++n) {
    const EntangledBasis b(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        Eigen::MatrixXcd r(n, n);
        for (int a = 0; a < n; ++a)
          for (int c = 0; c < n; ++c) r(a, c) = b(k, j)[static_cast<std::size_t>(a * n + c)];
        const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(r).singularValues();
        for (Eigen::Index i = 0; i < sv.size(); ++i) EXPECT_NEAR(sv(i), 1.0 / std::sqrt(n), 1e-13);
      }
  }
}

TEST(ChangeOfBasis, ColumnsAreBasisVectors) {
  const int n = 4;
  const Matrix w = change_of_basis(n);
  const EntangledBasis b(n);
  EXPECT_LE(unitarity_residual(w), 1e-13);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const Vector col = hwg::apply(w, ket(16, static_cast<std::size_t>(k * n + j)));
      EXPECT_EQ(col, Vector(b(k, j).begin(), b(k, j).end()));
    }
}

TEST(ChangeOfBasis, ExpansionOfProductVectors) {
  // n = 2: |00> = (h_0^0 + h_1^0) / sqrt(2).
  const Vector coeffs = hwg::apply(change_of_basis(2).adjoint(), ket(4, 0));
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_LE(std::abs(coeffs[0] - h), 1e-15);
  EXPECT_LE(std::abs(coeffs[2] - h), 1e-15);
  // |s, s+j> only involves superscript j: coefficient of h_m^{j'} vanishes for j' != j.
  const int n = 5;
  const Matrix w_dag = change_of_basis(n).adjoint();
  for (int s = 0; s < n; ++s)
    for (int j = 0; j < n; ++j) {
      const Vector c = hwg::apply(w_dag, ket(25, static_cast<std::size_t>(s * n + (s + j) % n)));
      for (int m = 0; m < n; ++m)
        for (int j2 = 0; j2 < n; ++j2) {
          const Complex got = c[static_cast<std::size_t>(m * n + j2)];
          const Complex want = j2 == j ? std::polar(1.0 / std::sqrt(n), -2.0 * 3.14159265358979323846 * m * s / n) : 0.0;
          EXPECT_LE(std::abs(got - want), 1e-14);
        }
    }
}

TEST(RepGenerators, ActionOnBasis) {
  for (int n = 2; n <= 6; ++n) {
    const auto g = rep_generators(n);
    const EntangledBasis b(n);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        const Vector s_h = hwg::apply(g.shift, b(k, j));
        EXPECT_LE(vec_distance(s_h, b((k + 1) % n, j)), 1e-13);
        Vector m_h = hwg::apply(g.clock, b(k, j));
        const auto target = b(k, j);
        for (std::size_t i = 0; i < m_h.size(); ++i) m_h[i] -= root_of_unity(n, k) * target[i];
        EXPECT_LE(norm(m_h), 1e-13);
      }
  }
}

TEST(RepGenerators, StandardBasisFormAtTwo) {
  const auto g = rep_generators(2);
  const Matrix z = test::pauli_z();
  const Matrix x = test::pauli_x();
  EXPECT_LE(distance(g.shift, tensor_product(z, Matrix::identity(2))), 1e-15);
  EXPECT_LE(distance(g.clock, tensor_product(x, x)), 1e-15);
}

TEST(GroupElement, MakeAndCompose) {
  const auto g = make_element(5, -1, 7, 12);
  EXPECT_EQ(g, (GroupElement{4, 2, 2}));
  EXPECT_TRUE(is_valid(g, 5));
  EXPECT_FALSE(is_valid({5, 0, 0}, 5));
  // (p,q,r)(p',q',r') = (p+p', q+q', r+r'+q p')
  EXPECT_EQ(compose(5, {1, 2, 0}, {3, 4, 1}), (GroupElement{4, 1, (0 + 1 + 2 * 3) % 5}));
}

TEST(RepElement, Examples) {
  const int n = 3;
  EXPECT_LE(distance(rep_element(n, {0, 0, 0}), Matrix::identity(9)), 1e-15);
  EXPECT_LE(distance(rep_element(n, {1, 0, 0}) * rep_element(n, {2, 0, 0}), rep_element(n, {0, 0, 0})), 1e-13);
  const Matrix lhs = rep_element(n, {0, 1, 0}) * rep_element(n, {1, 0, 0});
  EXPECT_LE(distance(lhs, omega(3) * rep_element(n, {1, 1, 0})), 1e-13);
  EXPECT_THROW(rep_element(n, {3, 0, 0}), std::out_of_range);
}

TEST(RepElement, HomomorphismProperty) {
  // With the central phase carried, pi is an honest homomorphism; on the
  // (p, q) quotient the cocycle exponent is q * p'.
  for (int n = 2; n <= 6; ++n) {
    const WeylRepresentation rep(n);
    const double tol = 1e-11 * n * n;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int p2 = 0; p2 < n; ++p2)
          for (int q2 = 0; q2 < n; q2 += 2) {
            const GroupElement g{p, q, (p + q) % n};
            const GroupElement h{p2, q2, 0};
            EXPECT_LE(distance(rep.element(g) * rep.element(h), rep.element(compose(n, g, h))), tol);
            const Matrix quotient = rep.element({p, q, 0}) * rep.element({p2, q2, 0});
            const Matrix target = root_of_unity(n, 1LL * q * p2) * rep.element(make_element(n, p + p2, q + q2));
            EXPECT_LE(distance(quotient, target), tol);
          }
  }
}

TEST(Representation, ChecksPass) {
  for (int n : {2, 3, 5}) {
    const auto checks = verify_representation(n, 1e-12 * n * n);
    ASSERT_EQ(checks.size(), 5u);
    const char* ids[] = {"rep_unitary", "rep_order", "weyl_relation", "subspace_invariance", "intertwiner"};
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_EQ(checks[i].id, ids[i]);
      EXPECT_TRUE(checks[i].pass) << checks[i].id << " residual " << checks[i].max_residual;
    }
  }
}

TEST(Representation, ConjugateIgnoresPhase) {
  const WeylRepresentation rep(4);
  const Matrix x = test::random_matrix(16, 3);
  EXPECT_LE(distance(rep.conjugate({1, 2, 0}, x), rep.conjugate({1, 2, 3}, x)), 1e-14);
  const Matrix u = rep.element({1, 2, 0});
  EXPECT_LE(distance(rep.conjugate({1, 2, 0}, x), u * x * u.adjoint()), 1e-12);
  EXPECT_EQ(rep.quotient_elements().size(), 16u);
  EXPECT_EQ(rep.quotient_elements()[5], (GroupElement{1, 1, 0}));
}

TEST(Representation, RejectsWrongGeneratorShape) {
  EXPECT_THROW(WeylRepresentation(3, RepGenerators{Matrix::identity(4), Matrix::identity(9)}), DimensionError);
}
