#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hwgraph/check.hpp"
#include "hwgraph/matrix.hpp"

namespace hwg {

/// exp(2 pi i a / n), with `a` reduced mod n before the phase is evaluated.
Complex root_of_unity(int n, long long a);

/// Throws std::invalid_argument unless n >= 2.
void require_modulus(int n);

struct ShiftClock {
  Matrix shift;  ///< S|j> = |j+1 mod n>
  Matrix clock;  ///< M|j> = omega^j |j>
};

ShiftClock shift_clock(int n);

/// omega^r S^p M^q. Conjugation ignores r.
struct GroupElement {
  int p = 0;
  int q = 0;
  int r = 0;

  bool operator==(const GroupElement&) const = default;
};

GroupElement make_element(int n, long long p, long long q, long long r = 0);
bool is_valid(const GroupElement& g, int n);

/// Group law forced by M^q S^p' = omega^{q p'} S^p' M^q.
GroupElement compose(int n, const GroupElement& a, const GroupElement& b);

/// The n^2 vectors h_k^j = (I (x) S^j) (1/sqrt n) sum_m omega^{km} |mm>.
class EntangledBasis {
 public:
  explicit EntangledBasis(int n);

  int n() const noexcept { return n_; }
  std::size_t ambient_dim() const noexcept { return static_cast<std::size_t>(n_) * n_; }

  /// h_k^j
  std::span<const Complex> operator()(int k, int j) const;

 private:
  int n_;
  std::vector<Vector> vectors_;  // index k * n + j
};

EntangledBasis entangled_basis(int n);

/// Unitary whose column k * n + j is h_k^j.
Matrix change_of_basis(int n);

/// pi(S) and pi(M) in the product basis.
struct RepGenerators {
  Matrix shift;
  Matrix clock;
};

RepGenerators rep_generators(int n);

/// The reducible representation pi of G_n on C^n (x) C^n with cached powers of
/// its generators.
class WeylRepresentation {
 public:
  explicit WeylRepresentation(int n);
  /// Uses caller-supplied generator matrices (e.g. deliberately corrupted ones).
  WeylRepresentation(int n, RepGenerators generators);

  int n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(n_) * n_; }
  const Matrix& shift() const noexcept { return gens_.shift; }
  const Matrix& clock() const noexcept { return gens_.clock; }
  const EntangledBasis& basis() const noexcept { return basis_; }

  /// omega^r pi(S)^p pi(M)^q
  Matrix element(const GroupElement& g) const;
  /// pi(g) x pi(g)^dagger
  Matrix conjugate(const GroupElement& g, const Matrix& x) const;

  /// All (p, q) with r = 0, lexicographic.
  std::vector<GroupElement> quotient_elements() const;

 private:
  int n_;
  EntangledBasis basis_;
  RepGenerators gens_;
  std::vector<Matrix> shift_powers_;
  std::vector<Matrix> clock_powers_;
};

Matrix rep_element(int n, const GroupElement& g);

/// Checks rep_unitary, rep_order, weyl_relation, subspace_invariance and
/// intertwiner, in that order.
std::vector<CheckResult> verify_representation(int n, double tol);
std::vector<CheckResult> verify_representation(const WeylRepresentation& rep, double tol);

}  // namespace hwg
