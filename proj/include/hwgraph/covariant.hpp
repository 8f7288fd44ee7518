#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hwgraph/check.hpp"
#include "hwgraph/matrix.hpp"
#include "hwgraph/weyl.hpp"

namespace hwg {

/// Matrix units of the fixed-point algebra: x[p][q] = sum_k |h_k^p><h_k^q|.
struct FixedPointUnits {
  int n = 0;
  std::vector<Matrix> units;  // index p * n + q

  const Matrix& operator()(int p, int q) const;
};

FixedPointUnits fixed_units(int n);
FixedPointUnits fixed_units(const EntangledBasis& basis);

/// Tr(a b) without forming the product.
Complex trace_product(const Matrix& a, const Matrix& b);

/// Group average (1/n^2) sum_{p,q} pi(S)^p pi(M)^q x (...)^dagger, summed in
/// lexicographic (p, q) order.
Matrix expectation_avg(const WeylRepresentation& rep, const Matrix& x);
Matrix expectation_avg(int n, const Matrix& x);

/// Trace form (1/n) sum_{p,q} Tr(x_qp x) x_pq, lexicographic (p, q) order.
Matrix expectation_trace(const FixedPointUnits& units, const Matrix& x);
Matrix expectation_trace(int n, const Matrix& x, const FixedPointUnits& units);

/// Projection onto span{|s, s+k mod n> : k}, i.e. |s><s| (x) I.
Matrix q_projection(int n, int s);

/// Covariant resolution of identity over the (p, q) quotient with uniform
/// weight 1/n^2 and base operator M0 = n Q_s.
struct CovariantResolution {
  int n = 0;
  int s = 0;
  std::vector<Matrix> atoms;  // index p * n + q
  Matrix base_operator;

  const Matrix& atom(const GroupElement& g) const;
  Matrix total() const;
};

CovariantResolution covariant_resolution(const WeylRepresentation& rep, int s);
CovariantResolution covariant_resolution(int n, int s);

/// ||E(Q_s) - I/n||_F over every member of `q_family`, both expectation forms.
CheckResult check_q_average(const WeylRepresentation& rep, const FixedPointUnits& units,
                            std::span<const Matrix> q_family, double tol);
CheckResult check_q_average(int n, double tol);

/// Deterministic random Hermitian matrix with unit Frobenius norm.
Matrix random_hermitian(std::size_t dim, std::uint64_t seed);

CheckResult check_expectation_forms(const WeylRepresentation& rep, const FixedPointUnits& units,
                                    std::span<const Matrix> samples, double tol);
/// Idempotence, unitality and trace preservation of the group average.
CheckResult check_expectation_idempotent(const WeylRepresentation& rep, std::span<const Matrix> samples,
                                         double tol);
/// Total mass I and positivity of every atom.
CheckResult check_resolution_mass(const CovariantResolution& res, double tol);
/// Ad(h)(atom(g)) = atom(h g); all h when `all_pairs`, otherwise h in {pi(S), pi(M)}.
CheckResult check_resolution_covariance(const WeylRepresentation& rep, const CovariantResolution& res,
                                        bool all_pairs, double tol);

}  // namespace hwg
