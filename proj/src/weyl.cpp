#include "hwgraph/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hwgraph/kernels.hpp"
#include "hwgraph/linalg.hpp"

namespace hwg {
namespace {

int reduce(long long a, int n) {
  const long long m = a % n;
  return static_cast<int>(m < 0 ? m + n : m);
}

}  // namespace

Complex root_of_unity(int n, long long a) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce(a, n)) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

void require_modulus(int n) {
  if (n < 2) throw std::invalid_argument("modulus n must be at least 2, got " + std::to_string(n));
}

ShiftClock shift_clock(int n) {
  require_modulus(n);
  const auto d = static_cast<std::size_t>(n);
  Matrix s(d);
  Matrix m(d);
  for (int j = 0; j < n; ++j) {
    s(static_cast<std::size_t>(reduce(j + 1, n)), static_cast<std::size_t>(j)) = 1.0;
    m(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = root_of_unity(n, j);
  }
  return {std::move(s), std::move(m)};
}

GroupElement make_element(int n, long long p, long long q, long long r) {
  require_modulus(n);
  return {reduce(p, n), reduce(q, n), reduce(r, n)};
}

bool is_valid(const GroupElement& g, int n) {
  return g.p >= 0 && g.p < n && g.q >= 0 && g.q < n && g.r >= 0 && g.r < n;
}

GroupElement compose(int n, const GroupElement& a, const GroupElement& b) {
  return make_element(n, static_cast<long long>(a.p) + b.p, static_cast<long long>(a.q) + b.q,
                      static_cast<long long>(a.r) + b.r + static_cast<long long>(a.q) * b.p);
}

// ---------------------------------------------------------------------------

EntangledBasis::EntangledBasis(int n) : n_(n) {
  require_modulus(n);
  const auto dn = static_cast<std::size_t>(n);
  const Matrix id = Matrix::identity(dn);
  const Matrix shift = shift_clock(n).shift;
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));

  std::vector<Vector> seeds;  // h_k^0
  for (int k = 0; k < n; ++k) {
    Vector v(dn * dn);
    for (int m = 0; m < n; ++m) {
      const auto idx = static_cast<std::size_t>(m) * dn + static_cast<std::size_t>(m);
      v[idx] = amp * root_of_unity(n, static_cast<long long>(k) * m);
    }
    seeds.push_back(std::move(v));
  }

  vectors_.resize(dn * dn);
  Matrix shift_power = id;  // S^j
  for (int j = 0; j < n; ++j) {
    const Matrix lift = tensor_product(id, shift_power);
    for (int k = 0; k < n; ++k) vectors_[static_cast<std::size_t>(k) * dn + static_cast<std::size_t>(j)] = hwg::apply(lift, seeds[static_cast<std::size_t>(k)]);
    shift_power = shift_power * shift;
  }
}

std::span<const Complex> EntangledBasis::operator()(int k, int j) const {
  if (k < 0 || k >= n_ || j < 0 || j >= n_) throw std::out_of_range("entangled basis index out of range");
  return vectors_[static_cast<std::size_t>(k) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
}

EntangledBasis entangled_basis(int n) { return EntangledBasis(n); }

Matrix change_of_basis(int n) {
  const EntangledBasis basis(n);
  const std::size_t d = basis.ambient_dim();
  const auto dn = static_cast<std::size_t>(n);
  Matrix w(d);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const auto col = static_cast<std::size_t>(k) * dn + static_cast<std::size_t>(j);
      const auto h = basis(k, j);
      for (std::size_t row = 0; row < d; ++row) w(row, col) = h[row];
    }
  return w;
}

RepGenerators rep_generators(int n) {
  // In entangled coordinates (index k * n + j) pi(S) shifts k and pi(M)
  // multiplies by omega^k, i.e. S (x) I and M (x) I.
  const auto [s, m] = shift_clock(n);
  const Matrix id = Matrix::identity(static_cast<std::size_t>(n));
  const Matrix w = change_of_basis(n);
  const Matrix w_dag = w.adjoint();
  // Both results are monomial matrices; the basis change leaves O(eps) residue
  // where exact zeros belong. Clearing it keeps every later product sparse.
  auto chop = [](Matrix x) {
    for (auto& z : x.entries())
      if (std::abs(z) < 1e-13) z = 0.0;
    return x;
  };
  return {chop(w * tensor_product(s, id) * w_dag), chop(w * tensor_product(m, id) * w_dag)};
}

// ---------------------------------------------------------------------------

WeylRepresentation::WeylRepresentation(int n) : WeylRepresentation(n, rep_generators(n)) {}

WeylRepresentation::WeylRepresentation(int n, RepGenerators generators)
    : n_(n), basis_(n), gens_(std::move(generators)) {
  if (gens_.shift.dim() != dim() || gens_.clock.dim() != dim()) {
    throw DimensionError("representation generators must have dimension n^2");
  }
  shift_powers_.push_back(Matrix::identity(dim()));
  clock_powers_.push_back(Matrix::identity(dim()));
  for (int i = 1; i < n; ++i) {
    shift_powers_.push_back(shift_powers_.back() * gens_.shift);
    clock_powers_.push_back(clock_powers_.back() * gens_.clock);
  }
}

Matrix WeylRepresentation::element(const GroupElement& g) const {
  if (!is_valid(g, n_)) throw std::out_of_range("group element components must lie in [0, n)");
  Matrix out = shift_powers_[static_cast<std::size_t>(g.p)] * clock_powers_[static_cast<std::size_t>(g.q)];
  if (g.r != 0) out *= root_of_unity(n_, g.r);
  return out;
}

Matrix WeylRepresentation::conjugate(const GroupElement& g, const Matrix& x) const {
  return kernels::conjugate(element({g.p, g.q, 0}), x);
}

std::vector<GroupElement> WeylRepresentation::quotient_elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q < n_; ++q) out.push_back({p, q, 0});
  return out;
}

Matrix rep_element(int n, const GroupElement& g) { return WeylRepresentation(n).element(g); }

// ---------------------------------------------------------------------------

std::vector<CheckResult> verify_representation(int n, double tol) {
  return verify_representation(WeylRepresentation(n), tol);
}

std::vector<CheckResult> verify_representation(const WeylRepresentation& rep, double tol) {
  const int n = rep.n();
  const std::size_t d = rep.dim();
  const Matrix& ps = rep.shift();
  const Matrix& pm = rep.clock();
  const Matrix id = Matrix::identity(d);
  const EntangledBasis& basis = rep.basis();
  std::vector<CheckResult> out;

  out.push_back(residual_check("rep_unitary", std::max(unitarity_residual(ps), unitarity_residual(pm)), tol));

  const auto un = static_cast<unsigned>(n);
  out.push_back(residual_check("rep_order", std::max(distance(power(ps, un), id), distance(power(pm, un), id)), tol));

  out.push_back(residual_check("weyl_relation", distance(pm * ps, root_of_unity(n, 1) * (ps * pm)), tol));

  // (I - Pi_j) U Pi_j must vanish for each multiplicity space H_j.
  double invariance = 0.0;
  for (int j = 0; j < n; ++j) {
    Matrix pi_j(d);
    for (int k = 0; k < n; ++k) pi_j.add_outer(1.0, basis(k, j), basis(k, j));
    const Matrix outside = id - pi_j;
    for (const Matrix* u : {&ps, &pm}) invariance = std::max(invariance, (outside * (*u) * pi_j).frobenius_norm());
  }
  out.push_back(residual_check("subspace_invariance", invariance, tol));

  // |k> -> h_k^j carries (S, M) on C^n to (pi(S), pi(M)) on H_j.
  const ShiftClock sc = shift_clock(n);
  double intertwining = 0.0;
  for (int j = 0; j < n; ++j) {
    for (const auto& [big, small] : {std::pair{&ps, &sc.shift}, std::pair{&pm, &sc.clock}}) {
      double sq = 0.0;
      for (int k = 0; k < n; ++k) {
        Vector diff = hwg::apply(*big, basis(k, j));
        for (int l = 0; l < n; ++l) {
          const Complex c = (*small)(static_cast<std::size_t>(l), static_cast<std::size_t>(k));
          if (c == 0.0) continue;
          const auto h = basis(l, j);
          for (std::size_t t = 0; t < d; ++t) diff[t] -= c * h[t];
        }
        sq += std::pow(norm(diff), 2);
      }
      intertwining = std::max(intertwining, std::sqrt(sq));
    }
  }
  out.push_back(residual_check("intertwiner", intertwining, tol));
  return out;
}

}  // namespace hwg
