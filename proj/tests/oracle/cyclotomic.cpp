#include "cyclotomic.hpp"

#include <stdexcept>

namespace oracle {
namespace {

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic b.
Poly poly_div(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {0};
  const auto db = static_cast<long>(b.size()) - 1;
  Poly q(a.size() - b.size() + 1);
  for (auto i = static_cast<long>(a.size()) - 1; i >= db; --i) {
    const Int coeff = a[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - db)] = coeff;
    for (long j = 0; j <= db; ++j) a[static_cast<std::size_t>(i - db + j)] -= coeff * b[static_cast<std::size_t>(j)];
  }
  return q;
}

}  // namespace

Poly cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Poly p(static_cast<std::size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div(p, cyclotomic_polynomial(d));
  trim(p);
  return p;
}

Poly remainder(Poly a, const Poly& monic) {
  const std::size_t deg = monic.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    const Int coeff = a[i];
    if (coeff == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= coeff * monic[j];
  }
  a.resize(deg);
  return a;
}

int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) {
    int a = k, b = n;
    while (b) {
      const int t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++count;
  }
  return count;
}

Cyc Cyc::power(int n, long long e) {
  Cyc out = zero(n);
  out.c[static_cast<std::size_t>(((e % n) + n) % n)] = 1;
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& v : c)
    if (v != 0) return false;
  return true;
}

Cyc add(const Cyc& a, const Cyc& b) {
  Cyc out = a;
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

Cyc mul(const Cyc& a, const Cyc& b) {
  const std::size_t n = a.c.size();
  Cyc out{std::vector<Int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b.c[j] != 0) out.c[(i + j) % n] += a.c[i] * b.c[j];
  }
  return out;
}

Cyc conj(const Cyc& a) {
  const std::size_t n = a.c.size();
  Cyc out{std::vector<Int>(n)};
  for (std::size_t i = 0; i < n; ++i) out.c[(n - i) % n] = a.c[i];
  return out;
}

CycMatrix matmul(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
  CycMatrix out(a.n, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Cyc& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const Cyc& y = b(k, j);
        if (!y.is_zero()) out(i, j) = add(out(i, j), mul(x, y));
      }
    }
  return out;
}

CycMatrix adjoint(const CycMatrix& a) {
  CycMatrix out(a.n, a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out(j, i) = conj(a(i, j));
  return out;
}

std::size_t integer_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t gram_rank(const std::vector<CycMatrix>& ops) {
  if (ops.empty()) return 0;
  const int n = ops[0].n;
  const Poly phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  const std::size_t r = ops.size();

  // Gram entries Tr(A_i^dagger A_j) = sum_t conj(A_i[t]) A_j[t], reduced to
  // the power basis 1, omega, ..., omega^{deg-1}.
  std::vector<Poly> gram(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Cyc acc = Cyc::zero(n);
      for (std::size_t t = 0; t < ops[i].e.size(); ++t) {
        const Cyc& a = ops[i].e[t];
        const Cyc& b = ops[j].e[t];
        if (a.is_zero() || b.is_zero()) continue;
        acc = add(acc, mul(conj(a), b));
      }
      gram[i * r + j] = remainder(acc.c, phi);
    }

  // Q(omega)^r -> Q^{r deg}: each entry becomes its multiplication matrix.
  // The Q-rank of the result is deg times the Q(omega)-rank.
  std::vector<std::vector<Int>> big(r * deg, std::vector<Int>(r * deg));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t t = 0; t < deg; ++t) {
        Poly shifted(t, Int(0));
        shifted.insert(shifted.end(), gram[i * r + j].begin(), gram[i * r + j].end());
        const Poly col = remainder(shifted, phi);
        for (std::size_t s = 0; s < deg; ++s) big[i * deg + s][j * deg + t] = col[s];
      }
  const std::size_t q_rank = integer_rank(std::move(big));
  if (q_rank % deg != 0) throw std::logic_error("gram_rank: rational rank not a multiple of phi(n)");
  return q_rank / deg;
}

}  // namespace oracle
