#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hwgraph/kernels.hpp"
#include "hwgraph/linalg.hpp"

namespace hwg {
namespace {

Eigen::MatrixXcd to_eigen(const Matrix& m) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd out(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) out(r, c) = m(r, c);
  return out;
}

double argument_01(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

// Single-linkage clusters of points already sorted by argument. Neighbours
// on the circle (including last -> first) closer than `gap` are joined.
std::vector<std::vector<std::size_t>> circular_clusters(const std::vector<Complex>& sorted, double gap) {
  const std::size_t m = sorted.size();
  std::vector<bool> cut_after(m, false);
  bool any_cut = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(sorted[(i + 1) % m] - sorted[i]) > gap) {
      cut_after[i] = true;
      any_cut = true;
    }
  }
  std::vector<std::vector<std::size_t>> clusters;
  if (!any_cut || m == 1) {
    clusters.emplace_back(m);
    std::iota(clusters.back().begin(), clusters.back().end(), std::size_t{0});
    return clusters;
  }
  std::size_t start = 0;
  while (!cut_after[start]) ++start;
  start = (start + 1) % m;
  std::vector<std::size_t> current;
  for (std::size_t step = 0; step < m; ++step) {
    const std::size_t i = (start + step) % m;
    current.push_back(i);
    if (cut_after[i]) {
      clusters.push_back(std::move(current));
      current.clear();
    }
  }
  return clusters;
}

// Index sets of the connected components of the graph with an edge i - j
// whenever m(i, j) != 0, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> sparsity_components(const Matrix& m) {
  const std::size_t d = m.dim();
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (m(r, c) != 0.0) {
        const std::size_t a = find(r);
        const std::size_t b = find(c);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == d) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(i);
  }
  return out;
}

}  // namespace

NotUnitaryError::NotUnitaryError(double residual, double bound)
    : std::invalid_argument([&] {
        std::ostringstream os;
        os << "matrix is not unitary: ||U^dagger U - I||_F = " << residual << " exceeds " << bound;
        return os.str();
      }()),
      residual_(residual) {}

DegenerateClusteringError::DegenerateClusteringError(double gap)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "degenerate clustering: eigenvalue gap " << gap << " lies between candidate thresholds";
        return os.str();
      }()),
      gap_(gap) {}

std::vector<double> hermitian_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> projection_isometry(const Matrix& p, std::size_t rank) {
  if (rank > p.dim()) throw std::invalid_argument("projection_isometry: rank exceeds dimension");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(p));
  const auto d = p.dim();
  std::vector<Complex> block(d * rank);
  const auto& vecs = solver.eigenvectors();
  // Eigenvalues ascend; the range of P is the last `rank` columns.
  for (std::size_t c = 0; c < rank; ++c) {
    const auto col = static_cast<Eigen::Index>(d - rank + c);
    for (std::size_t r = 0; r < d; ++r) block[r * rank + c] = vecs(static_cast<Eigen::Index>(r), col);
  }
  return block;
}

Matrix SpectralDecomposition::reconstruct() const {
  if (projectors.empty()) throw std::logic_error("empty spectral decomposition");
  Matrix out(projectors.front().dim());
  for (std::size_t c = 0; c < size(); ++c) out += eigenvalues[c] * projectors[c];
  return out;
}

SpectralDecomposition spectral_projections(const Matrix& u, double tol) {
  const std::size_t d = u.dim();
  const double bound = tol * static_cast<double>(d);
  const double unit_res = unitarity_residual(u);
  if (unit_res > bound) throw NotUnitaryError(unit_res, bound);

  // u is block diagonal up to a permutation along the connected components of
  // its sparsity pattern; each block is decomposed on its own. For a normal
  // block the Schur factor is diagonal up to rounding and the Schur vectors
  // are orthonormal eigenvectors.
  std::vector<Complex> raw_values;
  std::vector<std::vector<Complex>> raw_vectors;
  for (const auto& block : sparsity_components(u)) {
    const auto b = static_cast<Eigen::Index>(block.size());
    Eigen::MatrixXcd sub(b, b);
    for (Eigen::Index r = 0; r < b; ++r)
      for (Eigen::Index c = 0; c < b; ++c) sub(r, c) = u(block[static_cast<std::size_t>(r)], block[static_cast<std::size_t>(c)]);
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(sub);
    const Eigen::MatrixXcd& q = schur.matrixU();
    const Eigen::MatrixXcd& t = schur.matrixT();
    for (Eigen::Index i = 0; i < b; ++i) {
      raw_values.push_back(t(i, i));
      std::vector<Complex> vec(d);
      for (Eigen::Index r = 0; r < b; ++r) vec[block[static_cast<std::size_t>(r)]] = q(r, i);
      raw_vectors.push_back(std::move(vec));
    }
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return argument_01(raw_values[a]) < argument_01(raw_values[b]);
  });
  std::vector<Complex> ev(d);
  for (std::size_t i = 0; i < d; ++i) ev[i] = raw_values[order[i]];

  const auto coarse = circular_clusters(ev, 100.0 * tol);
  const auto fine = circular_clusters(ev, tol);
  if (coarse.size() != fine.size()) {
    double ambiguous = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double g = std::abs(ev[(i + 1) % d] - ev[i]);
      if (g > tol && g <= 100.0 * tol) {
        ambiguous = g;
        break;
      }
    }
    throw DegenerateClusteringError(ambiguous);
  }

  struct Cluster {
    Complex centre;
    std::vector<std::size_t> columns;
    double key;
  };
  std::vector<Cluster> found;
  for (const auto& members : circular_clusters(ev, 10.0 * tol)) {
    Complex mean = 0.0;
    std::vector<std::size_t> columns;
    for (auto i : members) {
      mean += ev[i];
      columns.push_back(order[i]);
    }
    std::sort(columns.begin(), columns.end());
    mean /= static_cast<double>(members.size());
    const Complex unit = mean / std::abs(mean);
    double key = argument_01(unit);
    if (2.0 * std::numbers::pi - key <= 10.0 * tol) key = 0.0;
    found.push_back({unit, std::move(columns), key});
  }
  std::stable_sort(found.begin(), found.end(), [](const Cluster& a, const Cluster& b) { return a.key < b.key; });

  SpectralDecomposition out;
  for (const auto& c : found) {
    const std::size_t rank = c.columns.size();
    std::vector<Complex> block(d * rank);
    Matrix proj(d);
    for (std::size_t col = 0; col < rank; ++col) {
      const auto& ket = raw_vectors[c.columns[col]];
      for (std::size_t r = 0; r < d; ++r) block[r * rank + col] = ket[r];
      proj.add_outer(1.0, ket, ket);
    }
    out.eigenvalues.push_back(c.centre);
    out.projectors.push_back(std::move(proj));
    out.ranks.push_back(rank);
    out.bases.push_back(std::move(block));
  }

  const double check_tol = 100.0 * tol * static_cast<double>(d);
  Matrix total(d);
  for (const auto& p : out.projectors) total += p;
  if (distance(total, Matrix::identity(d)) > check_tol || distance(out.reconstruct(), u) > check_tol) {
    throw std::runtime_error("spectral_projections: decomposition failed its reconstruction check");
  }
  return out;
}

}  // namespace hwg
