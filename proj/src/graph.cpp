#include "hwgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <utility>

#include "hwgraph/covariant.hpp"
#include "hwgraph/kernels.hpp"

namespace hwg {
namespace {

using SparseEntries = std::vector<std::pair<std::size_t, Complex>>;

SparseEntries nonzeros(const Matrix& m) {
  SparseEntries out;
  const auto e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0.0) out.emplace_back(i, e[i]);
  return out;
}

void accumulate(Matrix& dst, Complex coeff, const SparseEntries& src) {
  auto e = dst.entries();
  for (const auto& [idx, z] : src) e[idx] += mul(coeff, z);
}

std::size_t cell_index(int n, int a, int b) {
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b);
}

int wrap(int a, int n) { return ((a % n) + n) % n; }

struct KLTerm {
  Complex lambda;
  double residual;
};

// Operators with their nonzero entries listed once, for reuse across many
// projections.
struct KLOperands {
  std::span<const Matrix> ops;
  std::vector<SparseEntries> nz;

  explicit KLOperands(std::span<const Matrix> o) : ops(o) {
    for (const auto& m : ops) nz.push_back(nonzeros(m));
  }
};

// V^dagger X V = lambda I + rest; ||PXP - lambda P||_F = ||rest||_F for P = V V^dagger.
std::vector<KLTerm> kl_terms(const KLOperands& operands, std::span<const Complex> isometry, std::size_t rank) {
  const auto& ops = operands.ops;
  if (ops.empty()) return {};
  const std::size_t d = ops.front().dim();
  if (isometry.size() != d * rank) throw DimensionError("isometry block must be dim x rank");
  std::vector<Complex> adj(rank * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < rank; ++c) adj[c * d + r] = std::conj(isometry[r * rank + c]);

  std::vector<KLTerm> out(ops.size());
  const auto count = static_cast<std::int64_t>(ops.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ii = 0; ii < count; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    std::vector<Complex> compressed(rank * rank);
    const SparseEntries& nz = operands.nz[i];
    if (nz.size() * rank * rank < d * d + nz.size() * rank + rank * rank * d) {
      // Few nonzeros: accumulate conj(V[a][r]) X[a][b] V[b][c] entry by entry.
      double* out_d = reinterpret_cast<double*>(compressed.data());
      const double* v_d = reinterpret_cast<const double*>(isometry.data());
      for (const auto& [idx, xab] : nz) {
        const std::size_t a = idx / d;
        const std::size_t b = idx % d;
        const double* vrow = v_d + 2 * b * rank;
        for (std::size_t r = 0; r < rank; ++r) {
          const Complex t = adj[r * d + a] * xab;
          const double tr = t.real();
          const double ti = t.imag();
          double* orow = out_d + 2 * r * rank;
          for (std::size_t c = 0; c < rank; ++c) {
            orow[2 * c] += tr * vrow[2 * c] - ti * vrow[2 * c + 1];
            orow[2 * c + 1] += tr * vrow[2 * c + 1] + ti * vrow[2 * c];
          }
        }
      }
    } else {
      std::vector<Complex> xv(d * rank);
      kernels::gemm(ops[i].entries(), isometry, xv, d, d, rank);
      kernels::gemm(adj, xv, compressed, rank, d, rank);
    }
    Complex tr = 0.0;
    for (std::size_t c = 0; c < rank; ++c) tr += compressed[c * rank + c];
    const Complex lambda = tr / static_cast<double>(rank);
    double sq = 0.0;
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t c = 0; c < rank; ++c) sq += std::norm(compressed[r * rank + c] - (r == c ? lambda : Complex{}));
    out[i] = {lambda, std::sqrt(sq)};
  }
  return out;
}

AnticliqueReport kl_report(std::span<const LabeledOperator> generators, const KLOperands& operands,
                           std::span<const Complex> isometry, std::size_t rank, double tol) {
  if (rank == 0) throw NotAProjectionError("projection has rank 0");
  const auto terms = kl_terms(operands, isometry, rank);
  AnticliqueReport out;
  out.rank = rank;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    out.lambda.push_back({generators[i].label, terms[i].lambda, terms[i].residual});
    out.max_residual = std::max(out.max_residual, terms[i].residual);
  }
  out.is_anticlique = rank >= 2 && out.max_residual <= tol;
  return out;
}

std::vector<Matrix> operators_of(std::span<const LabeledOperator> labeled) {
  std::vector<Matrix> ops;
  ops.reserve(labeled.size());
  for (const auto& l : labeled) ops.push_back(l.op);
  return ops;
}

std::string format_spectrum(const std::vector<double>& spectrum) {
  std::string out = "[";
  char buf[32];
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", spectrum[i] + 0.0);
    if (i) out += ", ";
    out += buf;
  }
  return out + "]";
}

std::string format_residual(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", r);
  return buf;
}

}  // namespace

const Matrix& MatrixGrid::operator()(int a, int b) const {
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::out_of_range("grid index out of range");
  return cells[cell_index(n, a, b)];
}

MatrixGrid y_units(const EntangledBasis& basis) {
  const int n = basis.n();
  MatrixGrid y{n, {}};
  for (int m = 0; m < n; ++m)
    for (int l = 0; l < n; ++l) {
      Matrix cell(basis.ambient_dim());
      for (int k = 0; k < n; ++k) cell.add_outer(1.0, basis(m, k), basis(l, k));
      y.cells.push_back(std::move(cell));
    }
  return y;
}

MatrixGrid y_units(int n) { return y_units(EntangledBasis(n)); }

std::vector<LabeledOperator> orbit_generators(const WeylRepresentation& rep, const Matrix& base) {
  std::vector<LabeledOperator> out;
  for (const auto& g : rep.quotient_elements()) out.push_back({g, rep.conjugate(g, base)});
  return out;
}

OperatorGraph graph_orbit(const WeylRepresentation& rep, int s, double tol) {
  auto provenance = orbit_generators(rep, q_projection(rep.n(), s));
  const auto ops = operators_of(provenance);
  return {rep.n(), s, span_operators(ops, tol), std::move(provenance)};
}

OperatorGraph graph_orbit(int n, int s, double tol) { return graph_orbit(WeylRepresentation(n), s, tol); }

std::vector<Matrix> h_generators(const MatrixGrid& y) {
  const int n = y.n;
  std::vector<Matrix> out;
  Matrix h0(y.cells.front().dim());
  for (int m = 0; m < n; ++m) h0 += y(m, m);
  out.push_back(std::move(h0));
  for (int p = 1; p < n; ++p) {
    Matrix hp(y.cells.front().dim());
    for (int m = 0; m < n; ++m) {
      hp += y(wrap(m + p, n), m);
      hp += y(m, wrap(m + p, n));
    }
    out.push_back(std::move(hp));
  }
  return out;
}

std::vector<Matrix> h_generators(int n) { return h_generators(y_units(n)); }

ZFamily z_generators(const MatrixGrid& y, int j) {
  const int n = y.n;
  if (j < 0 || j >= n) throw std::out_of_range("z_generators: j out of range");
  const std::size_t d = y.cells.front().dim();
  std::vector<SparseEntries> sparse;
  for (const auto& cell : y.cells) sparse.push_back(nonzeros(cell));

  ZFamily out{n, j, MatrixGrid{n, std::vector<Matrix>(static_cast<std::size_t>(n) * n, Matrix(d))}, {}};
  const auto cells = static_cast<std::int64_t>(n) * n;
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < cells; ++idx) {
    const int q = static_cast<int>(idx / n);
    const int p = static_cast<int>(idx % n);
    Matrix& z = out.grid.cells[static_cast<std::size_t>(idx)];
    for (int m = 0; m < n; ++m)
      for (int l = 0; l < n; ++l) {
        const Complex phase = root_of_unity(n, static_cast<long long>(m - l) * (p - j));
        accumulate(z, phase, sparse[cell_index(n, wrap(m + q, n), wrap(l + q, n))]);
      }
  }
  for (int c = 0; c < n; ++c) {
    Matrix z(d);
    for (int m = 0; m < n; ++m)
      for (int l = 0; l < n; ++l) accumulate(z, root_of_unity(n, static_cast<long long>(c) * (m - l)), sparse[cell_index(n, m, l)]);
    out.reduced.push_back(std::move(z));
  }
  return out;
}

ZFamily z_generators(int n, int j) { return z_generators(y_units(n), j); }

Matrix anticlique_projector(const EntangledBasis& basis, int k) {
  const int n = basis.n();
  if (k < 0 || k >= n) throw std::out_of_range("anticlique_projector: k out of range");
  Matrix p(basis.ambient_dim());
  for (int j = 0; j < n; ++j) p.add_outer(1.0, basis(k, j), basis(k, j));
  return p;
}

Matrix anticlique_projector(int n, int k) { return anticlique_projector(EntangledBasis(n), k); }

std::vector<Vector> code_subspace(const EntangledBasis& basis, int k) {
  const int n = basis.n();
  if (k < 0 || k >= n) throw std::out_of_range("code_subspace: k out of range");
  std::vector<Vector> out;
  for (int j = 0; j < n; ++j) {
    const auto h = basis(k, j);
    out.emplace_back(h.begin(), h.end());
  }
  return out;
}

std::vector<Vector> code_subspace(int n, int k) { return code_subspace(EntangledBasis(n), k); }

// ---------------------------------------------------------------------------

std::size_t projection_rank(const Matrix& p, double tol) {
  const double herm = distance(p, p.adjoint());
  const double idem = distance(p * p, p);
  if (herm > tol || idem > tol) {
    throw NotAProjectionError("operator is not an orthogonal projection (hermiticity residual " +
                              format_residual(herm) + ", idempotence residual " + format_residual(idem) + ")");
  }
  const Complex tr = p.trace();
  const double rounded = std::round(tr.real());
  if (std::abs(tr.real() - rounded) > 1e-8 || std::abs(tr.imag()) > 1e-8) {
    throw NotAProjectionError("projection trace is not an integer");
  }
  if (rounded < 0.5) throw NotAProjectionError("projection has rank 0");
  return static_cast<std::size_t>(rounded);
}

AnticliqueReport check_knill_laflamme(std::span<const LabeledOperator> generators, std::span<const Complex> isometry,
                                      std::size_t rank, double tol) {
  const auto ops = operators_of(generators);
  return kl_report(generators, KLOperands(ops), isometry, rank, tol);
}

AnticliqueReport check_knill_laflamme(std::span<const LabeledOperator> generators, const Matrix& p, double tol) {
  const std::size_t rank = projection_rank(p, tol);
  return check_knill_laflamme(generators, projection_isometry(p, rank), rank, tol);
}

AnticliqueReport check_knill_laflamme_reference(std::span<const LabeledOperator> generators, const Matrix& p,
                                                double tol) {
  const std::size_t rank = projection_rank(p, tol);
  AnticliqueReport out;
  out.rank = rank;
  for (const auto& g : generators) {
    const Matrix pxp = kernels::multiply_reference(kernels::multiply_reference(p, g.op), p);
    const Complex lambda = pxp.trace() / p.trace();
    const double residual = distance(pxp, lambda * p);
    out.lambda.push_back({g.label, lambda, residual});
    out.max_residual = std::max(out.max_residual, residual);
  }
  out.is_anticlique = rank >= 2 && out.max_residual <= tol;
  return out;
}

// ---------------------------------------------------------------------------

std::size_t SpectralScan::anticlique_count() const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [](const SpectralFinding& f) { return f.anticlique; }));
}

std::string SpectralScan::summary() const {
  std::ostringstream os;
  os << "spectral scan (s=" << s << "): " << common_all << " rank>=2 projections common to all elements ("
     << common_nonidentity << " excluding identity); " << anticlique_count() << "/" << findings.size()
     << " rank>=2 spectral projections are anticliques";
  return os.str();
}

SpectralScan spectral_projection_scan(const WeylRepresentation& rep, int s, double tol) {
  const int n = rep.n();
  const std::size_t d = rep.dim();
  const OperatorGraph graph = graph_orbit(rep, s, tol);
  const auto elements = rep.quotient_elements();

  std::vector<SpectralDecomposition> spectra;
  for (const auto& g : elements) spectra.push_back(spectral_projections(rep.element(g), tol));

  const KLOperands operands(graph.space.basis);
  SpectralScan out;
  out.n = n;
  out.s = s;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const auto& sd = spectra[e];
    for (std::size_t c = 0; c < sd.size(); ++c) {
      if (sd.ranks[c] < 2) continue;
      const auto terms = kl_terms(operands, sd.bases[c], sd.ranks[c]);
      double worst = 0.0;
      for (const auto& t : terms) worst = std::max(worst, t.residual);
      out.findings.push_back({elements[e], sd.eigenvalues[c], sd.ranks[c], worst <= tol, worst});
    }
  }

  const double match_tol = 100.0 * tol * static_cast<double>(d);
  auto count_common = [&](std::size_t first) {
    std::size_t count = 0;
    const auto& seed = spectra[first];
    for (std::size_t c = 0; c < seed.size(); ++c) {
      if (seed.ranks[c] < 2) continue;
      bool everywhere = true;
      for (std::size_t e = first + 1; e < spectra.size() && everywhere; ++e) {
        const auto& other = spectra[e].projectors;
        everywhere = std::any_of(other.begin(), other.end(),
                                 [&](const Matrix& m) { return distance(m, seed.projectors[c]) <= match_tol; });
      }
      if (everywhere) ++count;
    }
    return count;
  };
  out.common_all = count_common(0);
  out.common_nonidentity = elements.size() > 1 ? count_common(1) : 0;
  return out;
}

SpectralScan spectral_projection_scan(int n, int s, double tol) { return spectral_projection_scan(WeylRepresentation(n), s, tol); }

// ---------------------------------------------------------------------------

CheckResult check_kl_anticliques(const WeylRepresentation& rep, double tol) {
  const int n = rep.n();
  const std::size_t d = rep.dim();
  const double expected = 1.0 / static_cast<double>(n);
  std::vector<std::vector<Complex>> isometries;
  for (int k = 0; k < n; ++k) {
    const auto vecs = code_subspace(rep.basis(), k);
    std::vector<Complex> block(d * static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < vecs.size(); ++c)
      for (std::size_t r = 0; r < d; ++r) block[r * vecs.size() + c] = vecs[c][r];
    isometries.push_back(std::move(block));
  }

  double worst = 0.0;
  bool all_anticliques = true;
  for (int s = 0; s < n; ++s) {
    const auto gens = orbit_generators(rep, q_projection(n, s));
    const auto ops = operators_of(gens);
    const KLOperands operands(ops);
    for (int k = 0; k < n; ++k) {
      const auto report =
          kl_report(gens, operands, isometries[static_cast<std::size_t>(k)], static_cast<std::size_t>(n), tol);
      all_anticliques = all_anticliques && report.is_anticlique;
      worst = std::max(worst, report.max_residual);
      for (const auto& l : report.lambda) worst = std::max(worst, std::abs(l.lambda - expected));
    }
  }
  CheckResult out = residual_check("kl_anticliques", worst, tol, "P_k Ad(g)(Q_s) P_k = P_k / n for all k, s, g");
  if (!all_anticliques) out.pass = false;
  return out;
}

CheckResult check_spectral_identification(const WeylRepresentation& rep, double tol) {
  const int n = rep.n();
  const SpectralDecomposition sd = spectral_projections(rep.clock(), tol);
  double worst = 0.0;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  if (sd.size() != static_cast<std::size_t>(n)) worst = 1.0;
  for (std::size_t c = 0; c < sd.size(); ++c) {
    int best = 0;
    for (int k = 1; k < n; ++k)
      if (std::abs(sd.eigenvalues[c] - root_of_unity(n, k)) < std::abs(sd.eigenvalues[c] - root_of_unity(n, best))) best = k;
    if (used[static_cast<std::size_t>(best)] || sd.ranks[c] != static_cast<std::size_t>(n)) worst = std::max(worst, 1.0);
    used[static_cast<std::size_t>(best)] = true;
    worst = std::max(worst, std::abs(sd.eigenvalues[c] - root_of_unity(n, best)));
    worst = std::max(worst, distance(sd.projectors[c], anticlique_projector(rep.basis(), best)));
  }
  return residual_check("spectral_pk_match", worst, tol,
                        std::to_string(sd.size()) + " eigenvalue clusters of pi(M)");
}

GraphSpanAudit audit_graph_spans(const WeylRepresentation& rep, double tol) {
  const int n = rep.n();
  const MatrixGrid y = y_units(rep.basis());

  std::vector<OperatorSubspace> orbit_spaces;
  for (int s = 0; s < n; ++s) orbit_spaces.push_back(graph_orbit(rep, s, tol).space);

  std::vector<OperatorSubspace> z_families;
  std::vector<Matrix> z_reduced;
  for (int j = 0; j < n; ++j) {
    ZFamily fam = z_generators(y, j);
    z_families.push_back(span_operators(fam.grid.cells, tol));
    if (j == 0) z_reduced = std::move(fam.reduced);
  }
  const OperatorSubspace z_span = span_operators(z_reduced, tol);
  const std::vector<Matrix> hs = h_generators(y);
  const OperatorSubspace h_span = span_operators(hs, tol);

  auto residual_of = [](const SubspaceComparison& c) { return c.equal ? c.max_residual : std::max(c.max_residual, 1.0); };

  double coincide = 0.0;
  for (const auto* family : {&orbit_spaces, &z_families})
    for (std::size_t a = 0; a < family->size(); ++a)
      for (std::size_t b = a + 1; b < family->size(); ++b)
        coincide = std::max(coincide, residual_of(subspace_equal((*family)[a], (*family)[b], tol)));

  double orbit_z = 0.0;
  for (const auto& v : orbit_spaces) orbit_z = std::max(orbit_z, residual_of(subspace_equal(v, z_span, tol)));
  for (const auto& zf : z_families) orbit_z = std::max(orbit_z, residual_of(subspace_equal(orbit_spaces.front(), zf, tol)));

  const SubspaceComparison orbit_h = subspace_equal(orbit_spaces.front(), h_span, tol);

  GraphSpanAudit out{
      residual_check("graphs_coincide", coincide, tol,
                     "V_s pairwise for s = 0.." + std::to_string(n - 1) + " and z families pairwise"),
      residual_check("orbit_equals_z", orbit_z, tol, "every V_s and z family equals span(z_red)"),
      GraphAudit{orbit_spaces.front().dimension(), z_span.dimension(), h_span.dimension(), orbit_z <= tol,
                 orbit_h.equal},
      {},
      orbit_spaces.front().gram_spectrum,
      z_span.gram_spectrum,
      h_span.gram_spectrum,
  };

  if (!orbit_h.equal) {
    // The one-sided sums sum_m y_{m+p,m} are recorded alongside for comparison.
    std::vector<Matrix> one_sided;
    for (int p = 0; p < n; ++p) {
      Matrix acc(rep.dim());
      for (int m = 0; m < n; ++m) acc += y(wrap(m + p, n), m);
      one_sided.push_back(std::move(acc));
    }
    const OperatorSubspace one_sided_span = span_operators(one_sided, tol);
    const bool one_sided_equal = subspace_equal(orbit_spaces.front(), one_sided_span, tol).equal;
    out.discrepancies.push_back(
        {"all graphs V_s coincide with span{h_p : 0 <= p < n}, where h_0 = sum_m y_mm and "
         "h_p = sum_m (y_{m+p,m} + y_{m,m+p})",
         "dim_orbit=" + std::to_string(out.graph.dim_orbit) + " dim_h_span=" + std::to_string(out.graph.dim_h_span) +
             " max_residual=" + format_residual(orbit_h.max_residual) +
             "; gram spectrum orbit=" + format_spectrum(out.orbit_spectrum) +
             " h=" + format_spectrum(out.h_spectrum) + "; one-sided sum_m y_{m+p,m}: dim=" +
             std::to_string(one_sided_span.dimension()) + (one_sided_equal ? ", equals V_s" : ", differs from V_s")});
  }

  // z_p = sum_m omega^{pm} h_m, as a literal matrix identity.
  double dft = 0.0;
  for (int p = 0; p < n; ++p) {
    Matrix rhs(rep.dim());
    for (int m = 0; m < n; ++m) rhs += root_of_unity(n, static_cast<long long>(p) * m) * hs[static_cast<std::size_t>(m)];
    const Matrix& z = z_reduced[static_cast<std::size_t>(p)];
    dft = std::max(dft, distance(z, rhs) / z.frobenius_norm());
  }
  if (dft > tol) {
    out.discrepancies.push_back({"z_p = sum_m exp(2 pi i p m / n) h_m for 0 <= p < n",
                                 "max relative residual ||z_p - sum_m omega^{pm} h_m||_F / ||z_p||_F = " +
                                     format_residual(dft)});
  }
  return out;
}

GraphSpanAudit audit_graph_spans(int n, double tol) { return audit_graph_spans(WeylRepresentation(n), tol); }

}  // namespace hwg
