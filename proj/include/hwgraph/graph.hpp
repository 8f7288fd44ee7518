#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwgraph/check.hpp"
#include "hwgraph/linalg.hpp"
#include "hwgraph/matrix.hpp"
#include "hwgraph/weyl.hpp"

namespace hwg {

struct LabeledOperator {
  GroupElement label;
  Matrix op;
};

/// n x n grid of operators, row-major.
struct MatrixGrid {
  int n = 0;
  std::vector<Matrix> cells;

  const Matrix& operator()(int a, int b) const;
};

/// y[m][l] = sum_k |h_m^k><h_l^k|. The superscript (multiplicity) index is
/// summed, unlike the fixed-point units.
MatrixGrid y_units(const EntangledBasis& basis);
MatrixGrid y_units(int n);

/// A non-commutative operator graph spanned by the conjugation orbit of Q_s.
struct OperatorGraph {
  int n = 0;
  int s = 0;
  OperatorSubspace space;
  std::vector<LabeledOperator> provenance;
};

/// pi(g) base pi(g)^dagger for every (p, q), lexicographic.
std::vector<LabeledOperator> orbit_generators(const WeylRepresentation& rep, const Matrix& base);

OperatorGraph graph_orbit(const WeylRepresentation& rep, int s, double tol);
OperatorGraph graph_orbit(int n, int s, double tol);

/// h_0 = sum_m y_mm, h_p = sum_m (y_{m+p,m} + y_{m,m+p}) for 1 <= p < n.
std::vector<Matrix> h_generators(const MatrixGrid& y);
std::vector<Matrix> h_generators(int n);

struct ZFamily {
  int n = 0;
  int j = 0;
  /// z[q][p] = sum_{m,l} omega^{(m-l)(p-j)} y_{m+q, l+q}
  MatrixGrid grid;
  /// z_red[c] = sum_{m,l} omega^{c(m-l)} y_{m,l}
  std::vector<Matrix> reduced;
};

ZFamily z_generators(const MatrixGrid& y, int j);
ZFamily z_generators(int n, int j);

/// P_k = sum_j |h_k^j><h_k^j|
Matrix anticlique_projector(const EntangledBasis& basis, int k);
Matrix anticlique_projector(int n, int k);

/// {h_k^j : j}, an orthonormal basis of range(P_k).
std::vector<Vector> code_subspace(const EntangledBasis& basis, int k);
std::vector<Vector> code_subspace(int n, int k);

// ---------------------------------------------------------------------------
// Knill-Laflamme

class NotAProjectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct KLCoefficient {
  GroupElement label;
  Complex lambda;
  double residual = 0.0;
};

struct AnticliqueReport {
  int n = 0;
  int k = -1;
  int s = -1;
  bool is_anticlique = false;
  std::size_t rank = 0;
  std::vector<KLCoefficient> lambda;
  double max_residual = 0.0;
};

/// Rank of an orthogonal projection from its trace; throws NotAProjectionError
/// if `p` is not Hermitian idempotent within tol, or its trace is not an
/// integer within 1e-8.
std::size_t projection_rank(const Matrix& p, double tol);

/// For each generator X: lambda_X = Tr(PXP)/Tr(P) and ||PXP - lambda_X P||_F.
/// Evaluated as V^dagger X V for an isometry V onto range(P); generators are
/// processed in parallel.
AnticliqueReport check_knill_laflamme(std::span<const LabeledOperator> generators, const Matrix& p, double tol);
/// Same, with a caller-supplied isometry (row-major dim x rank).
AnticliqueReport check_knill_laflamme(std::span<const LabeledOperator> generators,
                                      std::span<const Complex> isometry, std::size_t rank, double tol);
/// Forms PXP densely with the serial kernels.
AnticliqueReport check_knill_laflamme_reference(std::span<const LabeledOperator> generators, const Matrix& p,
                                                double tol);

// ---------------------------------------------------------------------------
// Spectral projections of group elements

struct SpectralFinding {
  GroupElement g;
  Complex eigenvalue;
  std::size_t rank = 0;
  bool anticlique = false;
  double kl_residual = 0.0;
};

struct SpectralScan {
  int n = 0;
  int s = 0;
  /// Rank >= 2 projections occurring in the spectral decomposition of every
  /// group element (identity included).
  std::size_t common_all = 0;
  /// Same, over non-identity elements only.
  std::size_t common_nonidentity = 0;
  std::vector<SpectralFinding> findings;  // rank >= 2 projections, (p, q) order

  std::size_t anticlique_count() const;
  std::string summary() const;
};

SpectralScan spectral_projection_scan(const WeylRepresentation& rep, int s, double tol);
SpectralScan spectral_projection_scan(int n, int s, double tol);

// ---------------------------------------------------------------------------
// Report fragments

/// kl_anticliques: every P_k against every orbit generator of every Q_s.
CheckResult check_kl_anticliques(const WeylRepresentation& rep, double tol);

/// spectral_pk_match: clusters of pi(M) are exactly (omega^k, P_k) with rank n.
CheckResult check_spectral_identification(const WeylRepresentation& rep, double tol);

struct Discrepancy {
  std::string claim;
  std::string observed;
};

struct GraphAudit {
  std::size_t dim_orbit = 0;
  std::size_t dim_z_span = 0;
  std::size_t dim_h_span = 0;
  bool orbit_equals_z = false;
  bool orbit_equals_h = false;
};

struct GraphSpanAudit {
  CheckResult graphs_coincide;
  CheckResult orbit_equals_z;
  GraphAudit graph;
  std::vector<Discrepancy> discrepancies;
  std::vector<double> orbit_spectrum;
  std::vector<double> z_spectrum;
  std::vector<double> h_spectrum;
};

/// Compares every V_s, every fixed-j z family, span(z_red) and span(h_p).
/// Disagreement with span(h_p) is reported as a discrepancy, not a check.
GraphSpanAudit audit_graph_spans(const WeylRepresentation& rep, double tol);
GraphSpanAudit audit_graph_spans(int n, double tol);

}  // namespace hwg
