#pragma once

#include <vector>

#include "jacobi/jost.hpp"
#include "jacobi/operator.hpp"
#include "jacobi/roots.hpp"

namespace jacobi {

/// Roots with |z| >= 1 - kBoundaryExclusion are not counted as zeros in the
/// open disk.
inline constexpr double kBoundaryExclusion = 1e-12;

struct JostRoots {
  std::vector<PolynomialRoot> interior;  // |z| < 1 - kBoundaryExclusion
  std::vector<PolynomialRoot> boundary;  // |z| within 1e-9 of the unit circle, not interior
};

JostRoots classify_jost_roots(const ComplexPolynomial& jost_function);

/// Zeros of the Jost function in the open unit disk, each repeated by its
/// multiplicity.
std::vector<Complex> jost_zeros(const JacobiOperator& op);

struct Eigenvalue {
  Complex lambda;
  Complex z;
  int multiplicity = 1;
};

/// {z + 1/z : z a Jost zero in the disk}.
std::vector<Eigenvalue> discrete_spectrum(const JacobiOperator& op);

/// All N eigenvalues of the leading N x N block of the matrix, sorted.
std::vector<Complex> truncated_eigenvalues(const JacobiOperator& op, int N);

struct ReconcileOptions {
  int N = 400;
  double band_margin = 0.05;
  double match_tol = 1e-4;
  double stability_tol = 1e-6;
  /// Compare unpartnered off-band oracle eigenvalues against the 2N
  /// truncation to separate converged values from truncation artifacts.
  bool check_stability = true;
};

struct SpectrumMatch {
  Complex jost_lambda;
  Complex oracle_lambda;
  double distance = 0.0;
};

struct SpectrumResult {
  std::vector<Complex> jost_zeros;
  std::vector<Eigenvalue> eigenvalues;
  std::vector<PolynomialRoot> boundary_roots;
  std::vector<Complex> oracle_eigenvalues;
  std::vector<Complex> oracle_eigenvalues_doubled;  // computed only when needed

  std::vector<SpectrumMatch> matches;
  /// Jost eigenvalues off the band margin with no oracle partner.
  std::vector<Complex> unmatched_jost;
  /// Jost eigenvalues within band_margin + match_tol of the band with no
  /// partner; reported only.
  std::vector<Complex> near_boundary_jost;
  /// Stable off-band oracle eigenvalues with no Jost partner.
  std::vector<Complex> unmatched_oracle;
  /// Off-band oracle eigenvalues that moved more than stability_tol from N to 2N.
  std::vector<Complex> unstable_oracle;
  int band_artifacts = 0;

  bool ok() const { return unmatched_jost.empty() && unmatched_oracle.empty(); }
};

/// Computes the discrete spectrum from Jost zeros and from the truncation
/// oracle and pairs them one-to-one by distance. Oracle values within
/// band_margin of [-2, 2] are band artifacts and take no part in the pairing.
SpectrumResult reconcile(const JacobiOperator& op, const ReconcileOptions& options = {});

/// h_n = v_n(z0) / k(n), n = 1..N: the Jost solution brought back from the
/// gauged recurrence, an eigenvector of the matrix when v_0(z0) = 0.
std::vector<Complex> jost_eigenvector(const JostSolution& jost, const JacobiOperator& op,
                                      Complex z0, int N);

/// ||(J_N - lambda0) h|| / ||h|| over rows 1..N-1, lambda0 = z0 + 1/z0.
/// Throws std::invalid_argument unless z0 is a zero of the Jost function
/// (|v_0(z0)| <= 1e-10 relative to sum_k |coef_k| |z0|^k) and N >= M + 10.
double eigenvector_check(const JacobiOperator& op, Complex z0, int N);

}  // namespace jacobi
