#include "jacobi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "jacobi/eigen.hpp"
#include "jacobi/regions.hpp"

namespace jacobi {

namespace {

constexpr double kBoundaryBand = 1e-9;
constexpr double kZeroTolerance = 1e-10;

double nearest_distance(Complex lambda, const std::vector<Complex>& values) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& v : values) best = std::min(best, std::abs(v - lambda));
  return best;
}

}  // namespace

JostRoots classify_jost_roots(const ComplexPolynomial& jost_function) {
  JostRoots out;
  for (const PolynomialRoot& r : polynomial_roots(jost_function)) {
    const double mod = std::abs(r.value);
    if (mod < 1.0 - kBoundaryExclusion)
      out.interior.push_back(r);
    else if (mod <= 1.0 + kBoundaryBand)
      out.boundary.push_back(r);
  }
  return out;
}

std::vector<Complex> jost_zeros(const JacobiOperator& op) {
  std::vector<Complex> out;
  for (const PolynomialRoot& r : classify_jost_roots(jost_function(op)).interior)
    out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

std::vector<Eigenvalue> discrete_spectrum(const JacobiOperator& op) {
  std::vector<Eigenvalue> out;
  for (const PolynomialRoot& r : classify_jost_roots(jost_function(op)).interior)
    out.push_back({joukowski(r.value), r.value, r.multiplicity});
  return out;
}

std::vector<Complex> truncated_eigenvalues(const JacobiOperator& op, int N) {
  if (N < 2) throw std::invalid_argument("truncated_eigenvalues: N must be >= 2");
  std::vector<Complex> diag(static_cast<std::size_t>(N));
  std::vector<Complex> lower(static_cast<std::size_t>(N - 1));
  std::vector<Complex> upper(static_cast<std::size_t>(N - 1));
  for (int n = 1; n <= N; ++n) {
    diag[n - 1] = op.b(n);
    if (n < N) {
      lower[n - 1] = op.a(n);
      upper[n - 1] = op.c(n);
    }
  }
  std::vector<Complex> values = tridiagonal_eigenvalues(diag, lower, upper);
  sort_eigenvalues(values);
  return values;
}

SpectrumResult reconcile(const JacobiOperator& op, const ReconcileOptions& options) {
  if (options.N < 50) throw std::invalid_argument("reconcile: N must be >= 50");
  if (!(options.band_margin > 0.0)) throw std::invalid_argument("reconcile: band_margin <= 0");

  SpectrumResult result;
  const JostRoots roots = classify_jost_roots(jost_function(op));
  result.boundary_roots = roots.boundary;
  std::vector<Complex> jost_lambdas;  // repeated by multiplicity
  for (const PolynomialRoot& r : roots.interior) {
    result.eigenvalues.push_back({joukowski(r.value), r.value, r.multiplicity});
    for (int k = 0; k < r.multiplicity; ++k) {
      result.jost_zeros.push_back(r.value);
      jost_lambdas.push_back(joukowski(r.value));
    }
  }

  result.oracle_eigenvalues = truncated_eigenvalues(op, options.N);
  const auto& oracle = result.oracle_eigenvalues;

  struct Candidate {
    double distance;
    std::size_t jost, oracle;
  };
  std::vector<Candidate> candidates;
  // Oracle values inside the band margin are artifacts and never partners.
  std::vector<bool> artifact(oracle.size());
  for (std::size_t j = 0; j < oracle.size(); ++j)
    artifact[j] = distance_to_band(oracle[j]) <= options.band_margin;
  for (std::size_t i = 0; i < jost_lambdas.size(); ++i)
    for (std::size_t j = 0; j < oracle.size(); ++j) {
      if (artifact[j]) continue;
      const double dist = std::abs(jost_lambdas[i] - oracle[j]);
      if (dist < options.match_tol) candidates.push_back({dist, i, j});
    }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& l, const Candidate& r) {
    return l.distance != r.distance ? l.distance < r.distance
                                    : std::tie(l.jost, l.oracle) < std::tie(r.jost, r.oracle);
  });
  std::vector<bool> jost_used(jost_lambdas.size(), false), oracle_used(oracle.size(), false);
  for (const Candidate& c : candidates) {
    if (jost_used[c.jost] || oracle_used[c.oracle]) continue;
    jost_used[c.jost] = oracle_used[c.oracle] = true;
    result.matches.push_back({jost_lambdas[c.jost], oracle[c.oracle], c.distance});
  }

  for (std::size_t i = 0; i < jost_lambdas.size(); ++i) {
    if (jost_used[i]) continue;
    if (distance_to_band(jost_lambdas[i]) < options.band_margin + options.match_tol)
      result.near_boundary_jost.push_back(jost_lambdas[i]);
    else
      result.unmatched_jost.push_back(jost_lambdas[i]);
  }

  // The 2N truncation only decides the fate of unpartnered off-band values.
  for (std::size_t j = 0; j < oracle.size(); ++j) {
    if (artifact[j]) {
      ++result.band_artifacts;
      continue;
    }
    if (oracle_used[j]) continue;
    bool stable = true;
    if (options.check_stability) {
      if (result.oracle_eigenvalues_doubled.empty())
        result.oracle_eigenvalues_doubled = truncated_eigenvalues(op, 2 * options.N);
      stable = nearest_distance(oracle[j], result.oracle_eigenvalues_doubled) <
               options.stability_tol;
    }
    (stable ? result.unmatched_oracle : result.unstable_oracle).push_back(oracle[j]);
  }
  return result;
}

std::vector<Complex> jost_eigenvector(const JostSolution& jost, const JacobiOperator& op,
                                      Complex z0, int N) {
  std::vector<Complex> h(static_cast<std::size_t>(N));
  Complex zn = z0;
  for (int n = 1; n <= N; ++n, zn *= z0) h[n - 1] = jost.tilde_at(n, z0) * zn / op.gauge_factor(n);
  return h;
}

double eigenvector_check(const JacobiOperator& op, Complex z0, int N) {
  const JostSolution jost(op);
  const int M = op.support_bound();
  if (N < M + 10) throw std::invalid_argument("eigenvector_check: N < M + 10");
  const ComplexPolynomial& v0 = jost.jost_function();
  if (z0 == Complex(0.0) || std::abs(z0) >= 1.0 ||
      std::abs(v0(z0)) > kZeroTolerance * std::max(1.0, v0.magnitude_at(std::abs(z0))))
    throw std::invalid_argument("eigenvector_check: z0 is not a zero of the Jost function");

  const Complex lambda = joukowski(z0);
  const std::vector<Complex> h = jost_eigenvector(jost, op, z0, N);
  double res2 = 0.0, norm2 = 0.0;
  for (const Complex& x : h) norm2 += std::norm(x);
  for (int row = 1; row < N; ++row) {
    Complex r = (op.b(row) - lambda) * h[row - 1] + op.c(row) * h[row];
    if (row > 1) r += op.a(row - 1) * h[row - 2];
    res2 += std::norm(r);
  }
  return std::sqrt(res2 / norm2);
}

}  // namespace jacobi
