#include "jacobi/jost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jacobi/green_kernel.hpp"

namespace jacobi {

JostSolution::JostSolution(const JacobiOperator& op) {
  const int M = op.support_bound();
  tilde_.assign(static_cast<std::size_t>(M) + 1, ComplexPolynomial::constant(1.0));
  for (int n = M - 1; n >= 0; --n) {
    ComplexPolynomial acc = ComplexPolynomial::constant(1.0);
    for (int m = n + 1; m <= M; ++m) acc += kernel_j_tilde_poly(op, n, m) * tilde_[m];
    tilde_[n] = std::move(acc);
  }
}

const ComplexPolynomial& JostSolution::tilde(int n) const {
  if (n < 0) throw std::out_of_range("JostSolution: negative index");
  return n < static_cast<int>(tilde_.size()) ? tilde_[n] : one_;
}

Complex JostSolution::value_at(int n, Complex z) const {
  return tilde_at(n, z) * std::pow(z, n);
}

SolutionSegment JostSolution::segment(Complex z, int N) const {
  SolutionSegment seg{0, std::vector<Complex>(static_cast<std::size_t>(N) + 1)};
  Complex zn(1.0);
  for (int n = 0; n <= N; ++n, zn *= z) seg.values[n] = tilde_at(n, z) * zn;
  return seg;
}

JostSolution jost_backsubstitute(const JacobiOperator& op) { return JostSolution(op); }

ComplexPolynomial jost_function(const JacobiOperator& op) {
  return JostSolution(op).jost_function();
}

Complex SuccessiveApproximation::tilde_at(int n) const {
  return n < static_cast<int>(tilde_values.size()) ? tilde_values[n] : Complex(1.0);
}

SuccessiveApproximation jost_successive(const JacobiOperator& op, Complex z, int max_iter,
                                        double tol) {
  const int M = op.support_bound();
  if (max_iter < 0) max_iter = M + 1;
  const std::size_t size = static_cast<std::size_t>(M) + 1;

  std::vector<std::vector<Complex>> kernel(size, std::vector<Complex>(size, Complex(0.0)));
  for (int n = 0; n < M; ++n)
    for (int m = n + 1; m <= M; ++m) kernel[n][m] = kernel_j_tilde(op, n, m, z);

  SuccessiveApproximation out;
  out.z = z;
  out.tilde_values.assign(size, Complex(1.0));

  std::vector<Complex> prev(size, Complex(1.0));  // f_{m,0} := 1 makes f_{n,1} = g_n
  for (int j = 1; j <= max_iter; ++j) {
    std::vector<Complex> next(size, Complex(0.0));
    double sup = 0.0;
    for (int n = 0; n < M; ++n) {
      for (int m = n + 1; m <= M; ++m) next[n] += kernel[n][m] * prev[m];
      sup = std::max(sup, std::abs(next[n]));
    }
    for (std::size_t n = 0; n < size; ++n) out.tilde_values[n] += next[n];
    out.sup_norms.push_back(sup);
    out.iterates.push_back(next);
    prev = std::move(next);
    if (sup < tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

namespace {

// Both sides of the bound carry the factor |z|^n; it can underflow while the
// exponential overflows.
double scaled_margin(double scale, double rhs, double lhs) {
  const double diff = rhs - lhs;
  if (std::isinf(diff) || scale == 1.0) return diff;
  return scale * diff;
}

}  // namespace

double phi(Complex z) { return 2.0 * std::abs(z) / std::abs(z * z - 1.0); }

double bound_margin_i(const JostSolution& jost, const JacobiOperator& op, Complex z, int n) {
  const double r = std::abs(z);
  if (r == 0.0 || r >= 1.0 || z == Complex(1.0) || z == Complex(-1.0))
    throw std::invalid_argument("bound_margin_i: requires 0 < |z| < 1");
  const double scale = std::pow(r, n);
  const double x = phi(z) * op.sigma0(n);
  const double rhs = x == 0.0 ? 0.0 : x * std::exp(x);
  const double lhs = std::abs(jost.tilde_at(n, z) - 1.0);
  return scaled_margin(scale, rhs, lhs);
}

double bound_margin_i(const JacobiOperator& op, Complex z, int n) {
  return bound_margin_i(JostSolution(op), op, z, n);
}

double bound_margin_ii(const JostSolution& jost, const JacobiOperator& op, Complex z, int n) {
  const double r = std::abs(z);
  if (r > 1.0 + 1e-14) throw std::invalid_argument("bound_margin_ii: requires |z| <= 1");
  const double scale = r == 0.0 ? 1.0 : std::pow(r, n);
  const double s = op.sigma1(n);
  const double rhs = s == 0.0 ? 0.0 : s * std::exp(s);
  const double lhs = std::abs(jost.tilde_at(n, z) - 1.0);
  return scaled_margin(scale, rhs, lhs);
}

double bound_margin_ii(const JacobiOperator& op, Complex z, int n) {
  return bound_margin_ii(JostSolution(op), op, z, n);
}

}  // namespace jacobi
