#include "jacobi/green_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jacobi {

namespace {

constexpr double kNearUnitThreshold = 1e-6;

Complex int_pow(Complex z, int k) {
  Complex r(1.0);
  Complex base = k < 0 ? 1.0 / z : z;
  for (int e = std::abs(k); e > 0; e >>= 1) {
    if (e & 1) r *= base;
    base *= base;
  }
  return r;
}

}  // namespace

Complex green(int n, int m, Complex z) {
  if (z == Complex(0.0)) throw std::invalid_argument("green: z = 0");
  if (n < 0 || m < 0) throw std::invalid_argument("green: negative index");
  if (m <= n) return 0.0;
  const int k = m - n;
  const Complex z2 = z * z;
  if (std::abs(z2 - 1.0) < kNearUnitThreshold) {
    Complex sum(0.0), term(1.0);
    for (int j = 0; j < k; ++j, term *= z2) sum += term;
    return int_pow(z, 1 - k) * sum;
  }
  return (int_pow(z, k) - int_pow(z, -k)) / (z - 1.0 / z);
}

Complex kernel_j(const JacobiOperator& op, int n, int m, Complex z) {
  if (z == Complex(0.0)) throw std::invalid_argument("kernel_j: z = 0");
  if (n < 0 || m < n) throw std::invalid_argument("kernel_j: requires m >= n >= 0");
  if (m == n) return 0.0;
  return -op.b(m) * green(n, m, z) + (1.0 - op.a(m - 1) * op.c(m - 1)) * green(n, m - 1, z);
}

Complex kernel_j_tilde(const JacobiOperator& op, int n, int m, Complex z) {
  if (n < 0 || m < n) throw std::invalid_argument("kernel_j_tilde: requires m >= n >= 0");
  if (z == Complex(0.0) || m == n) return 0.0;
  return kernel_j(op, n, m, z) * int_pow(z, m - n);
}

ComplexPolynomial kernel_j_tilde_poly(const JacobiOperator& op, int n, int m) {
  if (n < 0 || m <= n) throw std::invalid_argument("kernel_j_tilde_poly: requires m > n >= 0");
  const int k = m - n;
  const Complex diag = -op.b(m);
  const Complex offdiag = 1.0 - op.a(m - 1) * op.c(m - 1);
  std::vector<Complex> coeffs(static_cast<std::size_t>(2 * k), Complex(0.0));
  for (int j = 0; j < k; ++j) coeffs[2 * j + 1] += diag;
  for (int j = 0; j + 1 < k; ++j) coeffs[2 * j + 2] += offdiag;
  return ComplexPolynomial(std::move(coeffs));
}

double kernel_bound_margin(const JacobiOperator& op, int n, int m, Complex z) {
  if (m <= n) throw std::invalid_argument("kernel_bound_margin: requires m > n");
  const double r = std::abs(z);
  if (r == 0.0 || z == Complex(1.0) || z == Complex(-1.0))
    throw std::invalid_argument("kernel_bound_margin: z must avoid 0 and +-1");
  if (r > 1.0 + 1e-14) throw std::invalid_argument("kernel_bound_margin: |z| > 1");
  const double cap = std::min(static_cast<double>(m - n), 2.0 / std::abs(z * z - 1.0));
  return r * op.weight(m) * cap - std::abs(kernel_j_tilde(op, n, m, z));
}

}  // namespace jacobi
