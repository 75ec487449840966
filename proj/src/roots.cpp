#include "jacobi/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jacobi {

namespace {

constexpr int kMaxAberthIterations = 500;
constexpr double kMergeTolerance = 1e-6;

std::vector<Complex> aberth(const ComplexPolynomial& p) {
  const int deg = p.degree();
  const auto& a = p.coefficients();
  // Cauchy-type radius bound for the initial circle.
  double radius = 0.0;
  for (int k = 0; k < deg; ++k)
    radius = std::max(radius, std::pow(std::abs(a[k] / a[deg]), 1.0 / (deg - k)));
  radius = std::max(radius, 1e-3);

  std::vector<Complex> z(static_cast<std::size_t>(deg));
  for (int k = 0; k < deg; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * (k + 0.25) / deg + 0.4);

  std::vector<bool> settled(z.size(), false);
  for (int iter = 0; iter < kMaxAberthIterations; ++iter) {
    bool all = true;
    for (int k = 0; k < deg; ++k) {
      if (settled[k]) continue;
      const Complex value = p(z[k]);
      const Complex slope = p.derivative_at(z[k]);
      if (std::abs(value) <= 1e-16 * p.magnitude_at(std::abs(z[k]))) {
        settled[k] = true;
        continue;
      }
      const Complex ratio = value / slope;
      Complex repulsion(0.0);
      for (int j = 0; j < deg; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z[k])))
        settled[k] = true;
      else
        all = false;
    }
    if (all) break;
  }
  return z;
}

Complex polish(const ComplexPolynomial& p, Complex z) {
  Complex best = z;
  double best_residual = std::abs(p(z));
  for (int i = 0; i < 8 && best_residual > 0.0; ++i) {
    const Complex slope = p.derivative_at(z);
    if (slope == Complex(0.0)) break;
    z -= p(z) / slope;
    const double res = std::abs(p(z));
    if (res < best_residual) {
      best = z;
      best_residual = res;
    } else {
      break;
    }
  }
  return best;
}

}  // namespace

std::vector<PolynomialRoot> polynomial_roots(const ComplexPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("polynomial_roots: zero polynomial");
  if (p.degree() == 0) return {};

  std::vector<Complex> raw = aberth(p);
  std::vector<PolynomialRoot> roots;
  for (const Complex& r : raw) {
    auto it = std::find_if(roots.begin(), roots.end(), [&](const PolynomialRoot& q) {
      return std::abs(q.value - r) <= kMergeTolerance * std::max(1.0, std::abs(r));
    });
    if (it == roots.end()) {
      roots.push_back({r, 1});
    } else {
      // Running mean of the cluster.
      it->value += (r - it->value) / static_cast<double>(it->multiplicity + 1);
      ++it->multiplicity;
    }
  }
  for (auto& r : roots)
    if (r.multiplicity == 1) r.value = polish(p, r.value);
  std::sort(roots.begin(), roots.end(), [](const PolynomialRoot& l, const PolynomialRoot& r) {
    return l.value.real() != r.value.real() ? l.value.real() < r.value.real()
                                            : l.value.imag() < r.value.imag();
  });
  return roots;
}

}  // namespace jacobi
