#include "jacobi/polynomial.hpp"

#include <cmath>

namespace jacobi {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

ComplexPolynomial::ComplexPolynomial(std::initializer_list<Complex> coefficients)
    : coeffs_(coefficients) {
  trim();
}

void ComplexPolynomial::trim() {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) < kTrimThreshold) coeffs_.pop_back();
}

Complex ComplexPolynomial::coefficient(int k) const {
  return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Complex(0.0);
}

Complex ComplexPolynomial::operator()(Complex z) const {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex ComplexPolynomial::derivative_at(Complex z) const {
  Complex acc(0.0);
  for (int k = degree(); k >= 1; --k) acc = acc * z + static_cast<double>(k) * coeffs_[k];
  return acc;
}

double ComplexPolynomial::magnitude_at(double radius) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * radius + std::abs(*it);
  return acc;
}

double ComplexPolynomial::norm() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Complex> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return ComplexPolynomial(std::move(out));
}

}  // namespace jacobi
