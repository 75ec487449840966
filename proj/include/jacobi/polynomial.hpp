#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace jacobi {

using Complex = std::complex<double>;

/// Dense polynomial in z, lowest degree first. Trailing coefficients with
/// magnitude below kTrimThreshold are dropped; the zero polynomial has no
/// coefficients and degree -1.
class ComplexPolynomial {
 public:
  static constexpr double kTrimThreshold = 1e-14;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Complex> coefficients);
  ComplexPolynomial(std::initializer_list<Complex> coefficients);

  static ComplexPolynomial constant(Complex value) { return ComplexPolynomial({value}); }

  const std::vector<Complex>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Complex coefficient(int k) const;

  Complex operator()(Complex z) const;
  Complex derivative_at(Complex z) const;
  /// sum_k |c_k| |z|^k, the natural scale for rounding in evaluate(z).
  double magnitude_at(double radius) const;
  /// Euclidean norm of the coefficient vector.
  double norm() const;

  ComplexPolynomial& operator+=(const ComplexPolynomial& rhs);
  friend ComplexPolynomial operator+(ComplexPolynomial lhs, const ComplexPolynomial& rhs) {
    return lhs += rhs;
  }
  friend ComplexPolynomial operator*(const ComplexPolynomial& lhs, const ComplexPolynomial& rhs);

 private:
  void trim();

  std::vector<Complex> coeffs_;
};

}  // namespace jacobi
