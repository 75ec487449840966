#pragma once

#include <vector>

#include "jacobi/operator.hpp"
#include "jacobi/polynomial.hpp"

namespace jacobi {

/// Jost solution in normalized form v~_n(z) = v_n(z) z^{-n}, obtained by
/// exact back-substitution in
///   v~_n = 1 + sum_{m > n} J~(n, m; .) v~_m.
/// Every v~_n is a polynomial; v~_n = 1 for n >= support_bound().
class JostSolution {
 public:
  explicit JostSolution(const JacobiOperator& op);

  int support_bound() const { return static_cast<int>(tilde_.size()) - 1; }

  /// v~_n as a polynomial (the constant 1 past the support).
  const ComplexPolynomial& tilde(int n) const;
  /// The Jost function v_0 = v~_0.
  const ComplexPolynomial& jost_function() const { return tilde_.front(); }

  Complex tilde_at(int n, Complex z) const { return tilde(n)(z); }
  /// v_n(z) = v~_n(z) z^n.
  Complex value_at(int n, Complex z) const;

  /// v_0(z), ..., v_N(z) as a segment of the gauged recurrence.
  SolutionSegment segment(Complex z, int N) const;

 private:
  std::vector<ComplexPolynomial> tilde_;  // n = 0..M
  ComplexPolynomial one_ = ComplexPolynomial::constant(1.0);
};

JostSolution jost_backsubstitute(const JacobiOperator& op);

/// The Jost function v_0 as a polynomial.
ComplexPolynomial jost_function(const JacobiOperator& op);

/// Pointwise successive approximations at a fixed z:
///   f_{n,1} = sum_{m>n} J~(n, m; z),  f_{n,j+1} = sum_{m>n} J~(n, m; z) f_{m,j},
///   v~_n(z) = 1 + sum_j f_{n,j}.
struct SuccessiveApproximation {
  Complex z;
  std::vector<Complex> tilde_values;           // n = 0..M
  std::vector<std::vector<Complex>> iterates;  // iterates[j-1][n] = f_{n,j}
  std::vector<double> sup_norms;               // sup_n |f_{n,j}| per iterate
  bool converged = false;

  int iterations() const { return static_cast<int>(iterates.size()); }
  Complex tilde_at(int n) const;
};

/// max_iter < 0 selects support_bound() + 1, after which the iterates vanish
/// identically.
SuccessiveApproximation jost_successive(const JacobiOperator& op, Complex z,
                                        int max_iter = -1, double tol = 1e-15);

/// 2|z| / |z^2 - 1|.
double phi(Complex z);

/// Slack in |v_n - z^n| <= |z|^n {phi sigma0(n)} exp{phi sigma0(n)}.
/// Requires 0 < |z| < 1, z != +-1.
double bound_margin_i(const JostSolution& jost, const JacobiOperator& op, Complex z, int n);
double bound_margin_i(const JacobiOperator& op, Complex z, int n);

/// Slack in |v_n - z^n| <= |z|^n sigma1(n) exp{sigma1(n)}, |z| <= 1. At z = 0
/// the normalized form |v~_n(0) - 1| <= sigma1(n) exp{sigma1(n)} is checked.
double bound_margin_ii(const JostSolution& jost, const JacobiOperator& op, Complex z, int n);
double bound_margin_ii(const JacobiOperator& op, Complex z, int n);

}  // namespace jacobi
