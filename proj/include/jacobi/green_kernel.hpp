#pragma once

#include "jacobi/operator.hpp"
#include "jacobi/polynomial.hpp"

namespace jacobi {

/// Green kernel of the free recurrence:
///   G(n, m; z) = (z^{m-n} - z^{n-m}) / (z - 1/z)  for m > n, else 0.
/// Close to z = +-1 the equivalent sum z^{1-k} (1 + z^2 + ... + z^{2(k-1)}),
/// k = m - n, is used instead.
Complex green(int n, int m, Complex z);

/// J(n, m; z) = -b_m G(n, m; z) + (1 - a_{m-1} c_{m-1}) G(n, m-1; z), m >= n.
Complex kernel_j(const JacobiOperator& op, int n, int m, Complex z);

/// J~(n, m; z) = J(n, m; z) z^{m-n} evaluated pointwise; defined at z = 0.
Complex kernel_j_tilde(const JacobiOperator& op, int n, int m, Complex z);

/// J~(n, m; .) as a polynomial in z, m > n.
ComplexPolynomial kernel_j_tilde_poly(const JacobiOperator& op, int n, int m);

/// |z| d_m min{m - n, 2/|z^2 - 1|} - |J~(n, m; z)|; nonnegative up to rounding.
double kernel_bound_margin(const JacobiOperator& op, int n, int m, Complex z);

}  // namespace jacobi
