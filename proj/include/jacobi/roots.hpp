#pragma once

#include <vector>

#include "jacobi/polynomial.hpp"

namespace jacobi {

struct PolynomialRoot {
  Complex value;
  int multiplicity = 1;
};

/// All roots of p (degree >= 1) by Aberth-Ehrlich simultaneous iteration,
/// then Newton polishing. Roots closer than a relative 1e-6 are merged into
/// one entry carrying their count as multiplicity. Degree 0 gives no roots;
/// the zero polynomial throws std::invalid_argument.
std::vector<PolynomialRoot> polynomial_roots(const ComplexPolynomial& p);

}  // namespace jacobi
