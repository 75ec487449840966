#pragma once

#include "jacobi/operator.hpp"

namespace fixtures {

using jacobi::Complex;
using jacobi::JacobiOperator;

inline JacobiOperator free_operator() { return JacobiOperator(); }

/// b_1 = value, everything else background.
inline JacobiOperator diagonal_one(Complex value) { return JacobiOperator({}, {{1, value}}, {}); }

/// a_1 = c_1 = value.
inline JacobiOperator offdiagonal_one(Complex value) {
  return JacobiOperator({{1, value}}, {}, {{1, value}});
}

}  // namespace fixtures
