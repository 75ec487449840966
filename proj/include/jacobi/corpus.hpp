#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jacobi/operator.hpp"

namespace jacobi {

/// Random finite-support operators for property sweeps.
struct CorpusOptions {
  int max_support = 10;
  /// Bound on |b_m| and on |a_m - 1|, |c_m - 1|.
  double max_deviation = 3.0;
  /// Off-diagonal entries closer to zero than this are redrawn.
  double min_offdiagonal = 0.3;
};

Complex random_in_disk(std::mt19937_64& rng, double radius);

/// The support bound is uniform in 1..max_support; each operator carries a
/// log-uniform overall strength in [0.02, 1] so that weak perturbations
/// without discrete spectrum also appear.
JacobiOperator random_operator(std::mt19937_64& rng, const CorpusOptions& options = {});

std::vector<JacobiOperator> random_corpus(std::uint64_t seed, int size,
                                          const CorpusOptions& options = {});

/// Operator whose weights are factor * d_m: b_m -> factor b_m and
/// a_m c_m -> 1 - factor (1 - a_m c_m), keeping a_m. Requires 0 < factor < 1
/// or factor * max_m d_m < 1.
JacobiOperator rescale_perturbation(const JacobiOperator& op, double factor);

}  // namespace jacobi
