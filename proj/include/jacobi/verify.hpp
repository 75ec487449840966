#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jacobi/operator.hpp"
#include "jacobi/spectrum.hpp"

namespace jacobi {

/// Outcome of one property suite: how many individual checks held, and the
/// worst observed value of the suite's error measure.
struct SuiteResult {
  std::string name;
  long passed = 0;
  long total = 0;
  /// Cases outside the property's scope, not counted in total.
  long skipped = 0;
  double worst = 0.0;
  std::string first_failure{};

  void record(bool pass, double measure, const std::string& context = {});
  bool ok() const { return passed == total; }
};

using Corpus = std::vector<JacobiOperator>;

// Each check draws its random points from its own generator seeded with
// `seed`, so suites can run in any order or alone.

SuiteResult check_recurrence_residual(const Corpus& corpus, std::uint64_t seed, int z_per_op);
SuiteResult check_wronskian_identity(const Corpus& corpus, std::uint64_t seed, int z_per_op);
SuiteResult check_joukowski_roundtrip(std::uint64_t seed, int samples);
SuiteResult check_tail_sums(const Corpus& corpus);

/// Both three-term recurrences of G over 0 <= n, m <= max_index.
SuiteResult check_green_recurrences(std::uint64_t seed, int z_samples, int max_index);
/// G(n, m) = U_{m-n-1}((z + 1/z) / 2) with the Chebyshev recurrence.
SuiteResult check_green_chebyshev(std::uint64_t seed, int z_samples, int max_index);
/// J(n-1, m) + J(n+1, m) = (z + 1/z) J(n, m) for m >= n + 2.
SuiteResult check_kernel_recurrence(const Corpus& corpus, std::uint64_t seed, int z_per_op,
                                    int max_index);
SuiteResult check_kernel_polynomial(const Corpus& corpus, std::uint64_t seed, int z_per_op);
SuiteResult check_kernel_bound(const Corpus& corpus, std::uint64_t seed, int samples);

SuiteResult check_jost_recurrence(const Corpus& corpus, std::uint64_t seed, int z_per_op);
SuiteResult check_jost_methods(const Corpus& corpus, std::uint64_t seed, int z_per_op);
SuiteResult check_jost_degrees(const Corpus& corpus);
SuiteResult check_iterate_bound(const Corpus& corpus, std::uint64_t seed, int z_per_op);
SuiteResult check_bound_i(const Corpus& corpus, std::uint64_t seed, int z_per_op);
SuiteResult check_bound_ii(const Corpus& corpus, std::uint64_t seed, int z_per_op);

/// No Jost zero inside the region, and |v_0| bounded away from zero there.
SuiteResult check_omega_zero_free(const Corpus& corpus, std::uint64_t seed, int z_per_op);
/// After rescaling below the no-spectrum threshold, no Jost zero in the disk.
SuiteResult check_no_spectrum_rescaled(const Corpus& corpus, std::uint64_t seed);
/// Enlarging the weights never shrinks the omega threshold.
SuiteResult check_region_monotonicity(const Corpus& corpus, std::uint64_t seed);

std::vector<SpectrumResult> reconcile_corpus(const Corpus& corpus,
                                             const ReconcileOptions& options);
SuiteResult check_jost_in_oracle(const std::vector<SpectrumResult>& results);
SuiteResult check_oracle_in_jost(const std::vector<SpectrumResult>& results);
SuiteResult check_free_region_exclusion(const Corpus& corpus,
                                        const std::vector<SpectrumResult>& results);
SuiteResult check_rectangles(const Corpus& corpus, const std::vector<SpectrumResult>& results);
SuiteResult check_eigenvectors(const Corpus& corpus, const std::vector<SpectrumResult>& results,
                               int N);
/// The Jost solution and the solution with y_0 = 0, y_1 = 1 have vanishing
/// Wronskian at every zero.
SuiteResult check_wronskian_at_zeros(const Corpus& corpus,
                                     const std::vector<SpectrumResult>& results);
/// The Jost eigenvector against one found by inverse iteration on the
/// truncation: the two must be parallel.
SuiteResult check_eigenvector_simplicity(const Corpus& corpus,
                                         const std::vector<SpectrumResult>& results, int N);
/// Truncations of the free operator against 2 cos(k pi / (N + 1)).
SuiteResult check_free_truncation(const std::vector<int>& sizes);

struct VerifyOptions {
  std::uint64_t seed = 1;
  int corpus_size = 200;
  int z_per_operator = 50;
  ReconcileOptions reconcile{.N = 400, .band_margin = 0.1};
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int corpus_size = 0;
  std::vector<SuiteResult> suites;
  bool ok() const;
};

VerifyReport run_verify(const VerifyOptions& options);

/// Plain-text report; identical for identical options.
std::string format_report(const VerifyReport& report);

}  // namespace jacobi
