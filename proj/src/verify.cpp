#include "jacobi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>

#include "jacobi/corpus.hpp"
#include "jacobi/eigen.hpp"
#include "jacobi/green_kernel.hpp"
#include "jacobi/jost.hpp"
#include "jacobi/regions.hpp"
#include "jacobi/roots.hpp"

namespace jacobi {

void SuiteResult::record(bool pass, double measure, const std::string& context) {
  ++total;
  if (pass) {
    ++passed;
  } else if (first_failure.empty()) {
    first_failure = context;
  }
  if (std::isnan(measure) || measure > worst) worst = measure;
}

bool VerifyReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt(Complex z) { return "(" + fmt(z.real()) + "," + fmt(z.imag()) + ")"; }

std::string where(std::size_t op_index, Complex z) {
  return "operator " + std::to_string(op_index) + ", z = " + fmt(z);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform in radius and angle on r0 <= |z| <= r1.
Complex in_annulus(std::mt19937_64& rng, double r0, double r1) {
  const double r = uniform(rng, r0, r1);
  return std::polar(r, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

/// Points of the disk |z| <= r_max away from the ring |z^2 - 1| < ring.
Complex off_ring(std::mt19937_64& rng, double r_min, double r_max, double ring) {
  for (;;) {
    const Complex z = in_annulus(rng, r_min, r_max);
    if (std::abs(z * z - 1.0) >= ring) return z;
  }
}

double relative(Complex residual, double scale) { return std::abs(residual) / std::max(scale, 1e-300); }

/// Relative residual of the gauged recurrence on rows 1..end-1, each row
/// measured against the size of its own terms.
double gauged_row_residual(const JacobiOperator& op, Complex z, const SolutionSegment& x) {
  const Complex lambda = joukowski(z);
  double worst = 0.0;
  for (int m = 1; m < x.end_index(); ++m) {
    const Complex t0 = x.at(m - 1), t1 = op.b(m) * x.at(m), t2 = op.a(m) * op.c(m) * x.at(m + 1),
                  t3 = lambda * x.at(m);
    const double scale = std::abs(t0) + std::abs(t1) + std::abs(t2) + std::abs(t3);
    if (scale == 0.0) continue;
    worst = std::max(worst, relative(t0 + t1 + t2 - t3, scale));
  }
  return worst;
}

double plain_row_residual(const JacobiOperator& op, Complex z, const SolutionSegment& y) {
  const Complex lambda = joukowski(z);
  double worst = 0.0;
  for (int m = 1; m < y.end_index(); ++m) {
    const Complex t0 = op.a(m - 1) * y.at(m - 1), t1 = op.b(m) * y.at(m),
                  t2 = op.c(m) * y.at(m + 1), t3 = lambda * y.at(m);
    const double scale = std::abs(t0) + std::abs(t1) + std::abs(t2) + std::abs(t3);
    if (scale == 0.0) continue;
    worst = std::max(worst, relative(t0 + t1 + t2 - t3, scale));
  }
  return worst;
}

/// Solves (T - shift) x = rhs for the leading N x N block by Gaussian
/// elimination with partial pivoting (LAPACK gttrf/gttrs layout).
std::vector<Complex> shifted_tridiagonal_solve(const JacobiOperator& op, int N, Complex shift,
                                               std::vector<Complex> rhs) {
  const std::size_t n = static_cast<std::size_t>(N);
  std::vector<Complex> dl(n - 1), d(n), du(n - 1), du2(n > 2 ? n - 2 : 0);
  std::vector<bool> swapped(n - 1, false);
  for (int i = 1; i <= N; ++i) {
    d[i - 1] = op.b(i) - shift;
    if (i < N) {
      dl[i - 1] = op.a(i);
      du[i - 1] = op.c(i);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == Complex(0.0)) d[i] = 1e-300;
      const Complex fact = dl[i] / d[i];
      dl[i] = fact;
      d[i + 1] -= fact * du[i];
    } else {
      swapped[i] = true;
      const Complex fact = d[i] / dl[i];
      d[i] = dl[i];
      dl[i] = fact;
      const Complex temp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = temp - fact * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -fact * du[i + 1];
      }
    }
  }
  if (d[n - 1] == Complex(0.0)) d[n - 1] = 1e-300;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
    rhs[i + 1] -= dl[i] * rhs[i];
  }
  std::vector<Complex> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Complex s = rhs[k];
    if (k + 1 < n) s -= du[k] * x[k + 1];
    if (k + 2 < n) s -= du2[k] * x[k + 2];
    x[k] = s / d[k];
  }
  return x;
}

void normalize(std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& x : v) s += std::norm(x);
  s = std::sqrt(s);
  for (Complex& x : v) x /= s;
}

}  // namespace

// ---------------------------------------------------------------- operator

SuiteResult check_recurrence_residual(const Corpus& corpus, std::uint64_t seed, int z_per_op) {
  SuiteResult s{.name = "operator.recurrence_residual"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const int N = op.last_stored_index() + 20;
    for (int k = 0; k < z_per_op; ++k) {
      const Complex z = in_annulus(rng, 0.1, 0.9);
      const SolutionSegment y =
          extend_solution(op, z, random_in_disk(rng, 1.0), random_in_disk(rng, 1.0), N);
      const double r = plain_row_residual(op, z, y);
      s.record(r < 1e-12, r, where(i, z));
    }
  }
  return s;
}

SuiteResult check_wronskian_identity(const Corpus& corpus, std::uint64_t seed, int z_per_op) {
  SuiteResult s{.name = "operator.wronskian_identity"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const int N = op.last_stored_index() + 5;
    for (int k = 0; k < z_per_op; ++k) {
      const Complex z = in_annulus(rng, 0.1, 0.9);
      const SolutionSegment g =
          extend_solution(op, z, random_in_disk(rng, 1.0), random_in_disk(rng, 1.0), N + 1);
      const SolutionSegment h =
          extend_solution(op, z, random_in_disk(rng, 1.0), random_in_disk(rng, 1.0), N + 1);
      // c_n W_n = a_{n-1} W_{n-1}, measured against the size of the products
      // that make up each Wronskian.
      double worst = 0.0;
      for (int n = 1; n <= N; ++n) {
        const Complex lhs = op.c(n) * wronskian(g, h, n);
        const Complex rhs = op.a(n - 1) * wronskian(g, h, n - 1);
        const double scale =
            std::abs(op.c(n)) * (std::abs(g.at(n) * h.at(n + 1)) + std::abs(g.at(n + 1) * h.at(n))) +
            std::abs(op.a(n - 1)) *
                (std::abs(g.at(n - 1) * h.at(n)) + std::abs(g.at(n) * h.at(n - 1)));
        worst = std::max(worst, relative(lhs - rhs, scale));
      }
      s.record(worst < 1e-10, worst, where(i, z));
    }
  }
  return s;
}

SuiteResult check_joukowski_roundtrip(std::uint64_t seed, int samples) {
  SuiteResult s{.name = "operator.joukowski_roundtrip"};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    // Every tenth sample sits on the band, where the inverse is two-valued.
    const Complex lambda =
        k % 10 == 0 ? Complex(uniform(rng, -2.0, 2.0), 0.0) : random_in_disk(rng, 10.0);
    const Complex z = inverse_joukowski(lambda);
    const double err = std::abs(joukowski(z) - lambda) / std::max(1.0, std::abs(lambda));
    s.record(err < 1e-12 && std::abs(z) <= 1.0 + 1e-14, err, "lambda = " + fmt(lambda));
  }
  return s;
}

SuiteResult check_tail_sums(const Corpus& corpus) {
  SuiteResult s{.name = "operator.tail_sums"};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const int M = op.support_bound();
    bool pass = true;
    for (int n = 0; n <= M + 3; ++n) {
      pass = pass && op.sigma0(n) >= op.sigma0(n + 1) && op.sigma1(n) >= op.sigma1(n + 1);
      if (n >= M) pass = pass && op.sigma0(n) == 0.0 && op.sigma1(n) == 0.0;
    }
    s.record(pass, 0.0, "operator " + std::to_string(i));
  }
  return s;
}

// ------------------------------------------------------------------ green

namespace {

/// Mostly the annulus 0.5 <= |z| <= 1, with some points on the unit circle
/// and some within 1e-7 of +-1.
Complex green_sample(std::mt19937_64& rng, int k) {
  if (k % 10 == 1) return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
  if (k % 10 == 2) {
    const double sign = k % 20 == 2 ? 1.0 : -1.0;
    return sign + std::polar(uniform(rng, 1e-9, 1e-7), uniform(rng, 0.0, 2.0 * std::numbers::pi));
  }
  return in_annulus(rng, 0.5, 1.0);
}

}  // namespace

SuiteResult check_green_recurrences(std::uint64_t seed, int z_samples, int max_index) {
  SuiteResult s{.name = "green.recurrences"};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < z_samples; ++k) {
    const Complex z = green_sample(rng, k);
    const Complex lambda = joukowski(z);
    double worst = 0.0;
    for (int n = 0; n <= max_index; ++n)
      for (int m = 1; m <= max_index; ++m) {
        // In m: G(n, m+1) + G(n, m-1) - lambda G(n, m) = delta_{nm}.
        const Complex p = green(n, m + 1, z), q = green(n, m - 1, z), r = lambda * green(n, m, z);
        const double delta = n == m ? 1.0 : 0.0;
        worst = std::max(worst, relative(p + q - r - delta,
                                         1.0 + std::abs(p) + std::abs(q) + std::abs(r)));
      }
    for (int n = 1; n <= max_index; ++n)
      for (int m = 0; m <= max_index; ++m) {
        // In n: G(n+1, m) + G(n-1, m) - lambda G(n, m) = delta_{nm}.
        const Complex p = green(n + 1, m, z), q = green(n - 1, m, z), r = lambda * green(n, m, z);
        const double delta = n == m ? 1.0 : 0.0;
        worst = std::max(worst, relative(p + q - r - delta,
                                         1.0 + std::abs(p) + std::abs(q) + std::abs(r)));
      }
    s.record(worst < 1e-10, worst, "z = " + fmt(z));
  }
  return s;
}

SuiteResult check_green_chebyshev(std::uint64_t seed, int z_samples, int max_index) {
  SuiteResult s{.name = "green.chebyshev"};
  std::mt19937_64 rng(seed);
  for (int k = 0; k < z_samples; ++k) {
    const Complex z = green_sample(rng, k);
    const Complex x = joukowski(z) / 2.0;
    // u[j] = U_j(x)
    std::vector<Complex> u{1.0, 2.0 * x};
    for (int j = 2; j < max_index; ++j) u.push_back(2.0 * x * u[j - 1] - u[j - 2]);
    double worst = 0.0;
    for (int n = 0; n <= max_index; ++n)
      for (int m = n + 1; m <= max_index; ++m) {
        const Complex expected = u[static_cast<std::size_t>(m - n - 1)];
        worst = std::max(worst, relative(green(n, m, z) - expected,
                                         std::max(1.0, std::abs(expected))));
      }
    s.record(worst < 1e-10, worst, "z = " + fmt(z));
  }
  return s;
}

SuiteResult check_kernel_recurrence(const Corpus& corpus, std::uint64_t seed, int z_per_op,
                                    int max_index) {
  SuiteResult s{.name = "green.kernel_recurrence"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    for (int k = 0; k < z_per_op; ++k) {
      const Complex z = green_sample(rng, k);
      const Complex lambda = joukowski(z);
      double worst = 0.0;
      for (int m = 3; m <= max_index; ++m)
        for (int n = 1; n + 2 <= m; ++n) {
          const Complex p = kernel_j(op, n - 1, m, z), q = kernel_j(op, n + 1, m, z),
                        r = lambda * kernel_j(op, n, m, z);
          worst = std::max(worst,
                           relative(p + q - r, 1.0 + std::abs(p) + std::abs(q) + std::abs(r)));
        }
      s.record(worst < 1e-10, worst, where(i, z));
    }
  }
  return s;
}

SuiteResult check_kernel_polynomial(const Corpus& corpus, std::uint64_t seed, int z_per_op) {
  SuiteResult s{.name = "green.kernel_polynomial"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const int M = op.support_bound();
    for (int k = 0; k < z_per_op; ++k) {
      const Complex z = in_annulus(rng, 0.05, 1.0);
      double worst = 0.0;
      for (int n = 0; n <= M; ++n)
        for (int m = n + 1; m <= M + 1; ++m) {
          const ComplexPolynomial p = kernel_j_tilde_poly(op, n, m);
          const Complex direct = kernel_j(op, n, m, z) * std::pow(z, m - n);
          const double scale = std::max(1.0, p.magnitude_at(std::abs(z)));
          worst = std::max({worst, relative(p(z) - direct, scale),
                            relative(p(z) - kernel_j_tilde(op, n, m, z), scale)});
        }
      s.record(worst < 1e-12, worst, where(i, z));
    }
  }
  return s;
}

SuiteResult check_kernel_bound(const Corpus& corpus, std::uint64_t seed, int samples) {
  SuiteResult s{.name = "green.kernel_bound"};
  if (corpus.empty()) return s;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  for (int k = 0; k < samples; ++k) {
    const std::size_t i = pick(rng);
    const JacobiOperator& op = corpus[i];
    const int M = std::max(1, op.support_bound());
    const int n = std::uniform_int_distribution<int>(0, M - 1)(rng);
    const int m = std::uniform_int_distribution<int>(n + 1, M + 1)(rng);
    Complex z;
    do {
      z = random_in_disk(rng, 1.0);
    } while (z == Complex(0.0) || std::abs(z * z - 1.0) < 1e-9);
    const double margin = kernel_bound_margin(op, n, m, z);
    s.record(margin >= -1e-12, -margin, where(i, z));
  }
  return s;
}

// ------------------------------------------------------------------- jost

SuiteResult check_jost_recurrence(const Corpus& corpus, std::uint64_t seed, int z_per_op) {
  SuiteResult s{.name = "jost.recurrence"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const JostSolution jost(op);
    const int N = op.last_stored_index() + 5;
    for (int k = 0; k < z_per_op; ++k) {
      const Complex z = in_annulus(rng, 0.05, 0.95);
      const SolutionSegment x = jost.segment(z, N);
      const double r = std::max(gauged_row_residual(op, z, x),
                                plain_row_residual(op, z, inverse_gauge_transform(op, x)));
      s.record(r < 1e-10, r, where(i, z));
    }
  }
  return s;
}

SuiteResult check_jost_methods(const Corpus& corpus, std::uint64_t seed, int z_per_op) {
  SuiteResult s{.name = "jost.method_agreement"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const JostSolution jost(op);
    for (int k = 0; k < z_per_op; ++k) {
      const Complex z = off_ring(rng, 0.0, 0.95, 0.05);
      const SuccessiveApproximation sa = jost_successive(op, z);
      double worst = 0.0;
      for (int n = 0; n <= op.support_bound(); ++n) {
        const double scale = std::max(1.0, jost.tilde(n).magnitude_at(std::abs(z)));
        worst = std::max(worst, relative(sa.tilde_at(n) - jost.tilde_at(n, z), scale));
      }
      s.record(sa.converged && worst < 1e-10, worst, where(i, z));
    }
  }
  return s;
}

SuiteResult check_jost_degrees(const Corpus& corpus) {
  SuiteResult s{.name = "jost.degrees"};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const JostSolution jost(op);
    const int M = op.support_bound();
    bool pass = true;
    for (int n = 0; n <= M + 2; ++n) {
      const ComplexPolynomial& p = jost.tilde(n);
      pass = pass && p.degree() <= std::max(0, 2 * (M - n) - 1) && p.coefficient(0) == Complex(1.0);
      if (n >= M) pass = pass && p.degree() == 0;
    }
    s.record(pass, 0.0, "operator " + std::to_string(i));
  }
  return s;
}

SuiteResult check_iterate_bound(const Corpus& corpus, std::uint64_t seed, int z_per_op) {
  SuiteResult s{.name = "jost.iterate_bound"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    for (int k = 0; k < z_per_op; ++k) {
      const Complex z = off_ring(rng, 0.0, 0.95, 0.05);
      const double p = phi(z);
      const SuccessiveApproximation sa = jost_successive(op, z);
      // Worst ratio |f_{n,j}| / bound.
      double worst = 0.0;
      for (int j = 1; j <= sa.iterations(); ++j) {
        const auto& f = sa.iterates[static_cast<std::size_t>(j - 1)];
        for (std::size_t n = 0; n < f.size(); ++n) {
          const double x = p * op.sigma0(static_cast<int>(n));
          const double bound = std::exp(j * std::log(x) - std::lgamma(j));
          const double size = std::abs(f[n]);
          if (size == 0.0) continue;
          worst = std::max(worst, size / bound);
        }
      }
      s.record(worst <= 1.0 + 1e-12, worst, where(i, z));
    }
  }
  return s;
}

SuiteResult check_bound_i(const Corpus& corpus, std::uint64_t seed, int z_per_op) {
  SuiteResult s{.name = "jost.error_bound_phi"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const JostSolution jost(op);
    for (int k = 0; k < z_per_op; ++k) {
      const Complex z = off_ring(rng, 1e-3, 0.999, 0.05);
      double worst = 0.0;
      for (int n = 0; n <= op.support_bound() + 1; ++n)
        worst = std::max(worst, -bound_margin_i(jost, op, z, n));
      s.record(worst <= 1e-12, worst, where(i, z));
    }
  }
  return s;
}

SuiteResult check_bound_ii(const Corpus& corpus, std::uint64_t seed, int z_per_op) {
  SuiteResult s{.name = "jost.error_bound_sigma1"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const JostSolution jost(op);
    for (int k = 0; k < z_per_op; ++k) {
      // The closed disk, including the points 0 and +-1 and the unit circle.
      Complex z;
      switch (k % 10) {
        case 0: z = k % 20 == 0 ? 1.0 : -1.0; break;
        case 1: z = 0.0; break;
        case 2: z = std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi)); break;
        default: z = random_in_disk(rng, 1.0);
      }
      double worst = 0.0;
      for (int n = 0; n <= op.support_bound() + 1; ++n)
        worst = std::max(worst, -bound_margin_ii(jost, op, z, n));
      s.record(worst <= 1e-12, worst, where(i, z));
    }
  }
  return s;
}

// ---------------------------------------------------------------- regions

SuiteResult check_omega_zero_free(const Corpus& corpus, std::uint64_t seed, int z_per_op) {
  SuiteResult s{.name = "regions.omega_zero_free"};
  std::mt19937_64 rng(seed);
  const double t = omega_constant();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const double D0 = op.sigma0(0);
    const ComplexPolynomial v0 = jost_function(op);
    bool pass = true;
    double worst = 0.0;  // 1e-9 / min |v0| over sampled points in the region
    for (int k = 0; k < z_per_op; ++k) {
      const Complex z = random_in_disk(rng, 1.0);
      if (!in_omega(z, D0, t)) continue;
      const double size = std::abs(v0(z));
      pass = pass && size >= 1e-9;
      worst = std::max(worst, 1e-9 / std::max(size, 1e-300));
    }
    for (const Complex& z : jost_zeros(op)) pass = pass && !in_omega(z, D0, t);
    s.record(pass, worst, "operator " + std::to_string(i));
  }
  return s;
}

SuiteResult check_no_spectrum_rescaled(const Corpus& corpus, std::uint64_t seed) {
  SuiteResult s{.name = "regions.no_spectrum_rescaled"};
  std::mt19937_64 rng(seed);
  const double t = omega_constant();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const double D1 = op.sigma1(0);
    if (D1 == 0.0) {
      ++s.skipped;
      continue;
    }
    const double factor = std::min(1.0, uniform(rng, 0.05, 0.999) * t / D1);
    const JacobiOperator scaled = rescale_perturbation(op, factor);
    const ComplexPolynomial v0 = jost_function(scaled);
    double smallest = 2.0;
    if (v0.degree() > 0)
      for (const PolynomialRoot& r : polynomial_roots(v0))
        smallest = std::min(smallest, std::abs(r.value));
    s.record(no_spectrum_criterion(scaled, t) && smallest >= 1.0 - 1e-9, 1.0 - smallest,
             "operator " + std::to_string(i));
  }
  return s;
}

SuiteResult check_region_monotonicity(const Corpus& corpus, std::uint64_t seed) {
  SuiteResult s{.name = "regions.monotonicity"};
  std::mt19937_64 rng(seed);
  const double t = omega_constant();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const int M = std::max(1, op.support_bound());
    const int m = std::uniform_int_distribution<int>(1, M + 2)(rng);
    // Push b_m further from zero along its own direction (or a random one).
    const Complex b = op.b(m);
    const Complex direction = b == Complex(0.0) ? std::polar(1.0, uniform(rng, 0.0, 6.283)) : b / std::abs(b);
    const Complex enlarged = b + uniform(rng, 0.01, 2.0) * direction;
    std::vector<Entry> bs;
    for (const Entry& e : op.b_entries())
      if (e.index != m) bs.push_back(e);
    bs.push_back({m, enlarged});
    const JacobiOperator bigger(op.a_entries(), bs, op.c_entries());
    const double before = 2.0 * op.sigma0(0) / t, after = 2.0 * bigger.sigma0(0) / t;
    s.record(after >= before, std::max(0.0, before - after), "operator " + std::to_string(i));
  }
  return s;
}

// --------------------------------------------------------------- spectrum

std::vector<SpectrumResult> reconcile_corpus(const Corpus& corpus,
                                             const ReconcileOptions& options) {
  std::vector<SpectrumResult> out;
  out.reserve(corpus.size());
  for (const JacobiOperator& op : corpus) out.push_back(reconcile(op, options));
  return out;
}

SuiteResult check_jost_in_oracle(const std::vector<SpectrumResult>& results) {
  SuiteResult s{.name = "spectrum.jost_in_oracle"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SpectrumResult& r = results[i];
    for (const SpectrumMatch& m : r.matches) s.record(true, m.distance);
    for (const Complex& lambda : r.unmatched_jost) {
      if (std::abs(inverse_joukowski(lambda)) > 1.0 - 1e-3) {
        ++s.skipped;
        continue;
      }
      s.record(false, 0.0, "operator " + std::to_string(i) + ", lambda = " + fmt(lambda));
    }
    s.skipped += static_cast<long>(r.near_boundary_jost.size());
  }
  return s;
}

SuiteResult check_oracle_in_jost(const std::vector<SpectrumResult>& results) {
  SuiteResult s{.name = "spectrum.oracle_in_jost"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const SpectrumResult& r = results[i];
    for (const SpectrumMatch& m : r.matches) s.record(true, m.distance);
    for (const Complex& lambda : r.unmatched_oracle)
      s.record(false, 0.0, "operator " + std::to_string(i) + ", lambda = " + fmt(lambda));
    s.skipped += static_cast<long>(r.unstable_oracle.size());
  }
  return s;
}

SuiteResult check_free_region_exclusion(const Corpus& corpus,
                                        const std::vector<SpectrumResult>& results) {
  SuiteResult s{.name = "regions.eigenvalues_outside_free_region"};
  const double t = omega_constant();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const SpectrumResult& r = results[i];
    auto check = [&](Complex lambda) {
      s.record(!in_spectrum_free_region(op, lambda, t), 0.0,
               "operator " + std::to_string(i) + ", lambda = " + fmt(lambda));
    };
    for (const Eigenvalue& e : r.eigenvalues) check(e.lambda);
    for (const SpectrumMatch& m : r.matches) check(m.oracle_lambda);
    for (const Complex& lambda : r.unmatched_oracle) check(lambda);
  }
  return s;
}

SuiteResult check_rectangles(const Corpus& corpus, const std::vector<SpectrumResult>& results) {
  SuiteResult s{.name = "regions.rectangles"};
  const double t = omega_constant();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const std::optional<RectangleEnclosure> rect = spectral_rectangles(corpus[i], t);
    const SpectrumResult& r = results[i];
    if (!rect) {
      s.skipped += static_cast<long>(r.eigenvalues.size());
      continue;
    }
    auto check = [&](Complex lambda) {
      s.record(rect->contains(lambda, 1e-9), 0.0,
               "operator " + std::to_string(i) + ", lambda = " + fmt(lambda));
    };
    for (const Eigenvalue& e : r.eigenvalues) check(e.lambda);
    for (const SpectrumMatch& m : r.matches) check(m.oracle_lambda);
  }
  return s;
}

SuiteResult check_eigenvectors(const Corpus& corpus, const std::vector<SpectrumResult>& results,
                               int N) {
  SuiteResult s{.name = "spectrum.eigenvector_residual"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const Eigenvalue& e : results[i].eigenvalues) {
      const int n = std::max(N, corpus[i].support_bound() + 10);
      const double r = eigenvector_check(corpus[i], e.z, n);
      s.record(r < 1e-10, r, where(i, e.z));
    }
  }
  return s;
}

SuiteResult check_wronskian_at_zeros(const Corpus& corpus,
                                     const std::vector<SpectrumResult>& results) {
  SuiteResult s{.name = "spectrum.wronskian_at_zeros"};
  for (std::size_t i = 0; i < results.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const JostSolution jost(op);
    for (const Eigenvalue& e : results[i].eigenvalues) {
      const SolutionSegment y = inverse_gauge_transform(op, jost.segment(e.z, 2));
      const SolutionSegment h = extend_solution(op, e.z, 0.0, 1.0, 2);
      // y_0 is a sum of terms of total size magnitude_at(|z0|) / |k(0)|; v~_1
      // can itself be nearly zero at z0, so y_1 is no yardstick.
      const double y0_scale =
          jost.jost_function().magnitude_at(std::abs(e.z)) / std::abs(op.gauge_factor(0));
      const double scale = y0_scale * std::abs(h.at(1)) + std::abs(y.at(1) * h.at(0));
      const double w = relative(wronskian(y, h, 0), scale);
      s.record(w < 1e-9, w, where(i, e.z));
    }
  }
  return s;
}

SuiteResult check_eigenvector_simplicity(const Corpus& corpus,
                                         const std::vector<SpectrumResult>& results, int N) {
  SuiteResult s{.name = "spectrum.eigenvector_simplicity"};
  std::mt19937_64 rng(0x5eed);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const JacobiOperator& op = corpus[i];
    const JostSolution jost(op);
    for (const Eigenvalue& e : results[i].eigenvalues) {
      // The truncation only carries the eigenvector when the tail is negligible.
      if (N * std::log(std::abs(e.z)) > std::log(1e-13)) {
        ++s.skipped;
        continue;
      }
      std::vector<Complex> h = jost_eigenvector(jost, op, e.z, N);
      normalize(h);
      const Complex shift = e.lambda + 1e-13 * std::max(1.0, std::abs(e.lambda));
      std::vector<Complex> x(static_cast<std::size_t>(N));
      for (Complex& v : x) v = random_in_disk(rng, 1.0);
      for (int step = 0; step < 3; ++step) {
        x = shifted_tridiagonal_solve(op, N, shift, x);
        normalize(x);
      }
      Complex inner = 0.0;
      for (int n = 0; n < N; ++n) inner += std::conj(h[n]) * x[n];
      const double deviation = 1.0 - std::abs(inner);
      s.record(deviation < 1e-8, deviation, where(i, e.z));
    }
  }
  return s;
}

SuiteResult check_free_truncation(const std::vector<int>& sizes) {
  SuiteResult s{.name = "spectrum.free_truncation"};
  const JacobiOperator free_op;
  for (int N : sizes) {
    std::vector<Complex> values = truncated_eigenvalues(free_op, N);
    std::vector<double> expected;
    for (int k = 1; k <= N; ++k) expected.push_back(2.0 * std::cos(k * std::numbers::pi / (N + 1)));
    std::sort(expected.begin(), expected.end());
    std::sort(values.begin(), values.end(),
              [](Complex a, Complex b) { return a.real() < b.real(); });
    double worst = 0.0;
    for (int k = 0; k < N; ++k) worst = std::max(worst, std::abs(values[k] - expected[k]));
    s.record(worst < 1e-10, worst, "N = " + std::to_string(N));
  }
  return s;
}

// ----------------------------------------------------------------- runner

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  report.corpus_size = options.corpus_size;
  const Corpus corpus = random_corpus(options.seed, options.corpus_size);
  const int zs = options.z_per_operator;
  std::uint64_t stream = options.seed * 0x9e3779b97f4a7c15ULL;
  auto next = [&] { return ++stream; };
  auto& out = report.suites;

  out.push_back(check_recurrence_residual(corpus, next(), 5));
  out.push_back(check_wronskian_identity(corpus, next(), 5));
  out.push_back(check_joukowski_roundtrip(next(), 1000));
  out.push_back(check_tail_sums(corpus));

  out.push_back(check_green_recurrences(next(), 100, 20));
  out.push_back(check_green_chebyshev(next(), 100, 20));
  out.push_back(check_kernel_recurrence(corpus, next(), 10, 20));
  out.push_back(check_kernel_polynomial(corpus, next(), 5));
  out.push_back(check_kernel_bound(corpus, next(), 1000));

  out.push_back(check_jost_recurrence(corpus, next(), 10));
  out.push_back(check_jost_methods(corpus, next(), zs));
  out.push_back(check_jost_degrees(corpus));
  out.push_back(check_iterate_bound(corpus, next(), zs));
  out.push_back(check_bound_i(corpus, next(), zs));
  out.push_back(check_bound_ii(corpus, next(), zs));

  out.push_back(check_omega_zero_free(corpus, next(), 200));
  out.push_back(check_no_spectrum_rescaled(corpus, next()));
  out.push_back(check_region_monotonicity(corpus, next()));

  const std::vector<SpectrumResult> results = reconcile_corpus(corpus, options.reconcile);
  out.push_back(check_free_region_exclusion(corpus, results));
  out.push_back(check_rectangles(corpus, results));
  out.push_back(check_jost_in_oracle(results));
  out.push_back(check_oracle_in_jost(results));
  out.push_back(check_eigenvectors(corpus, results, options.reconcile.N));
  out.push_back(check_wronskian_at_zeros(corpus, results));
  out.push_back(check_eigenvector_simplicity(corpus, results, options.reconcile.N));
  out.push_back(check_free_truncation({3, 10, 100}));
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "seed " << report.seed << ", corpus size " << report.corpus_size << "\n\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-40s %9s %9s %8s %12s  %s\n", "suite", "passed", "total",
                "skipped", "worst", "status");
  out << line;
  int failed = 0;
  for (const SuiteResult& s : report.suites) {
    std::snprintf(line, sizeof line, "%-40s %9ld %9ld %8ld %12.3e  %s\n", s.name.c_str(), s.passed,
                  s.total, s.skipped, s.worst, s.ok() ? "PASS" : "FAIL");
    out << line;
    if (!s.ok()) ++failed;
  }
  for (const SuiteResult& s : report.suites)
    if (!s.ok()) out << "first failure in " << s.name << ": " << s.first_failure << "\n";
  out << "\n"
      << (failed == 0 ? "all " + std::to_string(report.suites.size()) + " suites passed"
                      : std::to_string(failed) + " of " + std::to_string(report.suites.size()) +
                            " suites failed")
      << "\n";
  return out.str();
}

}  // namespace jacobi
