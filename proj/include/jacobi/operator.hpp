#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace jacobi {

using Complex = std::complex<double>;

/// A single stored deviation from the background value at index n >= 1.
struct Entry {
  int index = 0;
  Complex value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Complex Jacobi matrix that differs from the discrete laplacian
/// (a = c = 1, b = 0) at finitely many sites.
///
/// Row n of the matrix reads  a_{n-1} h_{n-1} + b_n h_n + c_n h_{n+1},
/// with the convention a_0 = c_0 = 1. Entries equal to the background are
/// elided on construction, so two operators compare equal iff they act
/// identically.
class JacobiOperator {
 public:
  /// The free operator J0.
  JacobiOperator() = default;

  /// Throws std::invalid_argument on an index < 1, a duplicate index, a
  /// non-finite value, or a zero off-diagonal entry.
  JacobiOperator(std::vector<Entry> a, std::vector<Entry> b, std::vector<Entry> c);

  Complex a(int n) const { return lookup(a_, n, Complex(1.0)); }
  Complex b(int n) const { return lookup(b_, n, Complex(0.0)); }
  Complex c(int n) const { return lookup(c_, n, Complex(1.0)); }

  const std::vector<Entry>& a_entries() const { return a_; }
  const std::vector<Entry>& b_entries() const { return b_; }
  const std::vector<Entry>& c_entries() const { return c_; }

  /// Largest m with weight(m) != 0; zero for an operator with d == 0.
  int support_bound() const { return support_; }

  /// Largest index carrying any stored entry (>= support_bound() - 1).
  int last_stored_index() const { return last_stored_; }

  /// d_m = |b_m| + |1 - a_{m-1} c_{m-1}| for m >= 1.
  double weight(int m) const;

  /// sigma0(n) = sum_{m > n} d_m.
  double sigma0(int n) const;
  /// sigma1(n) = sum_{m > n} m d_m.
  double sigma1(int n) const;

  /// k(j) = prod_{i >= j} a_i, exact because only finitely many a_i != 1.
  Complex gauge_factor(int j) const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const JacobiOperator& lhs, const JacobiOperator& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_;
  }

 private:
  static Complex lookup(const std::vector<Entry>& entries, int n, Complex background);

  std::vector<Entry> a_, b_, c_;  // sorted by index
  std::vector<double> weights_;   // weights_[m] = d_m for 0 <= m <= support_
  int support_ = 0;
  int last_stored_ = 0;
  std::string name_;
};

/// Spectral parameter pair linked by lambda = z + 1/z.
struct SpectralPoint {
  Complex z;
  Complex lambda;

  static SpectralPoint from_z(Complex z);
  static SpectralPoint from_lambda(Complex lambda);
};

Complex joukowski(Complex z);

/// Root of z^2 - lambda z + 1 = 0 with |z| <= 1. On the cut [-2, 2] both
/// roots are unimodular and the one with Im z >= 0 is returned.
Complex inverse_joukowski(Complex lambda);

/// Finite piece y_{n0}, y_{n0+1}, ... of a sequence.
struct SolutionSegment {
  int start_index = 0;
  std::vector<Complex> values;

  int end_index() const { return start_index + static_cast<int>(values.size()) - 1; }
  bool contains(int n) const { return n >= start_index && n <= end_index(); }
  Complex at(int n) const;
};

/// Solves  a_{m-1} y_{m-1} + b_m y_m + c_m y_{m+1} = (z + 1/z) y_m  forward
/// from (y0, y1); returns y_0..y_N.
SolutionSegment extend_solution(const JacobiOperator& op, Complex z, Complex y0, Complex y1,
                                int N);

/// x_m = k(m) y_m.
SolutionSegment gauge_transform(const JacobiOperator& op, const SolutionSegment& segment);

/// Inverse of gauge_transform: y_m = x_m / k(m).
SolutionSegment inverse_gauge_transform(const JacobiOperator& op,
                                        const SolutionSegment& segment);

/// Largest interior residual of the three-term recurrence
///   a_{m-1} y_{m-1} + b_m y_m + c_m y_{m+1} - (z + 1/z) y_m,
/// taken over the indices m >= 1 whose neighbours lie in the segment.
double recurrence_residual(const JacobiOperator& op, Complex z, const SolutionSegment& y);

/// Same for the gauged form  x_{m-1} + b_m x_m + a_m c_m x_{m+1} = (z + 1/z) x_m.
double gauged_recurrence_residual(const JacobiOperator& op, Complex z,
                                  const SolutionSegment& x);

/// W_n(g, h) = g_n h_{n+1} - g_{n+1} h_n. Throws std::out_of_range.
Complex wronskian(const SolutionSegment& g, const SolutionSegment& h, int n);

}  // namespace jacobi
