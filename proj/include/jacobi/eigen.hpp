#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace jacobi {

using Complex = std::complex<double>;

/// Raised when the shifted QR iteration exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<Complex> partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}

  /// Eigenvalues deflated before the failure.
  const std::vector<Complex>& partial() const { return partial_; }

 private:
  std::vector<Complex> partial_;
};

/// Relative deflation threshold on subdiagonal entries.
inline constexpr double kDeflationTolerance = 1e-14;

/// Dense square matrix, column-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  Complex& operator()(int i, int j) { return data_[i + static_cast<std::size_t>(j) * n_]; }
  Complex operator()(int i, int j) const { return data_[i + static_cast<std::size_t>(j) * n_]; }

 private:
  int n_;
  std::vector<Complex> data_;
};

/// Eigenvalues of an upper Hessenberg matrix by single-shift complex QR
/// (Givens bulge chasing, Wilkinson shift). Entries below the subdiagonal
/// are ignored.
std::vector<Complex> hessenberg_eigenvalues(ComplexMatrix h);

/// Eigenvalues of the tridiagonal matrix with the given diagonal,
/// subdiagonal (lower[i] at row i+1, column i) and superdiagonal. Every
/// product lower[i] * upper[i] must be nonzero. The matrix is balanced by a
/// diagonal similarity to complex symmetric form and handed to
/// hessenberg_eigenvalues.
std::vector<Complex> tridiagonal_eigenvalues(std::span<const Complex> diagonal,
                                             std::span<const Complex> lower,
                                             std::span<const Complex> upper);

/// Lexicographic order on (real, imag), used for reproducible output.
void sort_eigenvalues(std::vector<Complex>& values);

}  // namespace jacobi
