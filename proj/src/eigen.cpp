#include "jacobi/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jacobi {

namespace {

bool negligible(Complex sub, Complex d1, Complex d2) {
  const double scale = std::abs(d1) + std::abs(d2);
  const double mag = std::abs(sub);
  return mag == 0.0 || mag <= kDeflationTolerance * scale;
}

// Eigenvalue of the trailing 2x2 block [a b; c d] closest to d.
Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d) {
  const Complex half_trace = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  const Complex m1 = half_trace + disc;
  const Complex m2 = half_trace - disc;
  return std::abs(m1 - d) < std::abs(m2 - d) ? m1 : m2;
}

// Plain complex product; the inner loops must not go through the
// NaN-recovering library multiplication.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline Complex mul_conj(Complex a, Complex b) {  // conj(a) * b
  return {a.real() * b.real() + a.imag() * b.imag(), a.real() * b.imag() - a.imag() * b.real()};
}

}  // namespace

std::vector<Complex> hessenberg_eigenvalues(ComplexMatrix h) {
  const int n = h.size();
  std::vector<Complex> w(static_cast<std::size_t>(n));
  if (n == 0) return w;

  // Rotation k acts on rows/columns (k, k+1) as G = [c s; -conj(s) c], c real.
  std::vector<double> rc(static_cast<std::size_t>(n));
  std::vector<Complex> rs(static_cast<std::size_t>(n));
  auto rotate_rows = [&](int k, int j) {
    Complex* col = &h(0, j);
    const Complex t1 = col[k];
    const Complex t2 = col[k + 1];
    col[k] = rc[k] * t1 + mul(rs[k], t2);
    col[k + 1] = rc[k] * t2 - mul_conj(rs[k], t1);
  };

  const long max_sweeps = 30L * n;
  long sweeps = 0;
  int hi = n - 1;
  int its = 0;
  std::vector<Complex> done;
  while (hi >= 0) {
    int lo = hi;
    while (lo > 0) {
      if (negligible(h(lo, lo - 1), h(lo, lo), h(lo - 1, lo - 1))) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      w[hi] = h(hi, hi);
      done.push_back(w[hi]);
      --hi;
      its = 0;
      continue;
    }
    if (++sweeps > max_sweeps)
      throw ConvergenceError("hessenberg_eigenvalues: no convergence after " +
                                 std::to_string(max_sweeps) + " sweeps",
                             done);
    ++its;
    Complex mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    if (its % 10 == 0) mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1)) * Complex(1.0, 1.0);

    // Bulge chase in blocks of kBlock rotations. Inside a block the row
    // rotations touch only the columns the block itself needs; the columns
    // to the right receive the whole block of rotations afterwards.
    constexpr int kBlock = 32;
    for (int kb = lo; kb < hi; kb += kBlock) {
      const int ke = std::min(kb + kBlock, hi);
      for (int k = kb; k < ke; ++k) {
        const Complex x = k == lo ? h(lo, lo) - mu : h(k, k - 1);
        const Complex y = k == lo ? h(lo + 1, lo) : h(k + 1, k - 1);
        const double ax = std::abs(x);
        const double ay = std::abs(y);
        if (ay == 0.0) {
          rc[k] = 1.0;
          rs[k] = 0.0;
        } else if (ax == 0.0) {
          rc[k] = 0.0;
          rs[k] = std::conj(y) / ay;
        } else {
          const double r = std::hypot(ax, ay);
          rc[k] = ax / r;
          rs[k] = (x / ax) * std::conj(y) / r;
        }
        if (k > lo) {
          h(k, k - 1) = rc[k] * x + rs[k] * y;
          h(k + 1, k - 1) = 0.0;
        }
        for (int j = k; j <= ke; ++j) rotate_rows(k, j);

        // Columns (k, k+1) times G^H.
        Complex* ck = &h(0, k);
        Complex* ck1 = &h(0, k + 1);
        const double c = rc[k];
        const Complex s = rs[k];
        const int last = std::min(k + 2, hi);
        for (int i = lo; i <= last; ++i) {
          const Complex t1 = ck[i];
          const Complex t2 = ck1[i];
          ck[i] = c * t1 + mul_conj(s, t2);
          ck1[i] = c * t2 - mul(s, t1);
        }
      }
      for (int j = ke + 1; j <= hi; ++j)
        for (int k = kb; k < ke; ++k) rotate_rows(k, j);
    }
  }
  return w;
}

std::vector<Complex> tridiagonal_eigenvalues(std::span<const Complex> diagonal,
                                             std::span<const Complex> lower,
                                             std::span<const Complex> upper) {
  const int n = static_cast<int>(diagonal.size());
  if (n > 0 && (lower.size() + 1 < diagonal.size() || upper.size() + 1 < diagonal.size()))
    throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal too short");
  // Balance by a diagonal similarity to |lower| = |upper| (complex symmetric).
  ComplexMatrix h(n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = diagonal[i];
    if (i + 1 < n) {
      const Complex prod = lower[i] * upper[i];
      if (prod == Complex(0.0))
        throw std::invalid_argument("tridiagonal_eigenvalues: zero off-diagonal product");
      h(i + 1, i) = h(i, i + 1) = std::sqrt(prod);
    }
  }
  return hessenberg_eigenvalues(std::move(h));
}

void sort_eigenvalues(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](Complex l, Complex r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
}

}  // namespace jacobi
