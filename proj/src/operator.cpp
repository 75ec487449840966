#include "jacobi/operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jacobi {

namespace {

bool is_finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

std::vector<Entry> normalize(std::vector<Entry> entries, Complex background, char key,
                             bool off_diagonal) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& l, const Entry& r) { return l.index < r.index; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Entry& e = entries[i];
    if (e.index < 1)
      throw std::invalid_argument(std::string(1, key) + ": index " + std::to_string(e.index) +
                                  " < 1");
    if (i > 0 && entries[i - 1].index == e.index)
      throw std::invalid_argument(std::string(1, key) + ": duplicate index " +
                                  std::to_string(e.index));
    if (!is_finite(e.value))
      throw std::invalid_argument(std::string(1, key) + ": non-finite value at index " +
                                  std::to_string(e.index));
    if (off_diagonal && e.value == Complex(0.0))
      throw std::invalid_argument(std::string(1, key) + ": zero off-diagonal entry at index " +
                                  std::to_string(e.index));
  }
  std::erase_if(entries, [&](const Entry& e) { return e.value == background; });
  return entries;
}

}  // namespace

JacobiOperator::JacobiOperator(std::vector<Entry> a_list, std::vector<Entry> b_list,
                               std::vector<Entry> c_list)
    : a_(normalize(std::move(a_list), Complex(1.0), 'a', true)),
      b_(normalize(std::move(b_list), Complex(0.0), 'b', false)),
      c_(normalize(std::move(c_list), Complex(1.0), 'c', true)) {
  for (const auto* list : {&a_, &b_, &c_})
    if (!list->empty()) last_stored_ = std::max(last_stored_, list->back().index);

  // d_m can be nonzero only for m <= last_stored_ + 1.
  std::vector<double> d(static_cast<std::size_t>(last_stored_) + 2, 0.0);
  for (int m = 1; m <= last_stored_ + 1; ++m) {
    d[m] = std::abs(this->b(m)) + std::abs(1.0 - this->a(m - 1) * this->c(m - 1));
    if (d[m] != 0.0) support_ = m;
  }
  d.resize(static_cast<std::size_t>(support_) + 1);
  weights_ = std::move(d);
}

Complex JacobiOperator::lookup(const std::vector<Entry>& entries, int n, Complex background) {
  auto it = std::lower_bound(entries.begin(), entries.end(), n,
                             [](const Entry& e, int idx) { return e.index < idx; });
  return (it != entries.end() && it->index == n) ? it->value : background;
}

double JacobiOperator::weight(int m) const {
  if (m < 1) throw std::invalid_argument("weight: m must be >= 1");
  return m <= support_ ? weights_[m] : 0.0;
}

double JacobiOperator::sigma0(int n) const {
  if (n < 0) throw std::invalid_argument("sigma0: n must be >= 0");
  double sum = 0.0;
  for (int m = support_; m > n; --m) sum += weights_[m];
  return sum;
}

double JacobiOperator::sigma1(int n) const {
  if (n < 0) throw std::invalid_argument("sigma1: n must be >= 0");
  double sum = 0.0;
  for (int m = support_; m > n; --m) sum += m * weights_[m];
  return sum;
}

Complex JacobiOperator::gauge_factor(int j) const {
  Complex k(1.0);
  for (const Entry& e : a_)
    if (e.index >= j) k *= e.value;
  return k;
}

SpectralPoint SpectralPoint::from_z(Complex z) { return {z, joukowski(z)}; }

SpectralPoint SpectralPoint::from_lambda(Complex lambda) {
  return {inverse_joukowski(lambda), lambda};
}

Complex joukowski(Complex z) {
  if (z == Complex(0.0)) throw std::invalid_argument("joukowski: z = 0");
  return z + 1.0 / z;
}

Complex inverse_joukowski(Complex lambda) {
  if (lambda.imag() == 0.0 && std::abs(lambda.real()) <= 2.0) {
    const double x = lambda.real();
    return {x / 2.0, std::sqrt((2.0 - x) * (2.0 + x)) / 2.0};
  }
  // Pick the sign giving the larger root w, then z = 1/w avoids cancellation.
  const Complex s = std::sqrt((lambda - 2.0) * (lambda + 2.0));
  const Complex w1 = lambda + s;
  const Complex w2 = lambda - s;
  const Complex w = (std::abs(w1) >= std::abs(w2) ? w1 : w2) / 2.0;
  return 1.0 / w;
}

Complex SolutionSegment::at(int n) const {
  if (!contains(n))
    throw std::out_of_range("segment index " + std::to_string(n) + " outside [" +
                            std::to_string(start_index) + ", " + std::to_string(end_index()) +
                            "]");
  return values[static_cast<std::size_t>(n - start_index)];
}

SolutionSegment extend_solution(const JacobiOperator& op, Complex z, Complex y0, Complex y1,
                                int N) {
  if (N < 1) throw std::invalid_argument("extend_solution: N must be >= 1");
  const Complex lambda = joukowski(z);
  SolutionSegment seg{0, std::vector<Complex>(static_cast<std::size_t>(N) + 1)};
  auto& y = seg.values;
  y[0] = y0;
  y[1] = y1;
  for (int m = 1; m < N; ++m)
    y[m + 1] = ((lambda - op.b(m)) * y[m] - op.a(m - 1) * y[m - 1]) / op.c(m);
  return seg;
}

SolutionSegment gauge_transform(const JacobiOperator& op, const SolutionSegment& segment) {
  SolutionSegment out = segment;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] *= op.gauge_factor(segment.start_index + static_cast<int>(i));
  return out;
}

SolutionSegment inverse_gauge_transform(const JacobiOperator& op,
                                        const SolutionSegment& segment) {
  SolutionSegment out = segment;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] /= op.gauge_factor(segment.start_index + static_cast<int>(i));
  return out;
}

double recurrence_residual(const JacobiOperator& op, Complex z, const SolutionSegment& y) {
  const Complex lambda = joukowski(z);
  double worst = 0.0;
  for (int m = std::max(1, y.start_index + 1); m < y.end_index(); ++m) {
    const Complex r = op.a(m - 1) * y.at(m - 1) + op.b(m) * y.at(m) + op.c(m) * y.at(m + 1) -
                      lambda * y.at(m);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double gauged_recurrence_residual(const JacobiOperator& op, Complex z,
                                  const SolutionSegment& x) {
  const Complex lambda = joukowski(z);
  double worst = 0.0;
  for (int m = std::max(1, x.start_index + 1); m < x.end_index(); ++m) {
    const Complex r =
        x.at(m - 1) + op.b(m) * x.at(m) + op.a(m) * op.c(m) * x.at(m + 1) - lambda * x.at(m);
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

Complex wronskian(const SolutionSegment& g, const SolutionSegment& h, int n) {
  return g.at(n) * h.at(n + 1) - g.at(n + 1) * h.at(n);
}

}  // namespace jacobi
