#include "jacobi/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jacobi {

double omega_constant() {
  static const double t = [] {
    double x = 0.5;
    for (int i = 0; i < 100; ++i) {
      const double ex = std::exp(x);
      const double step = (x * ex - 1.0) / (ex * (x + 1.0));
      x -= step;
      if (std::abs(step) <= 1e-17) break;
    }
    return x;
  }();
  return t;
}

bool in_omega(Complex z, double D0, double t) {
  if (std::abs(z) > 1.0 + 1e-14) throw std::invalid_argument("in_omega: |z| > 1");
  if (z == Complex(0.0)) return true;
  const double threshold = 2.0 * D0 / t;
  return std::abs(z - 1.0 / z) > threshold + kRegionSlack * std::max(1.0, threshold);
}

bool no_spectrum_criterion(const JacobiOperator& op, double t) {
  return op.sigma1(0) + kRegionSlack < t;
}

bool no_spectrum_criterion(const JacobiOperator& op) {
  return no_spectrum_criterion(op, omega_constant());
}

bool in_spectrum_free_region(const JacobiOperator& op, Complex lambda, double t) {
  return in_omega(inverse_joukowski(lambda), op.sigma0(0), t);
}

bool RectangleEnclosure::contains(Complex w, double slack) const {
  const double re = std::abs(w.real());
  return re > re_lo - slack && re < re_hi + slack && std::abs(w.imag()) < im_bound + slack;
}

std::optional<RectangleEnclosure> spectral_rectangles(const JacobiOperator& op, double t) {
  const double c = 2.0 * op.sigma0(0) / t;
  if (c >= 2.0) return std::nullopt;
  return RectangleEnclosure{c, std::sqrt(4.0 - c * c), std::sqrt(4.0 + c * c), c * c / 4.0};
}

RegionReport region_report(const JacobiOperator& op) {
  RegionReport r;
  r.t = omega_constant();
  r.D0 = op.sigma0(0);
  r.D1 = op.sigma1(0);
  r.omega_threshold = 2.0 * r.D0 / r.t;
  r.c = r.omega_threshold;
  r.no_spectrum = no_spectrum_criterion(op, r.t);
  r.rectangles = spectral_rectangles(op, r.t);
  return r;
}

std::string_view to_string(GridLabel label) {
  switch (label) {
    case GridLabel::FreeRegion: return "free-region";
    case GridLabel::Unresolved: return "unresolved";
    case GridLabel::EssentialBand: return "essential-band";
  }
  return "unknown";
}

Complex GridSpec::point(int row, int col) const {
  const double re = re_min + (re_max - re_min) * col / (re_resolution - 1);
  const double im = im_min + (im_max - im_min) * row / (im_resolution - 1);
  return {re, im};
}

double GridSpec::cell_diagonal() const {
  return std::hypot((re_max - re_min) / (re_resolution - 1),
                    (im_max - im_min) / (im_resolution - 1));
}

double distance_to_band(Complex lambda) {
  const double excess = std::max(0.0, std::abs(lambda.real()) - 2.0);
  return std::hypot(excess, lambda.imag());
}

std::vector<GridPoint> region_grid(const JacobiOperator& op, const GridSpec& grid) {
  if (grid.re_resolution < 2 || grid.im_resolution < 2)
    throw std::invalid_argument("region_grid: resolution must be >= 2 per axis");
  if (!(grid.re_min < grid.re_max) || !(grid.im_min < grid.im_max))
    throw std::invalid_argument("region_grid: empty range");
  const double t = omega_constant();
  const double D0 = op.sigma0(0);
  const double diag = grid.cell_diagonal();
  std::vector<GridPoint> out;
  out.reserve(static_cast<std::size_t>(grid.re_resolution) * grid.im_resolution);
  for (int row = 0; row < grid.im_resolution; ++row) {
    for (int col = 0; col < grid.re_resolution; ++col) {
      const Complex lambda = grid.point(row, col);
      GridLabel label = GridLabel::Unresolved;
      if (distance_to_band(lambda) < diag)
        label = GridLabel::EssentialBand;
      else if (in_omega(inverse_joukowski(lambda), D0, t))
        label = GridLabel::FreeRegion;
      out.push_back({lambda, label});
    }
  }
  return out;
}

}  // namespace jacobi
