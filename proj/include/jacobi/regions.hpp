#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "jacobi/operator.hpp"

namespace jacobi {

/// Unique real root of t e^t = 1 (the Omega constant), by Newton iteration.
double omega_constant();

/// Relative slack applied to the strict inequalities below; points within it
/// of a boundary are never declared spectrum-free.
inline constexpr double kRegionSlack = 1e-12;

/// |z - 1/z| > (2/t) D0, for z in the closed unit disk. z = 0 lies in the
/// region for every finite D0.
bool in_omega(Complex z, double D0, double t);

/// sigma1(0) < t.
bool no_spectrum_criterion(const JacobiOperator& op);
bool no_spectrum_criterion(const JacobiOperator& op, double t);

/// lambda lies in the image of the zero-free region under z -> z + 1/z.
bool in_spectrum_free_region(const JacobiOperator& op, Complex lambda, double t);

/// {w : re_lo < |Re w| < re_hi, |Im w| < im_bound}.
struct RectangleEnclosure {
  double c = 0.0;
  double re_lo = 0.0;
  double re_hi = 0.0;
  double im_bound = 0.0;

  bool contains(Complex w, double slack = 0.0) const;
};

/// Empty when c = (2/t) sigma0(0) >= 2.
std::optional<RectangleEnclosure> spectral_rectangles(const JacobiOperator& op, double t);

struct RegionReport {
  double t = 0.0;
  double D0 = 0.0;
  double D1 = 0.0;
  double omega_threshold = 0.0;
  bool no_spectrum = false;
  double c = 0.0;
  std::optional<RectangleEnclosure> rectangles;
};

RegionReport region_report(const JacobiOperator& op);

enum class GridLabel { FreeRegion, Unresolved, EssentialBand };

std::string_view to_string(GridLabel label);

struct GridPoint {
  Complex lambda;
  GridLabel label;
};

struct GridSpec {
  double re_min = 0.0, re_max = 0.0;
  double im_min = 0.0, im_max = 0.0;
  int re_resolution = 2;
  int im_resolution = 2;

  /// Row-major: imaginary part outer, real part inner.
  Complex point(int row, int col) const;
  double cell_diagonal() const;
};

/// Distance from lambda to the segment [-2, 2].
double distance_to_band(Complex lambda);

/// Classifies each grid point; row-major in GridSpec order.
std::vector<GridPoint> region_grid(const JacobiOperator& op, const GridSpec& grid);

}  // namespace jacobi
