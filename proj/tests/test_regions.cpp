#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "jacobi/corpus.hpp"
#include "jacobi/regions.hpp"
#include "jacobi/spectrum.hpp"

using namespace jacobi;

namespace {

/// Root of t e^t = 1 by bisection on [0.5, 0.6].
double omega_by_bisection() {
  double lo = 0.5, hi = 0.6;
  while (hi - lo > 1e-16) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (mid * std::exp(mid) < 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("regions") {

TEST_CASE("omega constant") {
  const double t = omega_constant();
  CHECK(std::abs(t * std::exp(t) - 1.0) < 1e-15);
  CHECK(std::abs(t - 0.567) < 5e-4);
  CHECK(std::abs(t - omega_by_bisection()) < 1e-15);
  CHECK(std::abs(t - 0.5671432904097838) < 1e-15);
}

TEST_CASE("membership in the zero-free disk region") {
  const double t = omega_constant();
  for (const Complex z : {Complex(0.5, 0.5), Complex(-0.9, 0.1), Complex(0.0, 0.99)})
    CHECK(in_omega(z, 0.0, t));
  // b_1 = 3: threshold 6 / t ~ 10.58.
  CHECK_FALSE(in_omega(1.0 / 3.0, 3.0, t));
  CHECK(in_omega(0.01, 3.0, t));
  CHECK(in_omega(0.0, 3.0, t));
  CHECK_THROWS_AS(in_omega(1.5, 3.0, t), std::invalid_argument);
  // Points exactly on the threshold are not claimed.
  const double threshold = 2.0 * 3.0 / t;
  const double r = (std::sqrt(threshold * threshold + 4.0) - threshold) / 2.0;  // |z - 1/z| = threshold
  CHECK_FALSE(in_omega(r, 3.0, t));
}

TEST_CASE("no-spectrum criterion") {
  CHECK(no_spectrum_criterion(fixtures::free_operator()));
  CHECK(no_spectrum_criterion(fixtures::diagonal_one(0.5)));
  CHECK(jost_zeros(fixtures::diagonal_one(0.5)).empty());
  CHECK_FALSE(no_spectrum_criterion(fixtures::diagonal_one(3.0)));
}

TEST_CASE("spectrum-free region in the lambda plane") {
  const double t = omega_constant();
  CHECK(in_spectrum_free_region(fixtures::free_operator(), Complex(3.0, 1.0), t));
  CHECK(in_spectrum_free_region(fixtures::free_operator(), Complex(0.0, 0.2), t));
  const JacobiOperator b3 = fixtures::diagonal_one(3.0);
  CHECK_FALSE(in_spectrum_free_region(b3, 10.0 / 3.0, t));
  CHECK(in_spectrum_free_region(b3, 100.0, t));
}

TEST_CASE("rectangle enclosure") {
  const double t = omega_constant();
  CHECK_FALSE(spectral_rectangles(fixtures::diagonal_one(3.0), t).has_value());
  const auto free_rect = spectral_rectangles(fixtures::free_operator(), t);
  REQUIRE(free_rect.has_value());
  CHECK(free_rect->c == 0.0);
  CHECK_FALSE(free_rect->contains(2.0));

  const auto rect = spectral_rectangles(fixtures::diagonal_one(0.1), t);
  REQUIRE(rect.has_value());
  CHECK(rect->c == doctest::Approx(0.3526).epsilon(1e-3));
  CHECK(rect->re_lo == doctest::Approx(1.9687).epsilon(1e-4));
  CHECK(rect->re_hi == doctest::Approx(2.0309).epsilon(1e-4));
  CHECK(rect->im_bound == doctest::Approx(0.0311).epsilon(1e-3));
  CHECK(rect->contains(Complex(2.0, 0.01)));
  CHECK(rect->contains(Complex(-2.0, -0.01)));
  CHECK_FALSE(rect->contains(Complex(2.0, 0.05)));
  CHECK_FALSE(rect->contains(0.0));
  CHECK(jost_zeros(fixtures::diagonal_one(0.1)).empty());
}

TEST_CASE("region report") {
  const RegionReport free_rep = region_report(fixtures::free_operator());
  CHECK(free_rep.no_spectrum);
  CHECK(free_rep.omega_threshold == 0.0);
  const RegionReport rep = region_report(fixtures::diagonal_one(3.0));
  CHECK_FALSE(rep.no_spectrum);
  CHECK(rep.c == doctest::Approx(10.58).epsilon(1e-3));
  CHECK_FALSE(rep.rectangles.has_value());
}

TEST_CASE("enlarging a diagonal entry never shrinks the threshold") {
  std::mt19937_64 rng(55);
  const double t = omega_constant();
  for (int k = 0; k < 100; ++k) {
    const JacobiOperator op = random_operator(rng);
    std::vector<Entry> bs = op.b_entries();
    for (Entry& e : bs) e.value *= 1.5;
    const JacobiOperator bigger(op.a_entries(), bs, op.c_entries());
    CHECK(2.0 * bigger.sigma0(0) / t >= 2.0 * op.sigma0(0) / t);
  }
}

TEST_CASE("grid labels") {
  GridSpec grid{.re_min = -3, .re_max = 3, .im_min = -1, .im_max = 1, .re_resolution = 25,
                .im_resolution = 9};
  const auto free_points = region_grid(fixtures::free_operator(), grid);
  CHECK(free_points.size() == 25u * 9u);
  for (const GridPoint& p : free_points) {
    if (distance_to_band(p.lambda) < grid.cell_diagonal())
      CHECK(p.label == GridLabel::EssentialBand);
    else
      CHECK(p.label == GridLabel::FreeRegion);
  }
  // Row-major with the imaginary part outer.
  CHECK(free_points[1].lambda.real() > free_points[0].lambda.real());
  CHECK(free_points[1].lambda.imag() == free_points[0].lambda.imag());

  GridSpec around{.re_min = 10.0 / 3.0 - 0.5, .re_max = 10.0 / 3.0 + 0.5, .im_min = -0.5,
                  .im_max = 0.5, .re_resolution = 3, .im_resolution = 3};
  const auto points = region_grid(fixtures::diagonal_one(3.0), around);
  CHECK(std::abs(points[4].lambda - 10.0 / 3.0) < 1e-15);
  CHECK(points[4].label == GridLabel::Unresolved);

  GridSpec tiny{.re_min = 0, .re_max = 1, .im_min = 0, .im_max = 1, .re_resolution = 2,
                .im_resolution = 2};
  CHECK(region_grid(fixtures::diagonal_one(3.0), tiny).size() == 4u);
  tiny.re_resolution = 1;
  CHECK_THROWS_AS(region_grid(fixtures::free_operator(), tiny), std::invalid_argument);
  tiny.re_resolution = 2;
  tiny.re_max = tiny.re_min;
  CHECK_THROWS_AS(region_grid(fixtures::free_operator(), tiny), std::invalid_argument);

  CHECK(to_string(GridLabel::FreeRegion) == "free-region");
  CHECK(to_string(GridLabel::Unresolved) == "unresolved");
  CHECK(to_string(GridLabel::EssentialBand) == "essential-band");
}

}
