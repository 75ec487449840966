#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "fixtures.hpp"
#include "jacobi/corpus.hpp"
#include "jacobi/operator.hpp"

using namespace jacobi;

TEST_SUITE("operator") {

TEST_CASE("background values outside the stored entries") {
  const JacobiOperator op = fixtures::diagonal_one(3.0);
  CHECK(op.a(0) == Complex(1.0));
  CHECK(op.c(0) == Complex(1.0));
  CHECK(op.b(1) == Complex(3.0));
  CHECK(op.b(2) == Complex(0.0));
  CHECK(op.a(7) == Complex(1.0));
  CHECK(op.support_bound() == 1);
}

TEST_CASE("entries equal to the background are dropped") {
  const JacobiOperator op({{2, 1.0}}, {{3, 0.0}}, {{1, 1.0}});
  CHECK(op.a_entries().empty());
  CHECK(op.b_entries().empty());
  CHECK(op.c_entries().empty());
  CHECK(op == fixtures::free_operator());
  CHECK(op.support_bound() == 0);
}

TEST_CASE("construction rejects bad entries") {
  CHECK_THROWS_AS(JacobiOperator({}, {{0, 1.0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(JacobiOperator({}, {{1, 1.0}, {1, 2.0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(JacobiOperator({{1, 0.0}}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(JacobiOperator({}, {}, {{2, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(JacobiOperator({}, {{1, std::numeric_limits<double>::quiet_NaN()}}, {}),
                  std::invalid_argument);
}

TEST_CASE("weights and tail sums") {
  // a_1 = c_1 = 2 puts the weight |1 - a_1 c_1| = 3 on site 2.
  const JacobiOperator op = fixtures::offdiagonal_one(2.0);
  CHECK(op.weight(1) == doctest::Approx(0.0));
  CHECK(op.weight(2) == doctest::Approx(3.0));
  CHECK(op.support_bound() == 2);
  CHECK(op.sigma0(0) == doctest::Approx(3.0));
  CHECK(op.sigma1(0) == doctest::Approx(6.0));
  CHECK(op.sigma0(2) == 0.0);
  CHECK_THROWS_AS(op.weight(0), std::invalid_argument);

  const JacobiOperator b = fixtures::diagonal_one(3.0);
  CHECK(b.sigma0(0) == 3.0);
  CHECK(b.sigma1(0) == 3.0);
  CHECK(b.sigma1(1) == 0.0);
}

TEST_CASE("gauge factor is the tail product of a") {
  const JacobiOperator op({{1, 2.0}, {3, Complex(0.0, 1.0)}}, {}, {});
  CHECK(std::abs(op.gauge_factor(0) - Complex(0.0, 2.0)) < 1e-15);
  CHECK(std::abs(op.gauge_factor(2) - Complex(0.0, 1.0)) < 1e-15);
  CHECK(op.gauge_factor(4) == Complex(1.0));
}

TEST_CASE("joukowski and its inverse") {
  CHECK(std::abs(joukowski(0.5) - 2.5) < 1e-15);
  CHECK_THROWS_AS(joukowski(0.0), std::invalid_argument);
  const Complex z = inverse_joukowski(10.0 / 3.0);
  CHECK(std::abs(z - 1.0 / 3.0) < 1e-15);
  // On the band the unit-circle preimage in the closed upper half plane.
  const Complex w = inverse_joukowski(1.0);
  CHECK(std::abs(std::abs(w) - 1.0) < 1e-15);
  CHECK(w.imag() >= 0.0);
  CHECK(std::abs(joukowski(w) - 1.0) < 1e-15);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Complex lambda = random_in_disk(rng, 10.0);
    const Complex zz = inverse_joukowski(lambda);
    CHECK(std::abs(zz) <= 1.0 + 1e-14);
    CHECK(std::abs(joukowski(zz) - lambda) < 1e-12 * std::max(1.0, std::abs(lambda)));
  }
}

TEST_CASE("spectral point conversions agree") {
  const SpectralPoint p = SpectralPoint::from_z(Complex(0.2, 0.3));
  const SpectralPoint q = SpectralPoint::from_lambda(p.lambda);
  CHECK(std::abs(q.z - p.z) < 1e-14);
}

TEST_CASE("extend_solution solves the recurrence") {
  const JacobiOperator op({{1, Complex(1.5, 0.2)}}, {{1, 0.7}, {2, Complex(0.0, -1.0)}},
                          {{2, 0.8}});
  const Complex z(0.3, 0.4);
  const SolutionSegment y = extend_solution(op, z, 0.0, 1.0, 12);
  CHECK(y.start_index == 0);
  CHECK(y.end_index() == 12);
  CHECK(recurrence_residual(op, z, y) < 1e-10);
  CHECK_THROWS_AS(y.at(13), std::out_of_range);

  // The gauge map turns it into a solution of the symmetric-looking form.
  const SolutionSegment x = gauge_transform(op, y);
  CHECK(gauged_recurrence_residual(op, z, x) < 1e-10);
  const SolutionSegment back = inverse_gauge_transform(op, x);
  for (int n = 0; n <= 12; ++n) CHECK(std::abs(back.at(n) - y.at(n)) < 1e-12 * std::abs(y.at(n)) + 1e-300);
}

TEST_CASE("Wronskian steps by a_{n-1} / c_n") {
  const JacobiOperator op({{1, 2.0}, {2, Complex(0.5, 0.5)}}, {{2, 1.0}}, {{1, 0.5}, {3, 3.0}});
  const Complex z(0.4, -0.2);
  const SolutionSegment g = extend_solution(op, z, 1.0, 0.3, 8);
  const SolutionSegment h = extend_solution(op, z, Complex(0.0, 1.0), -2.0, 8);
  for (int n = 1; n < 8; ++n) {
    const Complex lhs = op.c(n) * wronskian(g, h, n);
    const Complex rhs = op.a(n - 1) * wronskian(g, h, n - 1);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
  }
}

TEST_CASE("rescaling scales every weight") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20; ++k) {
    const JacobiOperator op = random_operator(rng);
    const JacobiOperator half = rescale_perturbation(op, 0.5);
    for (int m = 1; m <= op.support_bound() + 1; ++m)
      CHECK(half.weight(m) == doctest::Approx(0.5 * op.weight(m)).epsilon(1e-12));
  }
}

TEST_CASE("random corpus is reproducible") {
  CHECK(random_corpus(5, 20) == random_corpus(5, 20));
  CHECK_FALSE(random_corpus(5, 20) == random_corpus(6, 20));
  for (const JacobiOperator& op : random_corpus(9, 100)) {
    CHECK(op.support_bound() >= 1);
    CHECK(op.support_bound() <= 10);
  }
}

}
