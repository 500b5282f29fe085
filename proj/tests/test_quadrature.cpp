#include <doctest.h>

#include <cmath>

#include "hexdist/quadrature.hpp"

using hexdist::integrate;
using hexdist::integrate_panel;

TEST_CASE("polynomials are integrated to machine precision") {
  const double v = integrate([](double x) { return 3.0 * x * x; }, 0.0, 2.0);
  CHECK(std::fabs(v - 8.0) < 1e-13);
}

TEST_CASE("smooth transcendental integrand") {
  const double v = integrate([](double x) { return std::sin(x); }, 0.0,
                             std::acos(-1.0), 1e-12);
  CHECK(std::fabs(v - 2.0) < 1e-12);
}

TEST_CASE("square-root kink at the lower endpoint") {
  const double v = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0,
                             1e-11);
  CHECK(std::fabs(v - 2.0 / 3.0) < 1e-11);
}

TEST_CASE("inverted square-root kink at the upper endpoint") {
  const double v = integrate([](double x) { return std::sqrt(1.0 - x * x); },
                             0.0, 1.0, 1e-11);
  CHECK(std::fabs(v - std::acos(-1.0) / 4.0) < 1e-10);
}

TEST_CASE("empty interval integrates to zero") {
  CHECK(integrate([](double) { return 1.0; }, 0.5, 0.5) == 0.0);
}

TEST_CASE("single panel is exact for low-order polynomials") {
  const double v = integrate_panel([](double x) { return x * x * x; }, 0.0, 1.0);
  CHECK(std::fabs(v - 0.25) < 1e-14);
}
