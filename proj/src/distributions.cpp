#include "hexdist/distributions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hexdist/quadrature.hpp"

namespace hexdist {
namespace {

constexpr double kPi = std::numbers::pi;

// Breakpoint constants, computed once at maximum double precision.
const double kS3 = std::sqrt(3.0);        // sqrt(3)
const double kHalfS3 = 0.5 * kS3;         // sqrt(3)/2
const double k3S3Half = 1.5 * kS3;        // 3 sqrt(3)/2
const double k2S3 = 2.0 * kS3;            // 2 sqrt(3)
const double kS7 = std::sqrt(7.0);
const double kS13 = std::sqrt(13.0);

// Inverse sines whose arguments are exactly 1 at a breakpoint can round
// just above it; clamp so the branch stays finite there.
double asin_c(double x) { return std::asin(std::clamp(x, -1.0, 1.0)); }

// Radicands that vanish at a lower breakpoint can round just below zero;
// clamp those to 0. A radicand negative beyond rounding noise is a
// genuine domain violation and is left to produce NaN.
double sqrt_c(double x) {
  if (x < 0.0 && x > -1e-12) x = 0.0;
  return std::sqrt(x);
}

// ---- within one rhombus -------------------------------------------------

double d1_b0(double d) {
  const double d2 = d * d;
  return (4.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 - 16.0 / 3.0 * d + 2.0 * kPi / kS3;
}
double d1_b1(double d) {
  const double d2 = d * d;
  return 8.0 / kS3 * (1.0 + d2 / 3.0) * asin_c(kS3 / (2.0 * d)) +
         (4.0 / 3.0 - 10.0 * kPi / (9.0 * kS3)) * d2 - 16.0 / 3.0 * d +
         10.0 / 3.0 * sqrt_c(4.0 * d2 - 3.0) - 2.0 * kPi / kS3;
}
double d1_b2(double d) {
  const double d2 = d * d;
  return 4.0 / kS3 * (1.0 - d2 / 3.0) * asin_c(kS3 / (2.0 * d)) -
         (2.0 / 3.0 - 2.0 * kPi / (9.0 * kS3)) * d2 + sqrt_c(4.0 * d2 - 3.0) -
         2.0 * kPi / (3.0 * kS3) - 1.0;
}

// ---- two rhombi sharing a side, opposite orientation --------------------

double d2_b0(double d) {
  const double d2 = d * d;
  return 4.0 / 3.0 * d - (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2;
}
double d2_b1(double d) {
  const double d2 = d * d;
  return -4.0 / kS3 * (d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) +
         (4.0 * kPi / (9.0 * kS3) - 1.0 / 3.0) * d2 + 4.0 / 3.0 * d -
         5.0 / 3.0 * sqrt_c(4.0 * d2 - 3.0) + 2.0 * kPi / kS3;
}
double d2_b2(double d) {
  const double d2 = d * d;
  return -2.0 / kS3 * (d2 / 3.0 + 2.0) * asin_c(kS3 / (2.0 * d)) +
         (2.0 * kPi / (9.0 * kS3) + 1.0 / 3.0) * d2 -
         1.5 * sqrt_c(4.0 * d2 - 3.0) + 2.0 * kPi / kS3 + 0.5;
}
double d2_b3(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (d2 / 3.0 + 4.0) * asin_c(kS3 / d) -
         (2.0 * kPi / (9.0 * kS3) + 1.0 / 3.0) * d2 +
         10.0 / 3.0 * sqrt_c(d2 - 3.0) - 8.0 * kPi / (3.0 * kS3) - 2.0;
}

// ---- within one hexagon --------------------------------------------------

double hi_b0(double d) {
  const double d2 = d * d;
  return (2.0 / 3.0 - 2.0 * kPi / (9.0 * kS3)) * d2 - 8.0 / 3.0 * d + 2.0 * kPi / kS3;
}
double hi_b1(double d) {
  const double d2 = d * d;
  return -4.0 / kS3 * (2.0 * d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) +
         2.0 * kPi / (3.0 * kS3) * d2 - 2.0 * sqrt_c(4.0 * d2 - 3.0) +
         10.0 * kPi / (3.0 * kS3);
}
double hi_b2(double d) {
  const double d2 = d * d;
  return 4.0 / kS3 * (d2 / 3.0 + 4.0) * asin_c(kS3 / d) -
         (4.0 * kPi / (9.0 * kS3) + 2.0 / 3.0) * d2 +
         20.0 / 3.0 * sqrt_c(d2 - 3.0) - 16.0 * kPi / (3.0 * kS3) - 4.0;
}

// ---- first cross-hexagon rhombus pair ------------------------------------

double d3_b0(double d) {
  const double d2 = d * d;
  return -2.0 * d2 / (3.0 * kS3) * asin_c(kS3 / (2.0 * d)) +
         kPi / (3.0 * kS3) * d2 - sqrt_c(4.0 * d2 - 3.0) / 6.0;
}
double d3_b1(double d) {
  const double d2 = d * d;
  return (d2 + 4.0) / kS3 * asin_c(kS3 / (2.0 * d)) -
         (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 - 2.0 / 3.0 * d +
         19.0 / 12.0 * sqrt_c(4.0 * d2 - 3.0) - 4.0 * kPi / (3.0 * kS3) - 0.75;
}
double d3_b2(double d) {
  const double d2 = d * d;
  return -(d2 / (3.0 * kS3) + 10.0 / kS3) * asin_c(kS3 / d) -
         (2.0 * d2 / (3.0 * kS3) + 2.0 * kS3) * asin_c(kS3 / (2.0 * d)) +
         (4.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 -
         13.0 / 6.0 * sqrt_c(4.0 * d2 - 3.0) - 11.0 / 3.0 * sqrt_c(d2 - 3.0) -
         2.0 / 3.0 * d + 16.0 * kPi / (3.0 * kS3) + 5.5;
}
double d3_b3(double d) {
  const double d2 = d * d;
  return (d2 / (3.0 * kS3) + 2.0 * kS3) * asin_c(kS3 / d) -
         (2.0 * d2 / (3.0 * kS3) + 2.0 * kS3) * asin_c(kS3 / (2.0 * d)) -
         13.0 / 6.0 * sqrt_c(4.0 * d2 - 3.0) + 7.0 / 3.0 * sqrt_c(d2 - 3.0) +
         2.0 * d - 0.5;
}
double d3_b4(double d) {
  const double d2 = d * d;
  return (2.0 * d2 / (3.0 * kS3) + 4.0 * kS3) * asin_c(3.0 * kS3 / (2.0 * d)) +
         (d2 / (3.0 * kS3) + 2.0 * kS3) * asin_c(kS3 / d) -
         (2.0 * d2 / (3.0 * kS3) + 2.0 * kS3) * asin_c(kS3 / (2.0 * d)) -
         kPi / (3.0 * kS3) * d2 - 13.0 / 6.0 * sqrt_c(4.0 * d2 - 3.0) +
         7.0 / 3.0 * sqrt_c(d2 - 3.0) + 11.0 / 6.0 * sqrt_c(4.0 * d2 - 27.0) +
         2.0 * d - 2.0 * kS3 * kPi - 0.5;
}
double d3_b5(double d) {
  const double d2 = d * d;
  return -d2 / (3.0 * kS3) * asin_c(3.0 * kS3 / (2.0 * d)) +
         (kPi / (9.0 * kS3) - 1.0 / 3.0) * d2 + 2.0 * d -
         sqrt_c(4.0 * d2 - 27.0) / 4.0 - 2.25;
}

// ---- second cross-hexagon rhombus pair -----------------------------------

double d4_b0(double d) {
  const double d2 = d * d;
  return (2.0 * kPi / (9.0 * kS3) - 1.0 / 6.0) * d2;
}
double d4_b1(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (2.0 * d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) -
         (4.0 * kPi / (9.0 * kS3) + 1.0 / 6.0) * d2 + sqrt_c(4.0 * d2 - 3.0) -
         kPi / kS3;
}
double d4_b2(double d) {
  const double d2 = d * d;
  return 1.0 / kS3 * (4.0 * d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) +
         (1.0 / 3.0 - 4.0 * kPi / (9.0 * kS3)) * d2 +
         2.0 / 3.0 * sqrt_c(4.0 * d2 - 3.0) - 2.0 / 3.0 * d -
         2.0 * kPi / (3.0 * kS3) + 0.5;
}
double d4_b3(double d) {
  const double d2 = d * d;
  return 5.0 / kS3 * asin_c(kS3 / (2.0 * d)) -
         4.0 / kS3 * (d2 / 3.0 + 2.0) * asin_c(kS3 / d) +
         (4.0 * kPi / (9.0 * kS3) - 1.0 / 3.0) * d2 +
         5.0 / 3.0 * sqrt_c(4.0 * d2 - 3.0) - 4.0 * sqrt_c(d2 - 3.0) -
         2.0 / 3.0 * d + 8.0 * kPi / (3.0 * kS3) - 0.5;
}
double d4_b4(double d) {
  const double d2 = d * d;
  return 5.0 / kS3 * asin_c(kS3 / (2.0 * d)) -
         2.0 / kS3 * (d2 / 3.0 + 2.0) * asin_c(kS3 / d) +
         (2.0 * kPi / (9.0 * kS3) - 1.0 / 6.0) * d2 +
         5.0 / 3.0 * sqrt_c(4.0 * d2 - 3.0) - 2.0 * sqrt_c(d2 - 3.0) - 2.0 * d +
         4.0 * kPi / (3.0 * kS3) - 0.5;
}
double d4_b5(double d) {
  const double d2 = d * d;
  return (2.0 * d2 / (3.0 * kS3) + 3.0 * kS3) * asin_c(3.0 * kS3 / (2.0 * d)) +
         (1.0 / 6.0 - 2.0 * kPi / (9.0 * kS3)) * d2 +
         1.5 * sqrt_c(4.0 * d2 - 27.0) - 2.0 * d - kS3 * kPi;
}

// ---- third cross-hexagon rhombus pair ------------------------------------

double d5_b0(double d) {
  const double d2 = d * d;
  return (1.0 / 3.0 - kPi / (9.0 * kS3)) * d2;
}
double d5_b1(double d) {
  const double d2 = d * d;
  return -4.0 * d2 / (3.0 * kS3) * asin_c(kS3 / (2.0 * d)) +
         (kPi / (3.0 * kS3) - 1.0) * d2 + 8.0 / 3.0 * d -
         sqrt_c(4.0 * d2 - 3.0) / 3.0 - 1.0;
}
double d5_b2(double d) {
  const double d2 = d * d;
  return 4.0 / kS3 * (d2 / 3.0 - 2.0) * asin_c(kS3 / (2.0 * d)) +
         (1.0 / 3.0 - kPi / (9.0 * kS3)) * d2 + 8.0 / 3.0 * d -
         7.0 / 3.0 * sqrt_c(4.0 * d2 - 3.0) + 4.0 * kPi / (3.0 * kS3) + 1.0;
}
double d5_b3(double d) {
  const double d2 = d * d;
  return 4.0 / kS3 * (d2 / 3.0 - 2.0) * asin_c(kS3 / (2.0 * d)) +
         2.0 * d2 / (3.0 * kS3) * asin_c(kS3 / d) +
         (1.0 - kPi / (3.0 * kS3)) * d2 - 7.0 / 3.0 * sqrt_c(4.0 * d2 - 3.0) +
         2.0 / 3.0 * sqrt_c(d2 - 3.0) + 4.0 * kPi / (3.0 * kS3) + 3.0;
}
double d5_b4(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (4.0 - d2 / 3.0) * asin_c(kS3 / d) +
         (kPi / (9.0 * kS3) - 1.0 / 3.0) * d2 + 2.0 * sqrt_c(d2 - 3.0) -
         4.0 * kPi / (3.0 * kS3) - 2.0;
}

// ---- fourth cross-hexagon rhombus pair -----------------------------------

double d6_b0(double d) {
  const double d2 = d * d;
  return -(d2 / (3.0 * kS3) + 1.0 / kS3) * asin_c(kS3 / (2.0 * d)) +
         (1.0 / 6.0 + kPi / (9.0 * kS3)) * d2 -
         5.0 / 12.0 * sqrt_c(4.0 * d2 - 3.0) + kPi / (3.0 * kS3) + 0.25;
}
double d6_b1(double d) {
  const double d2 = d * d;
  return (2.0 * d2 / (3.0 * kS3) + 4.0 / kS3) * asin_c(kS3 / d) +
         (2.0 / kS3 - d2 / (3.0 * kS3)) * asin_c(kS3 / (2.0 * d)) -
         (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 +
         7.0 / 12.0 * sqrt_c(4.0 * d2 - 3.0) + 2.0 * sqrt_c(d2 - 3.0) -
         13.0 * kPi / (6.0 * kS3) - 1.25;
}
double d6_b2(double d) {
  const double d2 = d * d;
  return d2 / (3.0 * kS3) * asin_c(kS3 / d) +
         (2.0 / kS3 - d2 / (3.0 * kS3)) * asin_c(kS3 / (2.0 * d)) -
         (1.0 / 6.0 + kPi / (9.0 * kS3)) * d2 +
         7.0 / 12.0 * sqrt_c(4.0 * d2 - 3.0) + sqrt_c(d2 - 3.0) / 3.0 -
         5.0 * kPi / (6.0 * kS3) - 0.25;
}
double d6_b3(double d) {
  const double d2 = d * d;
  return d2 / (3.0 * kS3) * asin_c(kS3 / d) +
         (2.0 / kS3 - d2 / (3.0 * kS3)) * asin_c(kS3 / (2.0 * d)) -
         (2.0 * d2 / (3.0 * kS3) + 3.0 * kS3) * asin_c(3.0 * kS3 / (2.0 * d)) +
         (2.0 * kPi / (9.0 * kS3) - 1.0 / 6.0) * d2 +
         7.0 / 12.0 * sqrt_c(4.0 * d2 - 3.0) + sqrt_c(d2 - 3.0) / 3.0 -
         1.5 * sqrt_c(4.0 * d2 - 27.0) + 11.0 * kPi / (3.0 * kS3) - 0.25;
}
double d6_b4(double d) {
  const double d2 = d * d;
  return (d2 / (3.0 * kS3) - 4.0 / kS3) * asin_c(kS3 / d) -
         (d2 / (3.0 * kS3) + 1.0 / (2.0 * kS3)) * asin_c(kS3 / (2.0 * d)) -
         (2.0 * d2 / (3.0 * kS3) + 7.0 * kS3 / 2.0) * asin_c(3.0 * kS3 / (2.0 * d)) +
         (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 -
         sqrt_c(4.0 * d2 - 3.0) / 4.0 - sqrt_c(d2 - 3.0) -
         5.0 / 3.0 * sqrt_c(4.0 * d2 - 27.0) + 11.0 * kPi / (2.0 * kS3) + 3.25;
}
double d6_b5(double d) {
  const double d2 = d * d;
  return (d2 / (3.0 * kS3) - 4.0 / kS3) * asin_c(kS3 / d) -
         (d2 / (3.0 * kS3) + 1.0 / (2.0 * kS3)) * asin_c(kS3 / (2.0 * d)) +
         5.0 * kS3 / 2.0 * asin_c(3.0 * kS3 / (2.0 * d)) -
         sqrt_c(4.0 * d2 - 3.0) / 4.0 - sqrt_c(d2 - 3.0) +
         5.0 / 6.0 * sqrt_c(4.0 * d2 - 27.0) - kPi / (2.0 * kS3) - 1.25;
}
double d6_b6(double d) {
  const double d2 = d * d;
  return (d2 / (3.0 * kS3) + 8.0 / kS3) * asin_c(2.0 * kS3 / d) -
         (d2 / (3.0 * kS3) + 1.0 / (2.0 * kS3)) * asin_c(kS3 / (2.0 * d)) +
         5.0 * kS3 / 2.0 * asin_c(3.0 * kS3 / (2.0 * d)) -
         (1.0 / 6.0 + kPi / (9.0 * kS3)) * d2 - sqrt_c(4.0 * d2 - 3.0) / 4.0 +
         5.0 / 6.0 * sqrt_c(4.0 * d2 - 27.0) + 2.0 * sqrt_c(d2 - 12.0) -
         31.0 * kPi / (6.0 * kS3) - 2.25;
}

// ---- fifth cross-hexagon rhombus pair ------------------------------------

double d7_b0(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (2.0 * d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) +
         4.0 / kS3 * asin_c(kS3 / d) -
         (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 + sqrt_c(4.0 * d2 - 3.0) +
         4.0 / 3.0 * sqrt_c(d2 - 3.0) - 7.0 * kPi / (3.0 * kS3) - 2.0;
}
double d7_b1(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (2.0 * d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) -
         2.0 / kS3 * (d2 / 3.0 + 2.0) * asin_c(kS3 / d) +
         sqrt_c(4.0 * d2 - 3.0) - 2.0 * sqrt_c(d2 - 3.0) + kPi / (3.0 * kS3);
}
double d7_b2(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (2.0 * d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) -
         2.0 / kS3 * (d2 / 3.0 + 2.0) * asin_c(kS3 / d) -
         2.0 * kS3 * asin_c(3.0 * kS3 / (2.0 * d)) + sqrt_c(4.0 * d2 - 3.0) -
         2.0 * sqrt_c(d2 - 3.0) - 2.0 / 3.0 * sqrt_c(4.0 * d2 - 27.0) +
         10.0 * kPi / (3.0 * kS3);
}
double d7_b3(double d) {
  const double d2 = d * d;
  return 1.0 / kS3 * (2.0 * d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) -
         4.0 / kS3 * (d2 / 3.0 + 2.0) * asin_c(kS3 / d) -
         3.0 * kS3 * asin_c(3.0 * kS3 / (2.0 * d)) +
         (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 +
         sqrt_c(4.0 * d2 - 3.0) / 2.0 - 4.0 * sqrt_c(d2 - 3.0) -
         sqrt_c(4.0 * d2 - 27.0) + 17.0 * kPi / (3.0 * kS3) + 4.5;
}
double d7_b4(double d) {
  const double d2 = d * d;
  return 1.0 / kS3 * (2.0 * d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) -
         4.0 / kS3 * (d2 / 3.0 + 2.0) * asin_c(kS3 / d) +
         (2.0 * d2 / (3.0 * kS3) + 3.0 * kS3) * asin_c(3.0 * kS3 / (2.0 * d)) +
         sqrt_c(4.0 * d2 - 3.0) / 2.0 - 4.0 * sqrt_c(d2 - 3.0) +
         1.5 * sqrt_c(4.0 * d2 - 27.0) - kPi / (3.0 * kS3);
}
double d7_b5(double d) {
  const double d2 = d * d;
  return 1.0 / kS3 * (2.0 * d2 / 3.0 + 1.0) * asin_c(kS3 / (2.0 * d)) +
         (2.0 * d2 / (3.0 * kS3) + 3.0 * kS3) * asin_c(3.0 * kS3 / (2.0 * d)) +
         8.0 / kS3 * asin_c(2.0 * kS3 / d) -
         (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 +
         sqrt_c(4.0 * d2 - 3.0) / 2.0 + 1.5 * sqrt_c(4.0 * d2 - 27.0) +
         4.0 / 3.0 * sqrt_c(d2 - 12.0) - 17.0 * kPi / (3.0 * kS3) - 8.0;
}

// ---- between two adjacent hexagons ---------------------------------------

double ha_b0(double d) {
  const double d2 = d * d;
  return (kPi / (9.0 * kS3) - 1.0 / 3.0) * d2 + 4.0 / 3.0 * d;
}
double ha_b1(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (d2 + 2.0) * asin_c(kS3 / (2.0 * d)) -
         (1.0 / 3.0 + 5.0 * kPi / (9.0 * kS3)) * d2 +
         11.0 / 6.0 * sqrt_c(4.0 * d2 - 3.0) - 4.0 * kPi / (3.0 * kS3) - 0.5;
}
double ha_b2(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (d2 / 3.0 - 2.0) * asin_c(kS3 / (2.0 * d)) -
         4.0 / kS3 * (d2 / 3.0 + 4.0) * asin_c(kS3 / d) +
         (1.0 + kPi / (3.0 * kS3)) * d2 - 7.0 / 6.0 * sqrt_c(4.0 * d2 - 3.0) -
         20.0 / 3.0 * sqrt_c(d2 - 3.0) + 8.0 * kPi / kS3 + 4.5;
}
double ha_b3(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (d2 / 3.0 - 2.0) * asin_c(kS3 / (2.0 * d)) +
         (1.0 / 3.0 - kPi / (9.0 * kS3)) * d2 -
         7.0 / 6.0 * sqrt_c(4.0 * d2 - 3.0) + 8.0 * kPi / (3.0 * kS3) + 0.5;
}
double ha_b4(double d) {
  const double d2 = d * d;
  return -2.0 / kS3 * (d2 / 3.0 + 6.0) * asin_c(3.0 * kS3 / (2.0 * d)) -
         4.0 / kS3 * (d2 / 3.0 + 2.0) * asin_c(kS3 / d) +
         (1.0 / 3.0 + 5.0 * kPi / (9.0 * kS3)) * d2 - 4.0 * sqrt_c(d2 - 3.0) -
         11.0 / 6.0 * sqrt_c(4.0 * d2 - 27.0) + 28.0 * kPi / (3.0 * kS3) + 4.5;
}
double ha_b5(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (d2 / 3.0 + 12.0) * asin_c(3.0 * kS3 / (2.0 * d)) -
         4.0 / kS3 * (d2 / 3.0 + 2.0) * asin_c(kS3 / d) +
         (kPi / (9.0 * kS3) - 1.0 / 3.0) * d2 - 4.0 * sqrt_c(d2 - 3.0) +
         19.0 / 6.0 * sqrt_c(4.0 * d2 - 27.0) - 8.0 * kPi / (3.0 * kS3) - 4.5;
}
double ha_b6(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (d2 / 3.0 + 12.0) *
             (asin_c(3.0 * kS3 / (2.0 * d)) + asin_c(2.0 * kS3 / d)) -
         (2.0 / 3.0 + 4.0 * kPi / (9.0 * kS3)) * d2 +
         19.0 / 6.0 * sqrt_c(4.0 * d2 - 27.0) +
         16.0 / 3.0 * sqrt_c(d2 - 12.0) - 16.0 * kPi / kS3 - 12.5;
}

// ---- the far rhombus pair of the side-2 hexagon decomposition ------------

double d8_b0(double d) {
  const double d2 = d * d;
  return -2.0 / kS3 * (d2 / 3.0 + 4.0) * asin_c(kS3 / d) +
         (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 -
         10.0 / 3.0 * sqrt_c(d2 - 3.0) + 8.0 * kPi / (3.0 * kS3) + 2.0;
}
double d8_b1(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (d2 / 3.0 + 8.0) * asin_c(kS3 / d) +
         4.0 / kS3 * (d2 / 3.0 + 6.0) * asin_c(3.0 * kS3 / (2.0 * d)) -
         (1.0 + 2.0 * kPi / (3.0 * kS3)) * d2 + 6.0 * sqrt_c(d2 - 3.0) +
         11.0 / 3.0 * sqrt_c(4.0 * d2 - 27.0) - 40.0 * kPi / (3.0 * kS3) - 11.0;
}
double d8_b2(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (d2 / 3.0 + 8.0) * asin_c(kS3 / d) -
         4.0 / kS3 * (d2 / 3.0 + 12.0) * asin_c(3.0 * kS3 / (2.0 * d)) +
         (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 + 6.0 * sqrt_c(d2 - 3.0) -
         19.0 / 3.0 * sqrt_c(4.0 * d2 - 27.0) + 32.0 * kPi / (3.0 * kS3) + 7.0;
}
double d8_b3(double d) {
  const double d2 = d * d;
  return -4.0 / kS3 * (d2 / 3.0 + 12.0) * asin_c(3.0 * kS3 / (2.0 * d)) -
         2.0 / kS3 * (d2 / 3.0 + 8.0) * asin_c(2.0 * kS3 / d) +
         (1.0 + 2.0 * kPi / (3.0 * kS3)) * d2 -
         19.0 / 3.0 * sqrt_c(4.0 * d2 - 27.0) - 4.0 * sqrt_c(d2 - 12.0) +
         64.0 * kPi / (3.0 * kS3) + 17.0;
}
double d8_b4(double d) {
  const double d2 = d * d;
  return 2.0 / kS3 * (d2 / 3.0 + 16.0) * asin_c(2.0 * kS3 / d) -
         (1.0 / 3.0 + 2.0 * kPi / (9.0 * kS3)) * d2 +
         20.0 / 3.0 * sqrt_c(d2 - 12.0) - 32.0 * kPi / (3.0 * kS3) - 8.0;
}

PiecewisePdf make_pdf(DistanceKind kind, double factor,
                      std::initializer_list<double> bps,
                      std::initializer_list<double (*)(double)> brackets) {
  PiecewisePdf out;
  out.kind = kind;
  out.outer_factor = factor;
  const auto* bp = bps.begin();
  const auto* br = brackets.begin();
  for (std::size_t i = 0; i < brackets.size(); ++i)
    out.pieces.push_back({bp[i], bp[i + 1], br[i]});
  out.support_lo = bp[0];
  out.support_hi = bp[bps.size() - 1];
  return out;
}

const std::array<PiecewisePdf, 10>& pdf_tables() {
  static const std::array<PiecewisePdf, 10> tables = {
      make_pdf(DistanceKind::D1, 2.0, {0.0, kHalfS3, 1.0, kS3},
               {d1_b0, d1_b1, d1_b2}),
      make_pdf(DistanceKind::D2, 2.0, {0.0, kHalfS3, 1.0, kS3, 2.0},
               {d2_b0, d2_b1, d2_b2, d2_b3}),
      make_pdf(DistanceKind::D3, 2.0, {kHalfS3, 1.0, kS3, 2.0, k3S3Half, kS7, 3.0},
               {d3_b0, d3_b1, d3_b2, d3_b3, d3_b4, d3_b5}),
      make_pdf(DistanceKind::D4, 2.0, {0.0, kHalfS3, 1.0, kS3, 2.0, kS7, 3.0},
               {d4_b0, d4_b1, d4_b2, d4_b3, d4_b4, d4_b5}),
      make_pdf(DistanceKind::D5, 2.0, {0.0, 1.0, kS3, 2.0, kS7, k2S3},
               {d5_b0, d5_b1, d5_b2, d5_b3, d5_b4}),
      make_pdf(DistanceKind::D6, 2.0,
               {1.0, kS3, 2.0, k3S3Half, kS7, 3.0, k2S3, kS13},
               {d6_b0, d6_b1, d6_b2, d6_b3, d6_b4, d6_b5, d6_b6}),
      make_pdf(DistanceKind::D7, 2.0, {kS3, 2.0, k3S3Half, kS7, 3.0, k2S3, kS13},
               {d7_b0, d7_b1, d7_b2, d7_b3, d7_b4, d7_b5}),
      make_pdf(DistanceKind::D8, 2.0, {2.0, kS7, 3.0, k2S3, kS13, 4.0},
               {d8_b0, d8_b1, d8_b2, d8_b3, d8_b4}),
      make_pdf(DistanceKind::HexInterior, 2.0 / 3.0, {0.0, 1.0, kS3, 2.0},
               {hi_b0, hi_b1, hi_b2}),
      make_pdf(DistanceKind::HexAdjacent, 2.0 / 9.0,
               {0.0, 1.0, kS3, 2.0, kS7, 3.0, k2S3, kS13},
               {ha_b0, ha_b1, ha_b2, ha_b3, ha_b4, ha_b5, ha_b6}),
  };
  return tables;
}

// Closed-form distribution function of the within-hexagon law.
double hex_interior_cdf(double d) {
  if (d <= 0.0) return 0.0;
  if (d >= 2.0) return 1.0;
  const double d2 = d * d;
  const double d4 = d2 * d2;
  if (d <= 1.0) {
    return 1.0 / 3.0 * (1.0 / 3.0 - kPi / (9.0 * kS3)) * d4 -
           16.0 / 27.0 * d2 * d + 2.0 * kPi / (3.0 * kS3) * d2;
  }
  if (d <= kS3) {
    return -4.0 / (3.0 * kS3) * (d4 / 3.0 + d2) * asin_c(kS3 / (2.0 * d)) +
           kPi / (9.0 * kS3) * d4 + 10.0 * kPi / (9.0 * kS3) * d2 -
           (26.0 * d2 + 3.0) / 54.0 * sqrt_c(4.0 * d2 - 3.0) + 1.0 / 18.0;
  }
  return 2.0 / (3.0 * kS3) * (d4 / 3.0 + 8.0 * d2) * asin_c(kS3 / d) -
         (2.0 * kPi / (27.0 * kS3) + 1.0 / 9.0) * d4 -
         (16.0 * kPi / (9.0 * kS3) + 4.0 / 3.0) * d2 +
         (14.0 * d2 + 12.0) / 9.0 * sqrt_c(d2 - 3.0) + 5.0 / 9.0;
}

// Closed-form distribution function of the adjacent-hexagon law.
double hex_adjacent_cdf(double d) {
  if (d <= 0.0) return 0.0;
  if (d >= kS13) return 1.0;
  const double d2 = d * d;
  const double d4 = d2 * d2;
  if (d <= 1.0) {
    return 1.0 / 18.0 * (kPi / (9.0 * kS3) - 1.0 / 3.0) * d4 +
           8.0 / 81.0 * d2 * d;
  }
  if (d <= kS3) {
    return 1.0 / (9.0 * kS3) * (d4 + 4.0 * d2) * asin_c(kS3 / (2.0 * d)) -
           (5.0 * kPi / (162.0 * kS3) + 1.0 / 54.0) * d4 -
           (4.0 * kPi / (27.0 * kS3) + 1.0 / 18.0) * d2 +
           (94.0 * d2 + 15.0) / 648.0 * sqrt_c(4.0 * d2 - 3.0) - 1.0 / 72.0;
  }
  if (d <= 2.0) {
    return 1.0 / (9.0 * kS3) * (d4 / 3.0 - 4.0 * d2) * asin_c(kS3 / (2.0 * d)) -
           2.0 / (9.0 * kS3) * (d4 / 3.0 + 8.0 * d2) * asin_c(kS3 / d) +
           (kPi / (54.0 * kS3) + 1.0 / 18.0) * d4 +
           (8.0 * kPi / (9.0 * kS3) + 0.5) * d2 -
           (2.0 * d2 + 1.0) / 24.0 * sqrt_c(4.0 * d2 - 3.0) -
           (14.0 * d2 + 12.0) / 27.0 * sqrt_c(d2 - 3.0) - 7.0 / 72.0;
  }
  if (d <= kS7) {
    return 1.0 / (9.0 * kS3) * (d4 / 3.0 - 4.0 * d2) * asin_c(kS3 / (2.0 * d)) -
           (kPi / (162.0 * kS3) - 1.0 / 54.0) * d4 +
           (8.0 * kPi / (27.0 * kS3) + 1.0 / 18.0) * d2 -
           (2.0 * d2 + 1.0) / 24.0 * sqrt_c(4.0 * d2 - 3.0) - 53.0 / 216.0;
  }
  if (d <= 3.0) {
    return -2.0 / (9.0 * kS3) * (d4 / 3.0 + 4.0 * d2) * asin_c(kS3 / d) -
           1.0 / (3.0 * kS3) * (d4 / 9.0 + 4.0 * d2) * asin_c(3.0 * kS3 / (2.0 * d)) +
           (5.0 * kPi / (162.0 * kS3) + 1.0 / 54.0) * d4 +
           (28.0 * kPi / (27.0 * kS3) + 0.5) * d2 -
           (26.0 * d2 + 12.0) / 81.0 * sqrt_c(d2 - 3.0) -
           (94.0 * d2 + 135.0) / 648.0 * sqrt_c(4.0 * d2 - 27.0) - 101.0 / 216.0;
  }
  if (d <= k2S3) {
    return -2.0 / (9.0 * kS3) * (d4 / 3.0 + 4.0 * d2) * asin_c(kS3 / d) +
           1.0 / (3.0 * kS3) * (d4 / 9.0 + 8.0 * d2) * asin_c(3.0 * kS3 / (2.0 * d)) +
           (kPi / (162.0 * kS3) - 1.0 / 54.0) * d4 -
           (8.0 * kPi / (27.0 * kS3) + 0.5) * d2 -
           (26.0 * d2 + 12.0) / 81.0 * sqrt_c(d2 - 3.0) +
           (158.0 * d2 + 351.0) / 648.0 * sqrt_c(4.0 * d2 - 27.0) - 263.0 / 216.0;
  }
  return 1.0 / (3.0 * kS3) * (d4 / 9.0 + 8.0 * d2) *
             (asin_c(3.0 * kS3 / (2.0 * d)) + asin_c(2.0 * kS3 / d)) -
         (2.0 * kPi / (81.0 * kS3) + 1.0 / 27.0) * d4 -
         (16.0 * kPi / (9.0 * kS3) + 25.0 / 18.0) * d2 +
         (158.0 * d2 + 351.0) / 648.0 * sqrt_c(4.0 * d2 - 27.0) +
         (34.0 * d2 + 96.0) / 81.0 * sqrt_c(d2 - 12.0) + 25.0 / 216.0;
}

// Per-piece tolerance for CDF quadrature; the checks downstream assert at
// 1e-9, so integrate two decades tighter.
constexpr double kCdfPieceTol = 1e-12;

// Cumulative integral of each piece prefix, computed once per kind.
const std::vector<double>& cumulative_piece_integrals(DistanceKind kind) {
  static const std::array<std::vector<double>, 10> cache = [] {
    std::array<std::vector<double>, 10> built;
    for (DistanceKind kind : kAllKinds) {
      const PiecewisePdf& table = piecewise_pdf(kind);
      std::vector<double> cum;
      cum.reserve(table.pieces.size() + 1);
      cum.push_back(0.0);
      for (const PdfPiece& piece : table.pieces) {
        const double part = integrate([&](double x) { return table(x); },
                                      piece.lo, piece.hi, kCdfPieceTol);
        cum.push_back(cum.back() + part);
      }
      built[ordinal(kind)] = std::move(cum);
    }
    return built;
  }();
  return cache[ordinal(kind)];
}

void require_finite(double d) {
  if (!std::isfinite(d)) throw std::domain_error("distance must be finite");
}

void require_positive_scale(double s) {
  if (!std::isfinite(s) || s <= 0.0)
    throw std::domain_error("scale must be positive and finite");
}

double quadrature_cdf(const PiecewisePdf& table, double d) {
  if (d <= table.support_lo) return 0.0;
  if (d >= table.support_hi) return 1.0;
  const std::vector<double>& cum = cumulative_piece_integrals(table.kind);
  const std::size_t i = table.piece_index(d);
  const double partial =
      integrate([&](double x) { return table(x); }, table.pieces[i].lo, d,
                kCdfPieceTol);
  return std::clamp(cum[i] + partial, 0.0, 1.0);
}

}  // namespace

double PiecewisePdf::operator()(double d) const {
  if (d < support_lo || d > support_hi) return 0.0;
  const PdfPiece& piece = pieces[piece_index(d)];
  // The brackets vanish analytically at the support edges but round to
  // a few ulp of either sign there; a density never goes below zero.
  return std::max(0.0, outer_factor * d * piece.bracket(d));
}

std::size_t PiecewisePdf::piece_index(double d) const {
  std::size_t i = 0;
  while (i + 1 < pieces.size() && d >= pieces[i].hi) ++i;
  return i;
}

const PiecewisePdf& piecewise_pdf(DistanceKind kind) {
  return pdf_tables()[ordinal(kind)];
}

std::vector<double> breakpoints(DistanceKind kind) {
  const PiecewisePdf& table = piecewise_pdf(kind);
  std::vector<double> out;
  out.reserve(table.pieces.size() + 1);
  out.push_back(table.support_lo);
  for (const PdfPiece& piece : table.pieces) out.push_back(piece.hi);
  return out;
}

std::pair<double, double> support(DistanceKind kind) {
  const PiecewisePdf& table = piecewise_pdf(kind);
  return {table.support_lo, table.support_hi};
}

double pdf_eval(DistanceKind kind, double d) {
  require_finite(d);
  return piecewise_pdf(kind)(d);
}

double cdf_eval(DistanceKind kind, double d) {
  require_finite(d);
  if (kind == DistanceKind::HexInterior) return hex_interior_cdf(d);
  if (kind == DistanceKind::HexAdjacent) return hex_adjacent_cdf(d);
  return quadrature_cdf(piecewise_pdf(kind), d);
}

double cdf_by_quadrature(DistanceKind kind, double d) {
  require_finite(d);
  return quadrature_cdf(piecewise_pdf(kind), d);
}

std::vector<double> cdf_batch_sorted(DistanceKind kind,
                                     std::span<const double> sorted_points) {
  std::vector<double> out;
  out.reserve(sorted_points.size());
  if (kind == DistanceKind::HexInterior || kind == DistanceKind::HexAdjacent) {
    for (double x : sorted_points) {
      require_finite(x);
      out.push_back(cdf_eval(kind, x));
    }
    return out;
  }
  // Incremental piecewise sweep: each value adds the integral over the gap
  // from its predecessor, restarting from the cached prefix when a
  // breakpoint is crossed so panel error cannot accumulate across pieces.
  const PiecewisePdf& table = piecewise_pdf(kind);
  const std::vector<double>& cum = cumulative_piece_integrals(kind);
  std::size_t piece = 0;
  double prev_x = 0.0;
  double prev_f = 0.0;
  bool have_prev = false;
  for (double x : sorted_points) {
    require_finite(x);
    if (x <= table.support_lo) {
      out.push_back(0.0);
      continue;
    }
    if (x >= table.support_hi) {
      out.push_back(1.0);
      continue;
    }
    const std::size_t i = table.piece_index(x);
    double value;
    if (have_prev && i == piece && x >= prev_x) {
      value = prev_f + integrate_panel([&](double t) { return table(t); },
                                       prev_x, x);
    } else {
      const double lo = table.pieces[i].lo;
      value = cum[i] + integrate([&](double t) { return table(t); }, lo, x,
                                 kCdfPieceTol);
    }
    value = std::clamp(value, 0.0, 1.0);
    out.push_back(value);
    piece = i;
    prev_x = x;
    prev_f = value;
    have_prev = true;
  }
  return out;
}

double scaled_pdf(DistanceKind kind, double s, double d) {
  require_positive_scale(s);
  return pdf_eval(kind, d / s) / s;
}

double scaled_cdf(DistanceKind kind, double s, double d) {
  require_positive_scale(s);
  return cdf_eval(kind, d / s);
}

void Mixture::validate() const {
  if (components.empty())
    throw std::invalid_argument("mixture must have at least one component");
  double total = 0.0;
  for (const MixtureComponent& c : components) {
    if (!(c.weight > 0.0))
      throw std::invalid_argument("mixture weights must be positive");
    total += c.weight;
  }
  if (std::fabs(total - 1.0) > 1e-12)
    throw std::invalid_argument("mixture weights must sum to 1 within 1e-12");
}

double mixture_pdf(const Mixture& mixture, double d) {
  mixture.validate();
  double sum = 0.0;
  for (const MixtureComponent& c : mixture.components)
    sum += c.weight * pdf_eval(c.kind, d);
  return sum;
}

Mixture within_hexagon_mixture() {
  return {{{1.0 / 3.0, DistanceKind::D1}, {2.0 / 3.0, DistanceKind::D2}}};
}

Mixture adjacent_hexagon_mixture() {
  return {{{1.0 / 9.0, DistanceKind::D2},
           {1.0 / 9.0, DistanceKind::D5},
           {1.0 / 9.0, DistanceKind::D7},
           {2.0 / 9.0, DistanceKind::D3},
           {2.0 / 9.0, DistanceKind::D4},
           {2.0 / 9.0, DistanceKind::D6}}};
}

Mixture double_hexagon_mixture() {
  return {{{3.0 / 16.0, DistanceKind::HexInterior},
           {3.0 / 8.0, DistanceKind::HexAdjacent},
           {1.0 / 12.0, DistanceKind::D2},
           {1.0 / 12.0, DistanceKind::D4},
           {1.0 / 12.0, DistanceKind::D3},
           {1.0 / 12.0, DistanceKind::D6},
           {1.0 / 24.0, DistanceKind::D7},
           {1.0 / 24.0, DistanceKind::D8},
           {1.0 / 48.0, DistanceKind::D1}}};
}

}  // namespace hexdist
