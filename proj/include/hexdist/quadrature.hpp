#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

#include "hexdist/errors.hpp"

namespace hexdist {

namespace detail {

// 15-point Gauss-Kronrod rule (QUADPACK QK15 nodes/weights). The embedded
// 7-point Gauss value provides the error estimate. Nodes are interior, so
// integrands may be singular exactly at the panel endpoints.
inline constexpr double kKronrodNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kGaussWeights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <class F>
std::pair<double, double> gauss_kronrod_15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[j] * fsum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::fabs(kronrod - gauss)};
}

template <class F>
double integrate_rec(const F& f, double a, double b, double abs_tol, int depth) {
  auto [value, err] = gauss_kronrod_15(f, a, b);
  if (err <= abs_tol || b - a <= 1e-15 * (std::fabs(a) + std::fabs(b)))
    return value;
  if (depth >= 60)
    throw NumericalError("adaptive quadrature failed to converge");
  const double mid = 0.5 * (a + b);
  return integrate_rec(f, a, mid, 0.5 * abs_tol, depth + 1) +
         integrate_rec(f, mid, b, 0.5 * abs_tol, depth + 1);
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b] to an absolute
// tolerance. Square-root kinks at the interval endpoints are fine; callers
// integrating a piecewise function must split at its breakpoints.
template <class F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-11) {
  if (a == b) return 0.0;
  return detail::integrate_rec(f, a, b, abs_tol, 0);
}

// Single non-adaptive 15-point panel; used for dense batches of short
// intervals where the rule is already far below the target accuracy.
template <class F>
double integrate_panel(const F& f, double a, double b) {
  return detail::gauss_kronrod_15(f, a, b).first;
}

}  // namespace hexdist
