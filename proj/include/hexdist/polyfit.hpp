#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "hexdist/distance_kind.hpp"
#include "hexdist/verify.hpp"

namespace hexdist {

// Fitting grid descriptor: `points` uniformly spaced abscissae covering
// [lo, hi] with both endpoints included.
struct FitGrid {
  std::size_t points = 0;
  double lo = 0.0;
  double hi = 0.0;

  double spacing() const {
    return points > 1 ? (hi - lo) / static_cast<double>(points - 1) : 0.0;
  }
};

// Least-squares polynomial surrogate of a density. Coefficients are in
// descending powers (degree down to d^0, so degree+1 entries);
// norm_of_residuals is sqrt(sum of squared residuals) over the fitting
// grid.
struct PolyFitReport {
  DistanceKind kind;
  int degree = 0;
  std::vector<double> coefficients;
  double norm_of_residuals = 0.0;
  FitGrid grid;
};

// Fits the density of kind (hex-interior or hex-adjacent only) on its
// default grid: grid_points uniform abscissae spanning the exact support.
// Solved by Householder QR of the column-equilibrated Vandermonde matrix,
// which stays usable to degree 20 where raw normal equations would not.
// degree must satisfy 0 <= degree < grid_points; rank collapse raises
// NumericalError with the offending column in the message.
PolyFitReport fit(DistanceKind kind, int degree, std::size_t grid_points = 1001);

// Horner evaluation of descending-power coefficients.
double eval_poly(std::span<const double> coefficients, double d);

// Reference coefficient sets (descending powers, stored with their 1e2 /
// 1e4 group factors applied): a degree-10 surrogate of the within-hexagon
// density and a degree-20 surrogate of the adjacent-hexagon density.
std::span<const double> reference_coefficients(DistanceKind kind);

// Residual norms quoted alongside those reference coefficient sets.
double reference_norm_of_residuals(DistanceKind kind);

// Sup-norm between the reference polynomial and the exact density over the
// support with 5% trimmed at both ends.
CheckReport reference_fit_check(DistanceKind kind, double threshold = 0.05);

nlohmann::ordered_json to_json(const PolyFitReport& report);

}  // namespace hexdist
