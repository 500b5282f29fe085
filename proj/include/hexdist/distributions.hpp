#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hexdist/distance_kind.hpp"

namespace hexdist {

// One analytic branch of a piecewise density. `bracket` is the bracketed
// factor of the closed form; the full density on the piece is
// outer_factor * d * bracket(d).
struct PdfPiece {
  double lo;
  double hi;
  double (*bracket)(double);
};

// Piecewise closed-form density. Pieces are contiguous, cover exactly
// [support_lo, support_hi], and adjacent brackets agree at the shared
// breakpoints. Piece selection is half-open [lo, hi) with the final piece
// closed, so a query landing exactly on a breakpoint deterministically
// picks the right-hand branch.
struct PiecewisePdf {
  DistanceKind kind;
  double outer_factor;
  std::vector<PdfPiece> pieces;
  double support_lo;
  double support_hi;

  // Density at d; 0 outside the support. Does not validate d.
  double operator()(double d) const;

  // Index of the piece containing d (requires support_lo <= d <= support_hi).
  std::size_t piece_index(double d) const;
};

// The shared immutable table for one distance kind.
const PiecewisePdf& piecewise_pdf(DistanceKind kind);

// Breakpoints of the kind (piece boundaries including both support ends).
std::vector<double> breakpoints(DistanceKind kind);

// Exact support interval of the kind.
std::pair<double, double> support(DistanceKind kind);

// Density at d. Out-of-support d is legal and yields 0; a non-finite d
// throws std::domain_error.
double pdf_eval(DistanceKind kind, double d);

// Distribution function at d. The two hexagon kinds use their closed
// forms; the rhombus kinds integrate the density piecewise (adaptive
// Gauss-Kronrod, never across a breakpoint). 0 below the support, 1 above.
double cdf_eval(DistanceKind kind, double d);

// Distribution function by piecewise quadrature of the density for every
// kind, including the two that also have closed forms. This is the
// independent route used to cross-check the closed-form CDFs.
double cdf_by_quadrature(DistanceKind kind, double d);

// CDF values for an ascending sequence of points, computed incrementally
// so large sorted batches (empirical-distribution tests) stay cheap.
std::vector<double> cdf_batch_sorted(DistanceKind kind,
                                     std::span<const double> sorted_points);

// Side-length scaling: for side s the distance law of kind k has density
// pdf(k, d/s)/s and distribution cdf(k, d/s). s must be positive and
// finite; otherwise std::domain_error.
double scaled_pdf(DistanceKind kind, double s, double d);
double scaled_cdf(DistanceKind kind, double s, double d);

// A convex combination of distance kinds (a probabilistic sum).
struct MixtureComponent {
  double weight;
  DistanceKind kind;
};

struct Mixture {
  std::vector<MixtureComponent> components;

  // Throws std::invalid_argument unless all weights are positive and sum
  // to 1 within 1e-12.
  void validate() const;
};

// Density of the mixture at d (validates the mixture first).
double mixture_pdf(const Mixture& mixture, double d);

// The within-hexagon law as its rhombus mixture: 1/3 D1 + 2/3 D2.
Mixture within_hexagon_mixture();

// The adjacent-hexagon law as its cross-rhombus mixture:
// 1/9 [D2 + D5 + D7] + 2/9 [D3 + D4 + D6].
Mixture adjacent_hexagon_mixture();

// Decomposition of the side-2 hexagon law into the nine sub-region cases:
// 3/16 HexInterior + 3/8 HexAdjacent + 1/12 [D2 + D4 + D3 + D6]
// + 1/24 [D7 + D8] + 1/48 D1. Its density equals pdf(HexInterior, d/2)/2.
Mixture double_hexagon_mixture();

}  // namespace hexdist
