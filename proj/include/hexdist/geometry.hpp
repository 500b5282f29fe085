#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hexdist/distance_kind.hpp"
#include "hexdist/rng.hpp"

namespace hexdist {

struct Point2 {
  double x;
  double y;
};

// Strictly convex polygon with counterclockwise vertices. Construction
// validates the shape (>= 3 finite vertices, strict left turns, positive
// area) and throws std::invalid_argument otherwise.
class ConvexPolygon {
 public:
  explicit ConvexPolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  double area() const { return area_; }
  Point2 centroid() const { return centroid_; }

  // Trace of the covariance of the uniform law on the polygon, from the
  // exact shoelace moment integrals.
  double covariance_trace() const { return covariance_trace_; }

  bool contains(Point2 p, double tol = 1e-12) const;

  ConvexPolygon translated(double dx, double dy) const;

 private:
  std::vector<Point2> vertices_;
  double area_;
  Point2 centroid_;
  double covariance_trace_;
};

// The two regions a distance sample is drawn between. For the same-region
// kinds both members hold the same polygon.
struct PlacementPair {
  ConvexPolygon region_a;
  ConvexPolygon region_b;
  DistanceKind kind;
};

// Fixed coordinate model for a kind, in units of the hexagon side.
// Hexagon 1 is centered at the origin with two vertical edges at
// x = +-sqrt(3)/2; hexagon 2 is its translate by (sqrt(3), 0), so the two
// share the edge at x = sqrt(3)/2. Each hexagon splits into three unit
// rhombi fanned around its center; the cross-hexagon rhombus pairs realize
// D2..D7 and the pair for D8 sits on the vertical axis with a gap of 2.
// The min/max attainable distance of every placement equals the support of
// its distance kind.
PlacementPair canonical_placement(DistanceKind kind);

// Uniform point in a convex polygon: pick a fan triangle by cumulative-area
// inverse transform (ties resolve to the higher-index triangle), then map
// two uniforms through the affine combination with reflection. Consumes
// exactly three rng doubles.
Point2 uniform_point(const ConvexPolygon& region, Xoshiro256PlusPlus& rng);

// Distance between one uniform point from each region (two independent
// points when the regions coincide). Consumes six rng doubles.
double sample_distance(const PlacementPair& placement, Xoshiro256PlusPlus& rng);

// n distances in deterministic stream order. Worker w generates the w-th
// contiguous block from rng stream (seed, w), so the result is identical
// for any worker count and independent of scheduling.
std::vector<double> sample_distances(const PlacementPair& placement,
                                     std::size_t n, std::uint64_t seed,
                                     unsigned workers = 1);

// Exact minimum and maximum Euclidean distance between the two regions.
// The maximum is attained at a vertex pair; the minimum is 0 for
// overlapping or touching regions and otherwise the smallest vertex-edge
// distance across the pair.
std::pair<double, double> min_max_distance(const PlacementPair& placement);

}  // namespace hexdist
