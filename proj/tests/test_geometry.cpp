#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hexdist/distributions.hpp"
#include "hexdist/geometry.hpp"

using namespace hexdist;

namespace {
const double kS3 = std::sqrt(3.0);
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), std::invalid_argument);
  // clockwise
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {0, 1}, {1, 0}}), std::invalid_argument);
  // collinear vertex
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {std::nan(""), 1}}),
                  std::invalid_argument);
}

TEST_CASE("rhombus and hexagon areas from the shoelace integrals") {
  for (DistanceKind k : {DistanceKind::D1, DistanceKind::D2, DistanceKind::D3,
                         DistanceKind::D4, DistanceKind::D5, DistanceKind::D6,
                         DistanceKind::D7, DistanceKind::D8}) {
    const PlacementPair placement = canonical_placement(k);
    CHECK(std::fabs(placement.region_a.area() - kS3 / 2.0) < 1e-12);
    CHECK(std::fabs(placement.region_b.area() - kS3 / 2.0) < 1e-12);
  }
  const PlacementPair hex = canonical_placement(DistanceKind::HexInterior);
  CHECK(std::fabs(hex.region_a.area() - 3.0 * kS3 / 2.0) < 1e-12);
  CHECK(std::fabs(hex.region_a.centroid().x) < 1e-15);
  CHECK(std::fabs(hex.region_a.centroid().y) < 1e-15);
}

TEST_CASE("covariance traces of the uniform laws") {
  // Exact rational values from the polygon moment integrals.
  const PlacementPair hex = canonical_placement(DistanceKind::HexInterior);
  CHECK(std::fabs(hex.region_a.covariance_trace() - 5.0 / 12.0) < 1e-13);
  const PlacementPair rh = canonical_placement(DistanceKind::D1);
  CHECK(std::fabs(rh.region_a.covariance_trace() - 1.0 / 6.0) < 1e-13);
}

TEST_CASE("placement min and max distance equal the support of every kind") {
  for (DistanceKind k : kAllKinds) {
    const auto [lo, hi] = support(k);
    const auto [min_d, max_d] = min_max_distance(canonical_placement(k));
    CHECK(std::fabs(min_d - lo) <= 1e-9);
    CHECK(std::fabs(max_d - hi) <= 1e-9);
  }
}

TEST_CASE("uniform points stay inside the region") {
  const PlacementPair placement = canonical_placement(DistanceKind::HexAdjacent);
  Xoshiro256PlusPlus rng(5);
  for (int i = 0; i < 20000; ++i) {
    const Point2 p = uniform_point(placement.region_a, rng);
    REQUIRE(placement.region_a.contains(p, 1e-9));
  }
}

TEST_CASE("uniform point mean and spread over the hexagon") {
  const PlacementPair placement = canonical_placement(DistanceKind::HexInterior);
  Xoshiro256PlusPlus rng(11);
  const int n = 1000000;
  double sx = 0.0, sy = 0.0, sr2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const Point2 p = uniform_point(placement.region_a, rng);
    sx += p.x;
    sy += p.y;
    sr2 += p.x * p.x + p.y * p.y;
  }
  const double mx = sx / n, my = sy / n;
  CHECK(std::fabs(mx) < 0.005);
  CHECK(std::fabs(my) < 0.005);
  // trace of the covariance of the uniform law on the unit hexagon is 5/12
  CHECK(std::fabs(sr2 / n - mx * mx - my * my - 5.0 / 12.0) < 0.005);
}

TEST_CASE("sampled distances stay inside the support") {
  for (DistanceKind k : {DistanceKind::D1, DistanceKind::D8}) {
    const auto [lo, hi] = support(k);
    const std::vector<double> xs =
        sample_distances(canonical_placement(k), 20000, 3);
    for (double d : xs) {
      REQUIRE(d >= lo - 1e-12);
      REQUIRE(d <= hi + 1e-12);
    }
  }
}

TEST_CASE("sample mean of the within-hexagon distance") {
  const std::vector<double> xs =
      sample_distances(canonical_placement(DistanceKind::HexInterior), 1000000, 17);
  double sum = 0.0;
  for (double d : xs) sum += d;
  // mean distance in the unit hexagon is 0.826259...; 4 standard errors at
  // n = 1e6 is about 0.00155
  CHECK(std::fabs(sum / 1e6 - 0.82625894949023208) < 0.00155);
}

TEST_CASE("identical seeds reproduce the exact stream") {
  const PlacementPair placement = canonical_placement(DistanceKind::D4);
  const auto a = sample_distances(placement, 5000, 123);
  const auto b = sample_distances(placement, 5000, 123);
  CHECK(a == b);
  const auto c = sample_distances(placement, 5000, 124);
  CHECK(a != c);
}

TEST_CASE("worker split is deterministic and matches the stream layout") {
  const PlacementPair placement = canonical_placement(DistanceKind::D6);
  const auto merged = sample_distances(placement, 1003, 9, 4);
  // worker w owns the w-th contiguous block, drawn from stream (seed, w)
  std::size_t offset = 0;
  for (unsigned w = 0; w < 4; ++w) {
    const std::size_t count = 1003 / 4 + (w < 1003 % 4 ? 1 : 0);
    Xoshiro256PlusPlus rng(9, w);
    for (std::size_t i = 0; i < count; ++i)
      REQUIRE(merged[offset + i] == sample_distance(placement, rng));
    offset += count;
  }
  CHECK(offset == 1003);
  // same n with a different worker count gives the same per-stream blocks
  const auto two = sample_distances(placement, 1003, 9, 2);
  Xoshiro256PlusPlus s0(9, 0);
  CHECK(two[0] == sample_distance(placement, s0));
}
