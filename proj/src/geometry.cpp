#include "hexdist/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace hexdist {
namespace {

const double kS3 = std::sqrt(3.0);

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const double vx = b.x - a.x, vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return dist(p, a);
  double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, {a.x + t * vx, a.y + t * vy});
}

bool segments_properly_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
         ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

bool strictly_inside(const ConvexPolygon& poly, Point2 p) {
  const auto& v = poly.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % v.size()];
    if (cross(a, b, p) <= 1e-12) return false;
  }
  return true;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  for (const Point2& p : vertices_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("polygon vertices must be finite");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % n];
    const Point2 c = vertices_[(i + 2) % n];
    if (cross(a, b, c) <= 1e-12)
      throw std::invalid_argument(
          "polygon must be strictly convex with counterclockwise vertices");
  }

  // Shoelace integrals: area, centroid, and the second moments that give
  // the covariance trace of the uniform law.
  double a2 = 0.0, cx = 0.0, cy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 p = vertices_[i];
    const Point2 q = vertices_[(i + 1) % n];
    const double w = p.x * q.y - q.x * p.y;
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
    sxx += (p.x * p.x + p.x * q.x + q.x * q.x) * w;
    syy += (p.y * p.y + p.y * q.y + q.y * q.y) * w;
  }
  area_ = 0.5 * a2;
  if (area_ <= 0.0) throw std::invalid_argument("polygon area must be positive");
  centroid_ = {cx / (3.0 * a2), cy / (3.0 * a2)};
  const double ex2 = sxx / (12.0 * area_);
  const double ey2 = syy / (12.0 * area_);
  covariance_trace_ = ex2 + ey2 - centroid_.x * centroid_.x -
                      centroid_.y * centroid_.y;
}

bool ConvexPolygon::contains(Point2 p, double tol) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(vertices_[i], vertices_[(i + 1) % n], p) < -tol) return false;
  }
  return true;
}

ConvexPolygon ConvexPolygon::translated(double dx, double dy) const {
  std::vector<Point2> moved = vertices_;
  for (Point2& p : moved) {
    p.x += dx;
    p.y += dy;
  }
  return ConvexPolygon(std::move(moved));
}

namespace {

ConvexPolygon unit_hexagon() {
  const double h = kS3 / 2.0;
  return ConvexPolygon({{h, 0.5}, {0.0, 1.0}, {-h, 0.5},
                        {-h, -0.5}, {0.0, -1.0}, {h, -0.5}});
}

// The three unit rhombi fanned around the hexagon center: right, upper-left,
// and bottom.
ConvexPolygon rhombus_r1() {
  const double h = kS3 / 2.0;
  return ConvexPolygon({{0.0, 0.0}, {h, -0.5}, {h, 0.5}, {0.0, 1.0}});
}
ConvexPolygon rhombus_r2() {
  const double h = kS3 / 2.0;
  return ConvexPolygon({{0.0, 0.0}, {0.0, 1.0}, {-h, 0.5}, {-h, -0.5}});
}
ConvexPolygon rhombus_r3() {
  const double h = kS3 / 2.0;
  return ConvexPolygon({{0.0, 0.0}, {-h, -0.5}, {0.0, -1.0}, {h, -0.5}});
}

}  // namespace

PlacementPair canonical_placement(DistanceKind kind) {
  const ConvexPolygon hex1 = unit_hexagon();
  const ConvexPolygon r1 = rhombus_r1();
  const ConvexPolygon r2 = rhombus_r2();
  const ConvexPolygon r3 = rhombus_r3();
  switch (kind) {
    case DistanceKind::D1:
      return {r1, r1, kind};
    case DistanceKind::D2:
      // Partner is the mirror of r1 across their shared edge x = sqrt(3)/2,
      // which coincides with the second hexagon's upper-left rhombus.
      return {r1, r2.translated(kS3, 0.0), kind};
    case DistanceKind::D3:
      return {r1, r1.translated(kS3, 0.0), kind};
    case DistanceKind::D4:
      return {r1, r3.translated(kS3, 0.0), kind};
    case DistanceKind::D5:
      return {r3, r3.translated(kS3, 0.0), kind};
    case DistanceKind::D6:
      return {r2, r3.translated(kS3, 0.0), kind};
    case DistanceKind::D7:
      return {r2, r1.translated(kS3, 0.0), kind};
    case DistanceKind::D8: {
      // Two vertically separated rhombi from the side-2 hexagon
      // decomposition: gap 2, farthest vertices 4 apart.
      const double h = kS3 / 2.0;
      const ConvexPolygon upper({{0.0, 1.0}, {h, 1.5}, {0.0, 2.0}, {-h, 1.5}});
      return {upper, upper.translated(0.0, -3.0), kind};
    }
    case DistanceKind::HexInterior:
      return {hex1, hex1, kind};
    case DistanceKind::HexAdjacent:
      return {hex1, hex1.translated(kS3, 0.0), kind};
  }
  throw std::invalid_argument("unknown distance kind");
}

Point2 uniform_point(const ConvexPolygon& region, Xoshiro256PlusPlus& rng) {
  const auto& v = region.vertices();
  const std::size_t triangles = v.size() - 2;

  // Cumulative fan-triangle areas for the inverse transform.
  double cum[16];
  if (triangles > 16) throw std::invalid_argument("polygon too large");
  double total = 0.0;
  for (std::size_t i = 0; i < triangles; ++i) {
    total += 0.5 * cross(v[0], v[i + 1], v[i + 2]);
    cum[i] = total;
  }
  if (!(total > 0.0)) throw std::invalid_argument("degenerate polygon");

  const double pick = rng.next_double() * total;
  std::size_t idx = triangles - 1;
  for (std::size_t i = 0; i < triangles; ++i) {
    if (pick < cum[i]) {  // a tie with cum[i] falls through to i+1
      idx = i;
      break;
    }
  }

  const Point2 a = v[0];
  const Point2 b = v[idx + 1];
  const Point2 c = v[idx + 2];
  double u = rng.next_double();
  double w = rng.next_double();
  if (u + w > 1.0) {
    u = 1.0 - u;
    w = 1.0 - w;
  }
  return {a.x + u * (b.x - a.x) + w * (c.x - a.x),
          a.y + u * (b.y - a.y) + w * (c.y - a.y)};
}

double sample_distance(const PlacementPair& placement, Xoshiro256PlusPlus& rng) {
  const Point2 p = uniform_point(placement.region_a, rng);
  const Point2 q = uniform_point(placement.region_b, rng);
  return dist(p, q);
}

std::vector<double> sample_distances(const PlacementPair& placement,
                                     std::size_t n, std::uint64_t seed,
                                     unsigned workers) {
  if (workers == 0) workers = 1;
  std::vector<double> out(n);
  const std::size_t base = n / workers;
  const std::size_t extra = n % workers;

  auto run_block = [&](unsigned w, std::size_t begin, std::size_t count) {
    Xoshiro256PlusPlus rng(seed, w);
    for (std::size_t i = 0; i < count; ++i)
      out[begin + i] = sample_distance(placement, rng);
  };

  if (workers == 1) {
    run_block(0, 0, n);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t count = base + (w < extra ? 1 : 0);
    pool.emplace_back(run_block, w, begin, count);
    begin += count;
  }
  for (std::thread& t : pool) t.join();
  return out;
}

std::pair<double, double> min_max_distance(const PlacementPair& placement) {
  const auto& va = placement.region_a.vertices();
  const auto& vb = placement.region_b.vertices();

  double max_d = 0.0;
  for (const Point2& p : va)
    for (const Point2& q : vb) max_d = std::max(max_d, dist(p, q));

  double min_d = 0.0;
  bool overlap = false;
  for (const Point2& p : va) overlap = overlap || strictly_inside(placement.region_b, p);
  for (const Point2& p : vb) overlap = overlap || strictly_inside(placement.region_a, p);
  for (std::size_t i = 0; i < va.size() && !overlap; ++i) {
    for (std::size_t j = 0; j < vb.size() && !overlap; ++j) {
      overlap = segments_properly_intersect(va[i], va[(i + 1) % va.size()],
                                            vb[j], vb[(j + 1) % vb.size()]);
    }
  }
  if (!overlap) {
    min_d = std::numeric_limits<double>::infinity();
    for (const Point2& p : va)
      for (std::size_t j = 0; j < vb.size(); ++j)
        min_d = std::min(min_d, point_segment_distance(
                                    p, vb[j], vb[(j + 1) % vb.size()]));
    for (const Point2& p : vb)
      for (std::size_t j = 0; j < va.size(); ++j)
        min_d = std::min(min_d, point_segment_distance(
                                    p, va[j], va[(j + 1) % va.size()]));
  }
  return {min_d, max_d};
}

}  // namespace hexdist
