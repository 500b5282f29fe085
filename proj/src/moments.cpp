#include "hexdist/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "hexdist/distributions.hpp"
#include "hexdist/geometry.hpp"
#include "hexdist/quadrature.hpp"

namespace hexdist {
namespace {

double moment_by_quadrature(DistanceKind kind, int order) {
  const PiecewisePdf& table = piecewise_pdf(kind);
  double total = 0.0;
  for (const PdfPiece& piece : table.pieces) {
    total += integrate(
        [&](double x) { return std::pow(x, order) * table(x); }, piece.lo,
        piece.hi, 1e-11);
  }
  return total;
}

}  // namespace

std::string_view to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::closed_form: return "closed_form";
    case MomentMethod::quadrature: return "quadrature";
    case MomentMethod::monte_carlo: return "monte_carlo";
    case MomentMethod::covariance_oracle: return "covariance_oracle";
  }
  return "quadrature";
}

std::optional<MomentMethod> parse_moment_method(std::string_view name) {
  if (name == "closed_form" || name == "closed-form") return MomentMethod::closed_form;
  if (name == "quadrature") return MomentMethod::quadrature;
  if (name == "monte_carlo" || name == "monte-carlo") return MomentMethod::monte_carlo;
  if (name == "covariance_oracle" || name == "covariance-oracle")
    return MomentMethod::covariance_oracle;
  return std::nullopt;
}

double raw_moment(DistanceKind kind, int order, double s) {
  if (order < 1) throw std::invalid_argument("moment order must be >= 1");
  if (!std::isfinite(s) || s <= 0.0)
    throw std::invalid_argument("scale must be positive and finite");
  return std::pow(s, order) * moment_by_quadrature(kind, order);
}

double closed_mean_hex_interior() {
  const double s3 = std::sqrt(3.0);
  return 7.0 * s3 / 30.0 - 7.0 / 90.0 +
         (28.0 * std::log(2.0 * s3 + 3.0) + 29.0 * std::log(2.0 * s3 - 3.0)) /
             60.0;
}

double variance(DistanceKind kind, double s) {
  const double m1 = raw_moment(kind, 1, 1.0);
  const double m2 = raw_moment(kind, 2, 1.0);
  return s * s * (m2 - m1 * m1);
}

double covariance_oracle_m2(DistanceKind kind) {
  const PlacementPair placement = canonical_placement(kind);
  const Point2 ca = placement.region_a.centroid();
  const Point2 cb = placement.region_b.centroid();
  const double dx = ca.x - cb.x;
  const double dy = ca.y - cb.y;
  return placement.region_a.covariance_trace() +
         placement.region_b.covariance_trace() + dx * dx + dy * dy;
}

MomentReport moment_report(DistanceKind kind, double s, MomentMethod method,
                           std::size_t mc_n, std::uint64_t seed) {
  if (!std::isfinite(s) || s <= 0.0)
    throw std::invalid_argument("scale must be positive and finite");
  MomentReport report;
  report.kind = kind;
  report.scale = s;
  report.method = method;
  switch (method) {
    case MomentMethod::quadrature: {
      report.m1 = raw_moment(kind, 1, s);
      report.m2 = raw_moment(kind, 2, s);
      break;
    }
    case MomentMethod::closed_form: {
      if (kind != DistanceKind::HexInterior)
        throw std::invalid_argument(
            "closed_form moments are only available for hex-interior");
      report.m1 = s * closed_mean_hex_interior();
      report.m2 = raw_moment(kind, 2, s);
      break;
    }
    case MomentMethod::monte_carlo: {
      if (mc_n == 0) throw std::invalid_argument("monte_carlo needs n > 0");
      const std::vector<double> samples =
          sample_distances(canonical_placement(kind), mc_n, seed);
      double sum1 = 0.0, sum2 = 0.0;
      for (double d : samples) {
        sum1 += d;
        sum2 += d * d;
      }
      const double n = static_cast<double>(mc_n);
      report.m1 = s * sum1 / n;
      report.m2 = s * s * sum2 / n;
      break;
    }
    case MomentMethod::covariance_oracle: {
      report.m1 = raw_moment(kind, 1, s);
      report.m2 = s * s * covariance_oracle_m2(kind);
      break;
    }
  }
  report.variance = report.m2 - report.m1 * report.m1;
  return report;
}

nlohmann::ordered_json to_json(const MomentReport& report) {
  return {{"kind", std::string(to_string(report.kind))},
          {"scale", report.scale},
          {"m1", report.m1},
          {"m2", report.m2},
          {"variance", report.variance},
          {"method", std::string(to_string(report.method))}};
}

}  // namespace hexdist
