#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "hexdist/distance_kind.hpp"

namespace hexdist {

enum class MomentMethod { closed_form, quadrature, monte_carlo, covariance_oracle };

std::string_view to_string(MomentMethod method);
std::optional<MomentMethod> parse_moment_method(std::string_view name);

// First and second raw moments plus the variance of a distance law, with
// the method that produced them. Under side length s the mean scales by s
// and both the second moment and the variance scale by s^2.
struct MomentReport {
  DistanceKind kind;
  double scale = 1.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double variance = 0.0;
  MomentMethod method = MomentMethod::quadrature;
};

// E[D^order] for side length s: piecewise quadrature of x^order times the
// density, scaled by s^order. order >= 1, s > 0.
double raw_moment(DistanceKind kind, int order, double s = 1.0);

// The logarithmic closed form of the mean distance within a unit hexagon:
// 7 sqrt(3)/30 - 7/90 + [28 ln(2 sqrt(3)+3) + 29 ln(2 sqrt(3)-3)] / 60.
double closed_mean_hex_interior();

// Var[D] for side length s, from the quadrature moments.
double variance(DistanceKind kind, double s = 1.0);

// Second raw moment predicted from the canonical placement geometry alone:
// E|P1 - P2|^2 = tr(Cov_a) + tr(Cov_b) + |c_a - c_b|^2 for independent
// uniform points. Never touches the density, so it is an independent check
// on every closed form.
double covariance_oracle_m2(DistanceKind kind);

// Builds a full report with the requested method. monte_carlo uses mc_n
// seeded samples; covariance_oracle takes m2 from the placement geometry
// and m1 from quadrature.
MomentReport moment_report(DistanceKind kind, double s, MomentMethod method,
                           std::size_t mc_n = 1000000, std::uint64_t seed = 0);

nlohmann::ordered_json to_json(const MomentReport& report);

}  // namespace hexdist
