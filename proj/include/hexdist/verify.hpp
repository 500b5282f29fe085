#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hexdist/distance_kind.hpp"

namespace hexdist {

// Outcome of one deterministic validation check. pass holds exactly when
// max_abs_error <= threshold.
struct CheckReport {
  std::string check_name;
  double max_abs_error = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::size_t grid_size = 0;
  std::string details;
};

// Outcome of one seeded goodness-of-fit check. pass holds exactly when
// ks_distance <= critical_value.
struct KsReport {
  DistanceKind kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double ks_distance = 0.0;
  double critical_value = 0.0;
  bool pass = false;
};

// |integral of the density - 1| via piecewise adaptive quadrature.
CheckReport check_normalization(DistanceKind kind, double tol = 1e-9);

// Sup-norm between the within-hexagon density and its 1/3-2/3 rhombus
// mixture over a uniform grid (plus all breakpoints) on the support.
CheckReport check_mixture_hi(std::size_t grid_size);

// Same for the adjacent-hexagon density and its 1/9-2/9 cross-rhombus
// mixture.
CheckReport check_mixture_ha(std::size_t grid_size);

// Sup-norm over [0, 4] of |nine-case mixture - pdf(HexInterior, d/2)/2|,
// on a uniform grid joined with every component breakpoint. The details
// field names the breakpoint sub-interval holding the largest error.
CheckReport check_recursion(std::size_t grid_size);

// Largest |left branch - right branch| over the interior breakpoints.
CheckReport check_continuity(DistanceKind kind);

// Sup-norm between the closed-form CDF and piecewise quadrature of the
// density (meaningful for HexInterior/HexAdjacent; for the other kinds the
// two routes coincide by construction and the check degenerates).
CheckReport check_cdf_consistency(DistanceKind kind, std::size_t grid_size);

// |min/max distance of the canonical placement - support bounds|.
CheckReport check_support_agreement(DistanceKind kind);

// Asymptotic one-sample 99% critical value, 1.63 / sqrt(n).
double ks_critical_value(std::size_t n);

// One-sample Kolmogorov-Smirnov distance between the empirical CDF of n
// seeded samples from the canonical placement and the model CDF.
KsReport ks_check(DistanceKind kind, std::size_t n, std::uint64_t seed);

nlohmann::ordered_json to_json(const CheckReport& report);
nlohmann::ordered_json to_json(const KsReport& report);

// Suite driver used by the command-line tool and the acceptance tests.
struct SuiteOptions {
  std::size_t grid_size = 1001;        // mixture / generic grids
  std::size_t recursion_grid = 4001;
  std::size_t cdf_grid = 1000;
  std::size_t ks_n = 2000;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  std::vector<CheckReport> checks;
  std::vector<KsReport> ks;
  bool all_pass = true;
};

// Valid names: all, normalization, continuity, mixture, recursion, cdf,
// support, ks. Throws std::invalid_argument for anything else. Per-kind
// sample seeds are derived from options.seed with a SplitMix64 chain, so a
// given (suite, options) pair is fully deterministic.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

std::vector<std::string> suite_names();

nlohmann::ordered_json to_json(const SuiteResult& result);

}  // namespace hexdist
