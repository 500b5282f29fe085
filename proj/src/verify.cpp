#include "hexdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hexdist/distributions.hpp"
#include "hexdist/geometry.hpp"
#include "hexdist/quadrature.hpp"
#include "hexdist/rng.hpp"

namespace hexdist {
namespace {

std::string format_g(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Uniform grid over [lo, hi] merged with extra abscissae (breakpoints), so
// kinks are always sampled exactly.
std::vector<double> grid_with(double lo, double hi, std::size_t n,
                              const std::vector<double>& extra) {
  std::set<double> pts(extra.begin(), extra.end());
  for (std::size_t i = 0; i < n; ++i)
    pts.insert(lo + (hi - lo) * static_cast<double>(i) /
                        static_cast<double>(n - 1));
  std::vector<double> out;
  for (double p : pts)
    if (p >= lo && p <= hi) out.push_back(p);
  return out;
}

CheckReport sup_norm_check(std::string name, const std::vector<double>& grid,
                           double threshold,
                           const std::function<double(double)>& err) {
  CheckReport report;
  report.check_name = std::move(name);
  report.threshold = threshold;
  report.grid_size = grid.size();
  double worst = 0.0, at = grid.empty() ? 0.0 : grid.front();
  for (double d : grid) {
    const double e = std::fabs(err(d));
    if (e > worst) {
      worst = e;
      at = d;
    }
  }
  report.max_abs_error = worst;
  report.pass = worst <= threshold;
  report.details = "max at d=" + format_g(at);
  return report;
}

}  // namespace

CheckReport check_normalization(DistanceKind kind, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const PiecewisePdf& table = piecewise_pdf(kind);
  double total = 0.0;
  for (const PdfPiece& piece : table.pieces)
    total += integrate([&](double x) { return table(x); }, piece.lo, piece.hi,
                       1e-12);
  CheckReport report;
  report.check_name = std::string("normalization/") + std::string(to_string(kind));
  report.max_abs_error = std::fabs(total - 1.0);
  report.threshold = tol;
  report.pass = report.max_abs_error <= tol;
  report.grid_size = table.pieces.size();
  report.details = "integral=" + format_g(total);
  return report;
}

CheckReport check_mixture_hi(std::size_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid_size must be >= 2");
  std::vector<double> extra = breakpoints(DistanceKind::D1);
  for (double b : breakpoints(DistanceKind::D2)) extra.push_back(b);
  for (double b : breakpoints(DistanceKind::HexInterior)) extra.push_back(b);
  const Mixture mix = within_hexagon_mixture();
  return sup_norm_check(
      "mixture/hex-interior", grid_with(0.0, 2.0, grid_size, extra), 1e-12,
      [&](double d) {
        return mixture_pdf(mix, d) - pdf_eval(DistanceKind::HexInterior, d);
      });
}

CheckReport check_mixture_ha(std::size_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid_size must be >= 2");
  std::vector<double> extra;
  for (DistanceKind k : {DistanceKind::D2, DistanceKind::D3, DistanceKind::D4,
                         DistanceKind::D5, DistanceKind::D6, DistanceKind::D7,
                         DistanceKind::HexAdjacent}) {
    for (double b : breakpoints(k)) extra.push_back(b);
  }
  const auto [lo, hi] = support(DistanceKind::HexAdjacent);
  const Mixture mix = adjacent_hexagon_mixture();
  return sup_norm_check(
      "mixture/hex-adjacent", grid_with(lo, hi, grid_size, extra), 1e-12,
      [&](double d) {
        return mixture_pdf(mix, d) - pdf_eval(DistanceKind::HexAdjacent, d);
      });
}

CheckReport check_recursion(std::size_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid_size must be >= 2");
  // Breakpoints of all nine components plus the doubled within-hexagon
  // breakpoints where the right-hand side has its kinks.
  std::set<double> bps;
  for (DistanceKind k : kAllKinds)
    for (double b : breakpoints(k)) bps.insert(b);
  for (double b : breakpoints(DistanceKind::HexInterior)) bps.insert(2.0 * b);
  std::vector<double> extra(bps.begin(), bps.end());

  const Mixture mix = double_hexagon_mixture();
  const std::vector<double> grid = grid_with(0.0, 4.0, grid_size, extra);
  CheckReport report = sup_norm_check(
      "recursion/double-hexagon", grid, 1e-9, [&](double d) {
        return mixture_pdf(mix, d) -
               0.5 * pdf_eval(DistanceKind::HexInterior, 0.5 * d);
      });

  // Locate the breakpoint sub-interval holding the worst grid point.
  double worst = 0.0, at = 0.0;
  for (double d : grid) {
    const double e = std::fabs(mixture_pdf(mix, d) -
                               0.5 * pdf_eval(DistanceKind::HexInterior, 0.5 * d));
    if (e > worst) {
      worst = e;
      at = d;
    }
  }
  double lo = 0.0, hi = 4.0;
  for (double b : bps) {
    if (b <= at) lo = b;
    if (b >= at) {
      hi = b;
      break;
    }
  }
  report.details = "max in [" + format_g(lo) + ", " + format_g(hi) +
                   "] at d=" + format_g(at);
  return report;
}

CheckReport check_continuity(DistanceKind kind) {
  const PiecewisePdf& table = piecewise_pdf(kind);
  CheckReport report;
  report.check_name = std::string("continuity/") + std::string(to_string(kind));
  report.threshold = 1e-9;
  report.grid_size = table.pieces.size() - 1;
  double worst = 0.0, at = table.support_lo;
  for (std::size_t i = 0; i + 1 < table.pieces.size(); ++i) {
    const double b = table.pieces[i].hi;
    const double left = table.outer_factor * b * table.pieces[i].bracket(b);
    const double right = table.outer_factor * b * table.pieces[i + 1].bracket(b);
    const double e = std::fabs(left - right);
    if (e > worst) {
      worst = e;
      at = b;
    }
  }
  report.max_abs_error = worst;
  report.pass = worst <= report.threshold;
  report.details = "max jump at d=" + format_g(at);
  return report;
}

CheckReport check_cdf_consistency(DistanceKind kind, std::size_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("grid_size must be >= 2");
  const auto [lo, hi] = support(kind);
  return sup_norm_check(
      std::string("cdf-consistency/") + std::string(to_string(kind)),
      grid_with(lo, hi, grid_size, breakpoints(kind)), 1e-9, [&](double d) {
        return cdf_eval(kind, d) - cdf_by_quadrature(kind, d);
      });
}

CheckReport check_support_agreement(DistanceKind kind) {
  const auto [lo, hi] = support(kind);
  const auto [min_d, max_d] = min_max_distance(canonical_placement(kind));
  CheckReport report;
  report.check_name = std::string("support/") + std::string(to_string(kind));
  report.threshold = 1e-9;
  report.grid_size = 2;
  report.max_abs_error = std::max(std::fabs(min_d - lo), std::fabs(max_d - hi));
  report.pass = report.max_abs_error <= report.threshold;
  report.details = "placement [" + format_g(min_d) + ", " + format_g(max_d) +
                   "] vs support [" + format_g(lo) + ", " + format_g(hi) + "]";
  return report;
}

double ks_critical_value(std::size_t n) {
  return 1.63 / std::sqrt(static_cast<double>(n));
}

KsReport ks_check(DistanceKind kind, std::size_t n, std::uint64_t seed) {
  if (n < 100) throw std::invalid_argument("ks_check needs n >= 100");
  std::vector<double> samples =
      sample_distances(canonical_placement(kind), n, seed);
  std::sort(samples.begin(), samples.end());
  const std::vector<double> cdf = cdf_batch_sorted(kind, samples);
  const double dn = static_cast<double>(n);
  double stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double above = cdf[i] - static_cast<double>(i) / dn;
    const double below = static_cast<double>(i + 1) / dn - cdf[i];
    stat = std::max(stat, std::max(above, below));
  }
  KsReport report;
  report.kind = kind;
  report.n = n;
  report.seed = seed;
  report.ks_distance = stat;
  report.critical_value = ks_critical_value(n);
  report.pass = stat <= report.critical_value;
  return report;
}

nlohmann::ordered_json to_json(const CheckReport& report) {
  return {{"check_name", report.check_name},
          {"max_abs_error", report.max_abs_error},
          {"threshold", report.threshold},
          {"pass", report.pass},
          {"grid_size", report.grid_size},
          {"details", report.details}};
}

nlohmann::ordered_json to_json(const KsReport& report) {
  return {{"kind", std::string(to_string(report.kind))},
          {"n", report.n},
          {"seed", report.seed},
          {"ks_distance", report.ks_distance},
          {"critical_value", report.critical_value},
          {"pass", report.pass}};
}

std::vector<std::string> suite_names() {
  return {"all",  "normalization", "continuity", "mixture",
          "recursion", "cdf",      "support",    "ks"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown suite: " + name);
  const bool all = name == "all";

  SuiteResult result;
  auto add = [&result](CheckReport report) {
    result.all_pass = result.all_pass && report.pass;
    result.checks.push_back(std::move(report));
  };

  if (all || name == "normalization")
    for (DistanceKind k : kAllKinds) add(check_normalization(k));
  if (all || name == "continuity")
    for (DistanceKind k : kAllKinds) add(check_continuity(k));
  if (all || name == "mixture") {
    add(check_mixture_hi(options.grid_size));
    add(check_mixture_ha(options.grid_size));
  }
  if (all || name == "recursion") add(check_recursion(options.recursion_grid));
  if (all || name == "cdf") {
    add(check_cdf_consistency(DistanceKind::HexInterior, options.cdf_grid));
    add(check_cdf_consistency(DistanceKind::HexAdjacent, options.cdf_grid));
  }
  if (all || name == "support")
    for (DistanceKind k : kAllKinds) add(check_support_agreement(k));
  if (all || name == "ks") {
    SplitMix64 seeds(options.seed);
    for (DistanceKind k : kAllKinds) {
      KsReport report = ks_check(k, options.ks_n, seeds.next());
      result.all_pass = result.all_pass && report.pass;
      result.ks.push_back(report);
    }
  }
  return result;
}

nlohmann::ordered_json to_json(const SuiteResult& result) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckReport& report : result.checks) checks.push_back(to_json(report));
  nlohmann::ordered_json ks = nlohmann::ordered_json::array();
  for (const KsReport& report : result.ks) ks.push_back(to_json(report));
  return {{"checks", checks}, {"ks", ks}, {"all_pass", result.all_pass}};
}

}  // namespace hexdist
