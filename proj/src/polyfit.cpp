#include "hexdist/polyfit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hexdist/distributions.hpp"
#include "hexdist/errors.hpp"

namespace hexdist {
namespace {

// Reference surrogate coefficients, descending powers. The group factor of
// each set is applied once here so the arrays evaluate directly.
constexpr double kReferenceScaleHi = 1e2;
constexpr double kReferenceHi[11] = {
    -0.0146710, 0.136604, -0.538052, 1.167903, -1.525478, 1.230615,
    -0.605940,  0.175147, -0.043772, 0.025830, -0.000025};

constexpr double kReferenceScaleHa = 1e4;
constexpr double kReferenceHa[21] = {
    0.00000035, -0.000013, 0.000207,  -0.002094, 0.014469,  -0.072522,
    0.272508,   -0.782682, 1.736254,  -2.986406, 3.976655,  -4.072372,
    3.169347,   -1.841066, 0.778001,  -0.230634, 0.045522,  -0.005534,
    0.000394,   -0.0000103, 0.00000007092};

const std::vector<double>& scaled_reference(DistanceKind kind) {
  static const std::vector<double> hi = [] {
    std::vector<double> v(std::begin(kReferenceHi), std::end(kReferenceHi));
    for (double& c : v) c *= kReferenceScaleHi;
    return v;
  }();
  static const std::vector<double> ha = [] {
    std::vector<double> v(std::begin(kReferenceHa), std::end(kReferenceHa));
    for (double& c : v) c *= kReferenceScaleHa;
    return v;
  }();
  if (kind == DistanceKind::HexInterior) return hi;
  if (kind == DistanceKind::HexAdjacent) return ha;
  throw std::invalid_argument("reference fits exist only for the hexagon kinds");
}

void require_hexagon_kind(DistanceKind kind) {
  if (kind != DistanceKind::HexInterior && kind != DistanceKind::HexAdjacent)
    throw std::invalid_argument(
        "polynomial fits are defined for hex-interior and hex-adjacent only");
}

// Householder QR least squares on a column-equilibrated matrix. A is dense
// row-major m x p with m >= p. Solves min ||A c - y||; the equilibration
// is a diagonal reparameterization, so the minimizer is unchanged.
std::vector<double> qr_least_squares(std::vector<double> a, std::size_t m,
                                     std::size_t p, std::vector<double> y) {
  std::vector<double> scale(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm += a[i * p + j] * a[i * p + j];
    norm = std::sqrt(norm);
    if (norm == 0.0) {
      std::ostringstream msg;
      msg << "least squares column " << j << " is identically zero";
      throw NumericalError(msg.str());
    }
    scale[j] = norm;
    for (std::size_t i = 0; i < m; ++i) a[i * p + j] /= norm;
  }

  for (std::size_t k = 0; k < p; ++k) {
    double sigma = 0.0;
    for (std::size_t i = k; i < m; ++i) sigma += a[i * p + k] * a[i * p + k];
    sigma = std::sqrt(sigma);
    if (sigma < 1e-13) {
      std::ostringstream msg;
      msg << "rank deficiency at column " << k << " (power "
          << (p - 1 - k) << "): pivot " << sigma;
      throw NumericalError(msg.str());
    }
    const double alpha = a[k * p + k] > 0.0 ? -sigma : sigma;
    // Householder vector v overwrites the pivot column below the diagonal.
    const double v0 = a[k * p + k] - alpha;
    a[k * p + k] = v0;
    double vtv = v0 * v0;
    for (std::size_t i = k + 1; i < m; ++i) vtv += a[i * p + k] * a[i * p + k];
    if (vtv > 0.0) {
      for (std::size_t j = k + 1; j < p; ++j) {
        double dot = 0.0;
        for (std::size_t i = k; i < m; ++i) dot += a[i * p + k] * a[i * p + j];
        const double f = 2.0 * dot / vtv;
        for (std::size_t i = k; i < m; ++i) a[i * p + j] -= f * a[i * p + k];
      }
      double dot = 0.0;
      for (std::size_t i = k; i < m; ++i) dot += a[i * p + k] * y[i];
      const double f = 2.0 * dot / vtv;
      for (std::size_t i = k; i < m; ++i) y[i] -= f * a[i * p + k];
    }
    a[k * p + k] = alpha;  // diagonal of R
  }

  std::vector<double> c(p, 0.0);
  for (std::size_t k = p; k-- > 0;) {
    double sum = y[k];
    for (std::size_t j = k + 1; j < p; ++j) sum -= a[k * p + j] * c[j];
    c[k] = sum / a[k * p + k];
  }
  for (std::size_t j = 0; j < p; ++j) c[j] /= scale[j];
  return c;
}

}  // namespace

PolyFitReport fit(DistanceKind kind, int degree, std::size_t grid_points) {
  require_hexagon_kind(kind);
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (static_cast<std::size_t>(degree) >= grid_points)
    throw std::invalid_argument("degree must be smaller than grid_points");
  if (grid_points < 2) throw std::invalid_argument("grid needs >= 2 points");

  const auto [lo, hi] = support(kind);
  const std::size_t m = grid_points;
  const std::size_t p = static_cast<std::size_t>(degree) + 1;

  std::vector<double> xs(m), ys(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(m - 1);
    ys[i] = pdf_eval(kind, xs[i]);
  }

  std::vector<double> vander(m * p);
  for (std::size_t i = 0; i < m; ++i) {
    double power = 1.0;
    for (std::size_t j = 0; j < p; ++j) {
      vander[i * p + (p - 1 - j)] = power;  // descending powers
      power *= xs[i];
    }
  }

  PolyFitReport report;
  report.kind = kind;
  report.degree = degree;
  report.grid = {m, lo, hi};
  report.coefficients = qr_least_squares(std::move(vander), m, p, ys);

  double rss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = eval_poly(report.coefficients, xs[i]) - ys[i];
    rss += r * r;
  }
  report.norm_of_residuals = std::sqrt(rss);
  return report;
}

double eval_poly(std::span<const double> coefficients, double d) {
  if (coefficients.empty())
    throw std::invalid_argument("polynomial needs at least one coefficient");
  double acc = 0.0;
  for (double c : coefficients) acc = acc * d + c;
  return acc;
}

std::span<const double> reference_coefficients(DistanceKind kind) {
  return scaled_reference(kind);
}

double reference_norm_of_residuals(DistanceKind kind) {
  require_hexagon_kind(kind);
  return kind == DistanceKind::HexInterior ? 0.075608 : 0.191157;
}

CheckReport reference_fit_check(DistanceKind kind, double threshold) {
  const std::span<const double> coeffs = reference_coefficients(kind);
  const auto [lo, hi] = support(kind);
  const double trim = 0.05 * (hi - lo);
  const double a = lo + trim, b = hi - trim;

  constexpr std::size_t kGrid = 4001;
  CheckReport report;
  report.check_name =
      std::string("reference-fit/") + std::string(to_string(kind));
  report.threshold = threshold;
  report.grid_size = kGrid;
  double worst = 0.0, at = a;
  for (std::size_t i = 0; i < kGrid; ++i) {
    const double d =
        a + (b - a) * static_cast<double>(i) / static_cast<double>(kGrid - 1);
    const double e = std::fabs(eval_poly(coeffs, d) - pdf_eval(kind, d));
    if (e > worst) {
      worst = e;
      at = d;
    }
  }
  report.max_abs_error = worst;
  report.pass = worst <= threshold;
  std::ostringstream details;
  details.precision(17);
  details << "max at d=" << at << " on trimmed [" << a << ", " << b << "]";
  report.details = details.str();
  return report;
}

nlohmann::ordered_json to_json(const PolyFitReport& report) {
  return {{"kind", std::string(to_string(report.kind))},
          {"degree", report.degree},
          {"coefficients", report.coefficients},
          {"norm_of_residuals", report.norm_of_residuals},
          {"grid",
           {{"points", report.grid.points},
            {"lo", report.grid.lo},
            {"hi", report.grid.hi},
            {"spacing", report.grid.spacing()}}}};
}

}  // namespace hexdist
