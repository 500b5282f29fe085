// Command-line access to the hexagon distance distributions: point
// evaluation, plot-ready tables, seeded sampling, the validation suites,
// moments, and polynomial surrogates. Output is CSV or JSON on stdout (or
// --out), with doubles at full round-trip precision.
//
// Exit codes: 0 success, 1 validation suite failure, 2 usage error,
// 3 numerical error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexdist/distance_kind.hpp"
#include "hexdist/distributions.hpp"
#include "hexdist/errors.hpp"
#include "hexdist/geometry.hpp"
#include "hexdist/moments.hpp"
#include "hexdist/polyfit.hpp"
#include "hexdist/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

hexdist::DistanceKind parse_kind_or_throw(const std::string& name) {
  const auto kind = hexdist::parse_distance_kind(name);
  if (!kind) {
    throw std::invalid_argument("unknown kind '" + name + "'; valid kinds: " +
                                hexdist::valid_kind_names());
  }
  return *kind;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
  file << text;
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

// Uniform grid over the scaled support merged with the scaled breakpoints.
std::vector<double> table_grid(hexdist::DistanceKind kind, double scale,
                               std::size_t points) {
  const auto [lo, hi] = hexdist::support(kind);
  std::set<double> xs;
  for (std::size_t i = 0; i < points; ++i)
    xs.insert(scale * (lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(points - 1)));
  for (double b : hexdist::breakpoints(kind)) xs.insert(scale * b);
  return {xs.begin(), xs.end()};
}

struct CommonArgs {
  std::string kind_name;
  std::string format = "json";
  std::string out_path;
  double scale = 1.0;
};

int run_eval(const CommonArgs& args, double d) {
  const auto kind = parse_kind_or_throw(args.kind_name);
  const double pdf = hexdist::scaled_pdf(kind, args.scale, d);
  const double cdf = hexdist::scaled_cdf(kind, args.scale, d);
  if (args.format == "csv") {
    emit("d,pdf,cdf\n" + fmt17(d) + "," + fmt17(pdf) + "," + fmt17(cdf) + "\n",
         args.out_path);
  } else {
    emit(dump({{"schema_version", kSchemaVersion},
               {"command", "eval"},
               {"kind", std::string(to_string(kind))},
               {"scale", args.scale},
               {"d", d},
               {"pdf", pdf},
               {"cdf", cdf}}),
         args.out_path);
  }
  return kExitOk;
}

int run_table(const CommonArgs& args, std::size_t points) {
  if (points < 2) throw std::invalid_argument("table needs --points >= 2");
  const auto kind = parse_kind_or_throw(args.kind_name);
  const std::vector<double> xs = table_grid(kind, args.scale, points);
  if (args.format == "csv") {
    std::string out = "d,pdf,cdf\n";
    for (double x : xs) {
      out += fmt17(x) + "," + fmt17(hexdist::scaled_pdf(kind, args.scale, x)) +
             "," + fmt17(hexdist::scaled_cdf(kind, args.scale, x)) + "\n";
    }
    emit(out, args.out_path);
  } else {
    ordered_json rows = ordered_json::array();
    for (double x : xs) {
      rows.push_back({x, hexdist::scaled_pdf(kind, args.scale, x),
                      hexdist::scaled_cdf(kind, args.scale, x)});
    }
    emit(dump({{"schema_version", kSchemaVersion},
               {"command", "table"},
               {"kind", std::string(to_string(kind))},
               {"scale", args.scale},
               {"columns", {"d", "pdf", "cdf"}},
               {"rows", rows}}),
         args.out_path);
  }
  return kExitOk;
}

int run_sample(const CommonArgs& args, std::size_t n, std::uint64_t seed,
               unsigned workers) {
  if (n == 0) throw std::invalid_argument("sample needs --n >= 1");
  const auto kind = parse_kind_or_throw(args.kind_name);
  std::vector<double> samples =
      hexdist::sample_distances(hexdist::canonical_placement(kind), n, seed,
                                workers);
  if (args.scale != 1.0)
    for (double& s : samples) s *= args.scale;
  if (args.format == "csv") {
    std::string out = "distance\n";
    for (double s : samples) out += fmt17(s) + "\n";
    emit(out, args.out_path);
  } else {
    emit(dump({{"schema_version", kSchemaVersion},
               {"command", "sample"},
               {"kind", std::string(to_string(kind))},
               {"scale", args.scale},
               {"n", n},
               {"seed", seed},
               {"workers", workers},
               {"distances", samples}}),
         args.out_path);
  }
  return kExitOk;
}

int run_validate(const std::string& suite, const hexdist::SuiteOptions& options,
                 const std::string& out_path) {
  const hexdist::SuiteResult result = hexdist::run_suite(suite, options);
  ordered_json doc = {{"schema_version", kSchemaVersion},
                      {"command", "validate"},
                      {"suite", suite},
                      {"options",
                       {{"grid_size", options.grid_size},
                        {"recursion_grid", options.recursion_grid},
                        {"cdf_grid", options.cdf_grid},
                        {"ks_n", options.ks_n},
                        {"seed", options.seed}}}};
  const ordered_json body = hexdist::to_json(result);
  doc["checks"] = body["checks"];
  doc["ks"] = body["ks"];
  doc["all_pass"] = result.all_pass;
  emit(dump(doc), out_path);
  return result.all_pass ? kExitOk : kExitValidationFailure;
}

int run_moments(const CommonArgs& args, const std::string& method_name,
                bool compare, std::size_t mc_n, std::uint64_t seed) {
  const auto kind = parse_kind_or_throw(args.kind_name);
  if (compare) {
    std::vector<hexdist::MomentReport> reports;
    reports.push_back(hexdist::moment_report(
        kind, args.scale, hexdist::MomentMethod::quadrature));
    reports.push_back(hexdist::moment_report(
        kind, args.scale, hexdist::MomentMethod::covariance_oracle));
    reports.push_back(hexdist::moment_report(
        kind, args.scale, hexdist::MomentMethod::monte_carlo, mc_n, seed));
    if (kind == hexdist::DistanceKind::HexInterior) {
      reports.push_back(hexdist::moment_report(
          kind, args.scale, hexdist::MomentMethod::closed_form));
    }
    if (args.format == "csv") {
      std::string out = "method,m1,m2,variance\n";
      for (const auto& r : reports) {
        out += std::string(to_string(r.method)) + "," + fmt17(r.m1) + "," +
               fmt17(r.m2) + "," + fmt17(r.variance) + "\n";
      }
      emit(out, args.out_path);
    } else {
      ordered_json rows = ordered_json::array();
      for (const auto& r : reports) rows.push_back(hexdist::to_json(r));
      emit(dump({{"schema_version", kSchemaVersion},
                 {"command", "moments"},
                 {"compare", true},
                 {"reports", rows}}),
           args.out_path);
    }
    return kExitOk;
  }

  const auto method = hexdist::parse_moment_method(method_name);
  if (!method) {
    throw std::invalid_argument(
        "unknown method '" + method_name +
        "'; valid: quadrature, closed-form, monte-carlo, covariance-oracle");
  }
  const hexdist::MomentReport report =
      hexdist::moment_report(kind, args.scale, *method, mc_n, seed);
  if (args.format == "csv") {
    emit("method,m1,m2,variance\n" + std::string(to_string(report.method)) +
             "," + fmt17(report.m1) + "," + fmt17(report.m2) + "," +
             fmt17(report.variance) + "\n",
         args.out_path);
  } else {
    ordered_json doc = {{"schema_version", kSchemaVersion},
                        {"command", "moments"}};
    doc.update(hexdist::to_json(report));
    emit(dump(doc), args.out_path);
  }
  return kExitOk;
}

int run_fit(const CommonArgs& args, int degree, std::size_t points) {
  const auto kind = parse_kind_or_throw(args.kind_name);
  const hexdist::PolyFitReport report = hexdist::fit(kind, degree, points);
  if (args.format == "csv") {
    std::string out = "d,pdf,poly,residual\n";
    for (std::size_t i = 0; i < report.grid.points; ++i) {
      const double d = report.grid.lo + report.grid.spacing() * static_cast<double>(i);
      const double pdf = hexdist::pdf_eval(kind, d);
      const double poly = hexdist::eval_poly(report.coefficients, d);
      out += fmt17(d) + "," + fmt17(pdf) + "," + fmt17(poly) + "," +
             fmt17(poly - pdf) + "\n";
    }
    emit(out, args.out_path);
  } else {
    ordered_json doc = {{"schema_version", kSchemaVersion},
                        {"command", "fit"}};
    doc.update(hexdist::to_json(report));
    emit(dump(doc), args.out_path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-distance distributions for hexagon geometries"};
  app.require_subcommand(1);

  CommonArgs args;
  double eval_d = 0.0;
  std::size_t points = 1001;
  std::size_t n = 2000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  int degree = 10;
  std::string suite = "all";
  std::string method = "quadrature";
  bool compare = false;
  hexdist::SuiteOptions suite_options;

  auto add_common = [&](CLI::App* cmd, bool needs_kind) {
    if (needs_kind)
      cmd->add_option("--kind", args.kind_name,
                      "distance kind (" + hexdist::valid_kind_names() + ")")
          ->required();
    cmd->add_option("--scale", args.scale, "hexagon side length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", args.out_path, "write to file instead of stdout");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate pdf and cdf at one point");
  add_common(eval, true);
  eval->add_option("--d", eval_d, "distance to evaluate at")->required();

  CLI::App* table = app.add_subcommand("table", "tabulate d,pdf,cdf over the support");
  add_common(table, true);
  table->add_option("--points", points, "uniform grid size (breakpoints are added)")
      ->capture_default_str();

  CLI::App* sample = app.add_subcommand("sample", "draw seeded random distances");
  add_common(sample, true);
  sample->add_option("--n", n, "number of samples")->required();
  sample->add_option("--seed", seed, "rng seed")->capture_default_str();
  sample->add_option("--workers", workers, "deterministic worker streams")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  CLI::App* validate = app.add_subcommand("validate", "run the validation suites");
  validate->add_option("--suite", suite, "one of: all, normalization, continuity, mixture, recursion, cdf, support, ks")
      ->check(CLI::IsMember(hexdist::suite_names()))
      ->capture_default_str();
  validate->add_option("--grid", suite_options.grid_size, "mixture grid size")
      ->capture_default_str();
  validate->add_option("--recursion-grid", suite_options.recursion_grid,
                       "recursion identity grid size")
      ->capture_default_str();
  validate->add_option("--cdf-grid", suite_options.cdf_grid,
                       "cdf consistency grid size")
      ->capture_default_str();
  validate->add_option("--n", suite_options.ks_n, "goodness-of-fit sample count")
      ->capture_default_str();
  validate->add_option("--seed", suite_options.seed, "rng seed")
      ->capture_default_str();
  validate->add_option("--out", args.out_path, "write to file instead of stdout");

  CLI::App* moments = app.add_subcommand("moments", "first two moments and variance");
  add_common(moments, true);
  moments->add_option("--method", method,
                      "quadrature, closed-form, monte-carlo, covariance-oracle")
      ->capture_default_str();
  moments->add_flag("--compare", compare, "emit one row per method");
  moments->add_option("--n", n, "monte carlo sample count")->capture_default_str();
  moments->add_option("--seed", seed, "rng seed")->capture_default_str();

  CLI::App* fit = app.add_subcommand("fit", "least-squares polynomial surrogate");
  add_common(fit, true);
  fit->add_option("--degree", degree, "polynomial degree")->capture_default_str();
  fit->add_option("--points", points, "fitting grid size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(args, eval_d);
    if (table->parsed()) return run_table(args, points);
    if (sample->parsed()) return run_sample(args, n, seed, workers);
    if (validate->parsed()) return run_validate(suite, suite_options, args.out_path);
    if (moments->parsed()) {
      const std::size_t mc_n = moments->count("--n") ? n : 1000000;
      return run_moments(args, method, compare, mc_n, seed);
    }
    if (fit->parsed()) return run_fit(args, degree, points);
  } catch (const hexdist::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
