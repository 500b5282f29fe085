#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hexdist/verify.hpp"

using namespace hexdist;

TEST_CASE("normalization checks pass at 1e-9 for all kinds") {
  for (DistanceKind k : kAllKinds) {
    const CheckReport r = check_normalization(k, 1e-9);
    CHECK(r.pass);
    CHECK(r.max_abs_error <= 1e-9);
  }
}

TEST_CASE("an impossible tolerance fails honestly") {
  // below one ulp of 1.0 no quadrature can certify the integral
  const CheckReport r = check_normalization(DistanceKind::HexAdjacent, 1e-17);
  CHECK(!r.pass);
  CHECK(r.max_abs_error > 1e-17);
  CHECK(r.threshold == 1e-17);
}

TEST_CASE("mixture identity checks") {
  CHECK(check_mixture_hi(1001).pass);
  CHECK(check_mixture_hi(1001).max_abs_error <= 1e-12);
  CHECK(check_mixture_ha(1001).pass);
  CHECK(check_mixture_ha(1001).max_abs_error <= 1e-12);
  // endpoints only: both densities vanish there
  CHECK(check_mixture_hi(2).pass);
  CHECK_THROWS_AS(check_mixture_hi(1), std::invalid_argument);
}

TEST_CASE("recursion identity over the doubled hexagon") {
  const CheckReport r = check_recursion(4001);
  CHECK(r.pass);
  CHECK(r.max_abs_error <= 1e-9);
  CHECK(r.details.find("max in [") != std::string::npos);
}

TEST_CASE("continuity checks for every kind") {
  for (DistanceKind k : kAllKinds) {
    const CheckReport r = check_continuity(k);
    CHECK(r.pass);
  }
  // the six interior breakpoints of d6 all agree
  const CheckReport d6 = check_continuity(DistanceKind::D6);
  CHECK(d6.grid_size == 6);
  CHECK(d6.max_abs_error <= 1e-9);
}

TEST_CASE("closed-form cdfs agree with quadrature") {
  CHECK(check_cdf_consistency(DistanceKind::HexInterior, 1000).pass);
  CHECK(check_cdf_consistency(DistanceKind::HexAdjacent, 1000).pass);
}

TEST_CASE("support agreement for every kind") {
  for (DistanceKind k : kAllKinds) CHECK(check_support_agreement(k).pass);
}

TEST_CASE("goodness of fit at the simulation scale and beyond") {
  const KsReport small = ks_check(DistanceKind::HexInterior, 2000, 42);
  CHECK(small.pass);
  CHECK(small.ks_distance <= 0.0365);

  const KsReport ha = ks_check(DistanceKind::HexAdjacent, 100000, 42);
  CHECK(ha.pass);
  CHECK(ha.ks_distance <= 0.00516);

  // validates the reconstructed cross-hexagon placement for d3
  CHECK(ks_check(DistanceKind::D3, 100000, 42).pass);
}

TEST_CASE("ks_check rejects tiny samples") {
  CHECK_THROWS_AS(ks_check(DistanceKind::D1, 50, 0), std::invalid_argument);
}

TEST_CASE("ks critical value formula") {
  CHECK(std::fabs(ks_critical_value(2000) - 0.036448) < 1e-5);
  CHECK(std::fabs(ks_critical_value(100000) - 0.0051545) < 1e-6);
}

TEST_CASE("suites are deterministic given seed and grid") {
  SuiteOptions options;
  options.seed = 42;
  options.ks_n = 2000;
  const std::string a = to_json(run_suite("all", options)).dump(2);
  const std::string b = to_json(run_suite("all", options)).dump(2);
  CHECK(a == b);
}

TEST_CASE("full suite passes with default thresholds") {
  const SuiteResult result = run_suite("all", SuiteOptions{});
  CHECK(result.all_pass);
  CHECK(result.checks.size() == 10 + 10 + 2 + 1 + 2 + 10);
  CHECK(result.ks.size() == 10);
}

TEST_CASE("unknown suite name is rejected") {
  CHECK_THROWS_AS(run_suite("bogus", SuiteOptions{}), std::invalid_argument);
}

TEST_CASE("report json carries the contract fields") {
  const CheckReport r = check_normalization(DistanceKind::D1);
  const auto j = to_json(r);
  CHECK(j.contains("check_name"));
  CHECK(j.contains("max_abs_error"));
  CHECK(j.contains("threshold"));
  CHECK(j.contains("pass"));
  CHECK(j.contains("grid_size"));
  CHECK(j.contains("details"));
  const auto k = to_json(ks_check(DistanceKind::D1, 2000, 7));
  for (const char* field : {"kind", "n", "seed", "ks_distance",
                            "critical_value", "pass"})
    CHECK(k.contains(field));
}
