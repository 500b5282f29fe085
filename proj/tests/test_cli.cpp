#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

const char* cli_path() {
  const char* path = std::getenv("HEXDIST_CLI");
  REQUIRE_MESSAGE(path != nullptr, "HEXDIST_CLI must point at the cli binary");
  return path;
}

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::vector<double>> parse_csv(const std::string& text,
                                           std::size_t columns) {
  std::vector<std::vector<double>> rows;
  std::size_t pos = text.find('\n');  // skip header
  REQUIRE(pos != std::string::npos);
  ++pos;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    std::vector<double> row;
    std::size_t cell = 0;
    while (cell != std::string::npos) {
      std::size_t comma = line.find(',', cell);
      row.push_back(std::stod(line.substr(
          cell, comma == std::string::npos ? std::string::npos : comma - cell)));
      cell = comma == std::string::npos ? comma : comma + 1;
    }
    REQUIRE(row.size() == columns);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

TEST_CASE("eval emits pdf and cdf") {
  const RunResult r = run_cli("eval --kind hex-interior --d 1.0");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["kind"] == "hex-interior");
  CHECK(std::fabs(doc["pdf"].get<double>() - 0.8163548020553693) < 1e-12);
  CHECK(std::fabs(doc["cdf"].get<double>() - 0.66054034044376679) < 1e-12);
}

TEST_CASE("eval respects the scale flag") {
  const RunResult r = run_cli("eval --kind hex-interior --d 2.0 --scale 2");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(std::fabs(doc["pdf"].get<double>() - 0.5 * 0.8163548020553693) < 1e-12);
}

TEST_CASE("table csv re-integrates to one within trapezoid error") {
  const RunResult r =
      run_cli("table --kind hex-adjacent --points 4001 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out, 3);
  REQUIRE(rows.size() >= 4001);
  double trap = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    trap += 0.5 * (rows[i][0] - rows[i - 1][0]) * (rows[i][1] + rows[i - 1][1]);
    REQUIRE(rows[i][0] > rows[i - 1][0]);  // strictly ascending grid
    REQUIRE(rows[i][2] >= rows[i - 1][2]); // cdf column is monotone
  }
  CHECK(std::fabs(trap - 1.0) < 1e-4);
}

TEST_CASE("table grid includes the breakpoints") {
  const RunResult r = run_cli("table --kind d3 --points 50 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out, 3);
  bool has_s7 = false;
  for (const auto& row : rows)
    has_s7 = has_s7 || std::fabs(row[0] - std::sqrt(7.0)) < 1e-15;
  CHECK(has_s7);
}

TEST_CASE("sample stream is reproducible and respects n") {
  const RunResult a = run_cli("sample --kind d5 --n 500 --seed 7 --format csv");
  const RunResult b = run_cli("sample --kind d5 --n 500 --seed 7 --format csv");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto rows = parse_csv(a.out, 1);
  CHECK(rows.size() == 500);
  const RunResult c = run_cli("sample --kind d5 --n 500 --seed 8 --format csv");
  CHECK(a.out != c.out);
}

TEST_CASE("validate with the default seed runs clean") {
  const RunResult r = run_cli("validate --suite all");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["all_pass"] == true);
}

TEST_CASE("validate is byte-identical across runs of the same seed") {
  const RunResult a = run_cli("validate --suite all --seed 42");
  const RunResult b = run_cli("validate --suite all --seed 42");
  CHECK(!a.out.empty());
  CHECK(a.out == b.out);
}

TEST_CASE("validate single suite exits by result") {
  const RunResult r = run_cli("validate --suite recursion --grid 4001");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["checks"].size() == 1);
}

TEST_CASE("moments quadrature value for the adjacent hexagons") {
  const RunResult r = run_cli("moments --kind hex-adjacent");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(std::fabs(doc["m1"].get<double>() - 1.8566075439866338) < 1e-9);
  CHECK(doc["method"] == "quadrature");
}

TEST_CASE("moments compare emits one row per method") {
  const RunResult r =
      run_cli("moments --kind hex-interior --compare --n 10000 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto lines = r.out;
  CHECK(lines.find("quadrature") != std::string::npos);
  CHECK(lines.find("covariance_oracle") != std::string::npos);
  CHECK(lines.find("monte_carlo") != std::string::npos);
  CHECK(lines.find("closed_form") != std::string::npos);
}

TEST_CASE("fit reports coefficients and residual norm") {
  const RunResult r = run_cli("fit --kind hex-interior --degree 10 --points 1001");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["degree"] == 10);
  CHECK(doc["coefficients"].size() == 11);
  CHECK(doc["norm_of_residuals"].get<double>() < 0.76);
}

TEST_CASE("fit csv exposes the residual column") {
  const RunResult r =
      run_cli("fit --kind hex-interior --degree 10 --points 101 --format csv");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out, 4);
  REQUIRE(rows.size() == 101);
  for (const auto& row : rows)
    CHECK(std::fabs(row[3] - (row[2] - row[1])) < 1e-12);
}

TEST_CASE("unknown kind exits 2 and lists the valid names") {
  const std::string cmd =
      std::string(cli_path()) + " eval --kind d9 --d 1.0 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  CHECK(WEXITSTATUS(pclose(pipe)) == 2);
  CHECK(out.find("d9") != std::string::npos);
  CHECK(out.find("hex-interior") != std::string::npos);
  CHECK(out.find("hex-adjacent") != std::string::npos);
}

TEST_CASE("numerical breakdown exits 3") {
  // degree 40 drives the least-squares pivots under the rank cutoff
  const RunResult r = run_cli("fit --kind hex-interior --degree 40 --points 60");
  CHECK(r.exit_code == 3);
}

TEST_CASE("bad flags exit 2") {
  CHECK(run_cli("eval --kind hex-interior").exit_code == 2);   // missing --d
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("table --kind d1 --scale -1").exit_code == 2);
  CHECK(run_cli("fit --kind hex-interior --degree 2000 --points 100").exit_code == 2);
}
