#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(RABOTNOV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("corollaries csv: 14 passing rows, exit 0") {
  const auto r = run_cli("corollaries --output csv --points 1024");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 15);  // header + 14 rows
  CHECK(lines[0].rfind("alpha,", 0) == 0);
  for (size_t i = 1; i < lines.size(); ++i)
    CHECK(lines[i].back() == '1');  // pass column
}

TEST_CASE("corollaries json-lines parses and passes") {
  const auto r = run_cli("corollaries --output json-lines --points 1024");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 14);
  for (const auto& line : lines) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["pass"].get<bool>());
    CHECK(j["pole_flags"].get<long>() == 0);
    CHECK(j["margin"].get<double>() >= -1e-9);
  }
}

TEST_CASE("bounds shows the Corollary 1 constant") {
  const auto r =
      run_cli("bounds --alpha 0 --beta-re -0.3333333333 --gamma 1 --output json-lines");
  CHECK(r.exit_code == 0);
  bool seen = false;
  for (const auto& line : lines_of(r.out)) {
    const auto j = nlohmann::json::parse(line);
    if (j["name"] == "f/fm") {
      CHECK(j["bound"].get<double>() == doctest::Approx(0.6).epsilon(1e-9));
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("eval with beta = 0 returns z") {
  const auto r = run_cli(
      "eval --alpha 0 --beta-re 0 --gamma 1 --z-re 0.5 --output json-lines");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["value_re"].get<double>() == 0.5);
  CHECK(j["value_im"].get<double>() == 0.0);
}

TEST_CASE("verify subcommand emits a passing certificate") {
  const auto r = run_cli(
      "verify --alpha 1 --beta-re 0.5 --gamma 1 --ratio fmp/fp --m 0 "
      "--points 512 --output json-lines");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["bound"].get<double>() == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(j["pass"].get<bool>());
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("eval --kind bogus").exit_code == 2);
  // alpha < 0 is a domain error
  CHECK(run_cli("eval --alpha -1 --beta-re 0.5 --z-re 0.1").exit_code == 2);
  // hypothesis violations are refusals, not failures
  CHECK(run_cli("verify --alpha 0 --beta-re 5 --gamma 1 --ratio f/fm "
                "--points 512").exit_code == 2);
}

TEST_CASE("grid overrides are honored") {
  const auto r = run_cli(
      "corollaries --radii 0.5,0.9,0.999 --points 512 --refine 0 "
      "--output json-lines");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(lines_of(r.out).front());
  CHECK(j["radii"].get<std::vector<double>>() ==
        std::vector<double>{0.5, 0.9, 0.999});
  CHECK(j["refine_rounds"].get<int>() == 0);
}
