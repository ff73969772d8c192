#include <doctest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "randflight/moments.hpp"

using namespace rflight;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + RFLIGHT_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

// Minimal CSV reader: header plus rows of unquoted numeric cells.
std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("rflight_test_" + name);
}

}  // namespace

TEST_CASE("verify-gamma") {
  CHECK(run("verify-gamma --m-list 3,4,5 --max-n 100").status == 0);
  CHECK(run("verify-gamma --max-n 2").status == 2);
  CHECK(run("verify-gamma --m-list 2 --max-n 10").status == 2);

  const auto csv = read_csv(run("verify-gamma --m-list 3 --max-n 8 --format csv").out);
  REQUIRE(csv.size() == 1 + 6 + 4);
  CHECK(csv[0] == std::vector<std::string>{"m", "n", "k", "recurrence", "closed_form", "match"});
  CHECK(csv[1][5] == "true");
}

TEST_CASE("moment") {
  SUBCASE("2-marginal curve with the series oracle") {
    const auto r = run("moment --index 2,2,0 --m 3 --c 2 --lambda 1 --t-grid 0:5:0.01 --oracle");
    REQUIRE(r.status == 0);
    const auto csv = read_csv(r.out);
    REQUIRE(csv.size() == 502);
    CHECK(csv[0] == std::vector<std::string>{"t", "closed_form", "series_oracle", "abs_diff"});
    CHECK(std::stod(csv[1][1]) == 0.0);
    CHECK(std::stod(csv[501][0]) == 5.0);
    double prev = -1.0;
    for (std::size_t i = 1; i < csv.size(); ++i) {
      const double v = std::stod(csv[i][1]);
      CHECK(v >= prev);
      CHECK(std::abs(v - std::stod(csv[i][2])) <= 1e-8);
      prev = v;
    }
  }
  SUBCASE("1-marginal column") {
    const auto r = run("moment --index 2,0,0 --c 1.5 --lambda 0.5 --t-grid 0:2:0.5");
    REQUIRE(r.status == 0);
    const auto csv = read_csv(r.out);
    REQUIRE(csv.size() == 6);
    const auto p = validate_params(3, 1.5, 0.5);
    for (std::size_t i = 1; i < csv.size(); ++i) {
      CHECK(std::stod(csv[i][1]) == mu_1marginal(p, std::stod(csv[i][0])));
    }
  }
  SUBCASE("json output") {
    const auto r = run("moment --index 0,2,2 --t-grid 0:1:0.25 --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 5);
    CHECK(j["rows"][4][1].get<double>() == mu_2marginal(validate_params(3, 1.0, 1.0), 1.0));
  }
  SUBCASE("usage errors") {
    CHECK(run("moment --index 1,2,0").status == 2);
    CHECK(run("moment --index 2,2,0 --m 4").status == 2);
    CHECK(run("moment --index 2,2,0 --c -1").status == 2);
    CHECK(run("moment --index 2,2,0 --t-grid 0:5").status == 2);
    CHECK(run("moment --index 2,2,0 --format xml").status == 2);
    CHECK(run("moment --index 2,x,0").status == 2);
    CHECK(run("moment").status == 2);
  }
}

TEST_CASE("simulate") {
  const std::string args = "simulate --index 2,2,0 --m 3 --c 2 --lambda 1 --t 1 --samples 40000 --seed 7";
  const auto a = run(args);
  const auto b = run(args);
  const auto c = run(args + " --workers 3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(run(args, "RF_THREADS=2").out == a.out);
  const auto csv = read_csv(a.out);
  REQUIRE(csv.size() == 2);
  CHECK(csv[0].back() == "z");

  CHECK(run("simulate --index 1,1,1 --samples 20000 --seed 1").status == 0);
  CHECK(run("simulate --index 2,2,0 --samples 0").status == 2);
  CHECK(run("simulate --index 2,2,0 --t 0").status == 2);
  CHECK(run("simulate --index 2,2,2 --samples 100").status == 2);
  CHECK(run("simulate --index 2,2,0 --samples 100", "RF_THREADS=none").status == 2);
}

TEST_CASE("kac") {
  const auto r = run("kac --rho 1 --m 3 --t 2 --lambda-list 100,1000,10000");
  REQUIRE(r.status == 0);
  const auto csv = read_csv(r.out);
  REQUIRE(csv.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::stod(csv[i][3]) == doctest::Approx(16.0 / 9.0).epsilon(1e-15));
  CHECK(std::stod(csv[3][4]) < std::stod(csv[2][4]));
  CHECK(run("kac --lambda-list 100,10").status == 2);
}

TEST_CASE("lemmas") {
  CHECK(run("lemmas --x-grid -5:5:1 --terms 80").status == 0);
  CHECK(run("lemmas --x-grid -5:5:1 --terms 10").status == 1);
  // stop is kept only within half a step of a grid point
  CHECK(read_csv(run("lemmas --x-grid 0:1:0.3").out).size() == 1 + 4);
  CHECK(read_csv(run("lemmas --x-grid 0:1.1:0.3").out).size() == 1 + 5);
}

TEST_CASE("charfn and coeffs") {
  const auto r = run("charfn --alpha 0,0,0 --t 3");
  CHECK(r.status == 0);
  CHECK(std::abs(std::stod(r.out) - 1.0) < 1e-12);
  CHECK(run("charfn --alpha 0,0 --t 3").status == 2);
  CHECK(run("charfn --alpha 40,0,0 --t 2").status == 1);

  const auto coeffs = read_csv(run("coeffs --m 3 --max-n 5").out);
  REQUIRE(coeffs.size() == 1 + 1 + 1 + 2 + 2 + 3);
  CHECK(coeffs.back() == std::vector<std::string>{"5", "2", "4", "0", "1/5", "0.20000000000000001"});
  CHECK(run("coeffs --m 2").status == 2);
  CHECK(run("coeffs --symbolic --max-n 6").status == 0);
}

TEST_CASE("config file and --out") {
  const auto cfg = temp_file("config.json");
  std::ofstream(cfg) << R"({"index": [2, 0, 0], "c": 2, "t-grid": "0:1:0.5"})";
  const auto from_file = read_csv(run("moment --config " + cfg.string()).out);
  REQUIRE(from_file.size() == 4);
  CHECK(std::stod(from_file[3][1]) == mu_1marginal(validate_params(3, 2.0, 1.0), 1.0));

  // flags win over the file
  const auto overridden = read_csv(run("moment --config " + cfg.string() + " --c 1").out);
  CHECK(std::stod(overridden[3][1]) == mu_1marginal(validate_params(3, 1.0, 1.0), 1.0));

  const auto bad = temp_file("bad.json");
  std::ofstream(bad) << R"({"index": "2,0,0", "speed": 2})";
  CHECK(run("moment --config " + bad.string()).status == 2);
  std::ofstream(bad) << "not json";
  CHECK(run("moment --config " + bad.string()).status == 2);
  CHECK(run("moment --config /nonexistent/file.json --index 2,0,0").status == 2);

  const auto out = temp_file("out.csv");
  const auto direct = run("kac");
  CHECK(run("kac --out " + out.string()).out.empty());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == direct.out);

  std::filesystem::remove(cfg);
  std::filesystem::remove(bad);
  std::filesystem::remove(out);
}

TEST_CASE("help and unknown subcommands") {
  CHECK(run("--help").status == 0);
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
}
