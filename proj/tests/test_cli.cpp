//! \file test_cli.cpp
//! \brief End-to-end checks of the command-line tool: exit codes, output
//!        determinism and file products.

#include <fmt/format.h>

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "proca/field_io.hpp"
#include "proca/inner_products.hpp"

using namespace proca;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("proca_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

//! Run the CLI with the given arguments, capturing stdout and stderr.
RunResult run_cli(const std::string& args) {
  const std::string out = temp_path("stdout.txt");
  const std::string err = temp_path("stderr.txt");
  const std::string cmd = std::string("\"") + PROCA_CLI_PATH + "\" " + args +
                          " > \"" + out + "\" 2> \"" + err + "\"";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

DiscreteModeField sample_field(unsigned seed) {
  DiscreteModeField f;
  f.cfg = PhysicsConfig{1.0, 1.0, 1.0};
  f.modes.resize(2);
  f.modes[0].k = Vec3(0.4, -0.2, 0.9);
  f.modes[1].k = Vec3(-1.1, 0.3, 0.5);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& m : f.modes)
    for (auto& c : m.c) c = complexd(u(rng), u(rng));
  return f;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (const char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("help and usage errors", "[cli]") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("verify --suite no_such_suite").exit_code == 2);
}

TEST_CASE("verify runs a suite and reports PASS", "[cli]") {
  const RunResult r = run_cli("verify --suite specfun");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[suite specfun]") != std::string::npos);
  CHECK(r.out.find("overall: PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  // The wall-clock line goes to stderr, keeping stdout deterministic.
  CHECK(r.err.find("[time]") != std::string::npos);
}

TEST_CASE("verify output is byte deterministic", "[cli]") {
  const RunResult a = run_cli("verify --suite specfun --suite gauge");
  const RunResult b = run_cli("verify --suite specfun --suite gauge");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("verify rejects a broken config", "[cli]") {
  const std::string cfg = temp_path("bad.cfg");
  {
    std::ofstream out(cfg);
    out << "bogus_key=3\n";
  }
  const RunResult r = run_cli("verify \"" + cfg + "\" --suite specfun");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("bogus_key") != std::string::npos);
  std::remove(cfg.c_str());
}

TEST_CASE("verify accepts a config and a stored field", "[cli]") {
  const std::string cfg = temp_path("good.cfg");
  {
    std::ofstream out(cfg);
    out << "M=1.0\ngamma=0.8\nseed=7\n";
  }
  const std::string field = temp_path("verify.field");
  write_field_file(field, sample_field(3));
  const RunResult r = run_cli("verify \"" + cfg + "\" --suite specfun --field \"" +
                              field + "\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("2 modes, valid") != std::string::npos);
  std::remove(cfg.c_str());
  std::remove(field.c_str());
}

TEST_CASE("verify rejects a corrupted field file", "[cli]") {
  const std::string field = temp_path("corrupt.field");
  {
    std::ofstream out(field);
    out << "not a field file\n";
  }
  const RunResult r = run_cli("verify --suite specfun --field \"" + field +
                              "\"");
  CHECK(r.exit_code == 2);
  std::remove(field.c_str());
}

TEST_CASE("localized writes the requested scan", "[cli]") {
  const std::string out = temp_path("scan.csv");
  const RunResult r = run_cli(
      "localized --mz-min 0.5 --mz-max 1.0 --points 3 --out \"" + out + "\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("wrote 3 rows") != std::string::npos);
  const std::string text = slurp(out);
  REQUIRE(count_lines(text) == 4);  // header + 3 rows
  std::istringstream lines(text);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header ==
        "Mz,I1_closed,I2_closed,I3_closed,I1_quad,I2_quad,I3_quad");
  REQUIRE(std::getline(lines, row));
  std::replace(row.begin(), row.end(), ',', ' ');
  std::istringstream vals(row);
  double mz = 0, i1c = 0, i2c = 0, i3c = 0, i1q = 0;
  vals >> mz >> i1c >> i2c >> i3c >> i1q;
  CHECK(mz == 0.5);
  CHECK(i1c == Catch::Approx(0.85605824464160537).epsilon(1e-12));
  CHECK(i3c == Catch::Approx(-2.9261796976615758).epsilon(1e-12));
  CHECK(i1q == Catch::Approx(i1c).margin(1e-3 * std::abs(i3c)));
  std::remove(out.c_str());
}

TEST_CASE("localized validates its range", "[cli]") {
  CHECK(run_cli("localized --mz-min 0 --points 3").exit_code == 2);
  CHECK(run_cli("localized --mz-min 1.0 --mz-max 0.5 --points 3").exit_code ==
        2);
  CHECK(run_cli("localized --points -4").exit_code == 2);
}

TEST_CASE("evolve conserves the total probability", "[cli]") {
  const std::string field = temp_path("evolve.field");
  write_field_file(field, sample_field(9));
  const std::string prefix = temp_path("snap");
  const RunResult r = run_cli("evolve \"" + field +
                              "\" --steps 3 --dt 0.25 --density-grid 2 "
                              "--out-prefix \"" +
                              prefix + "\"");
  CHECK(r.exit_code == 0);
  REQUIRE(count_lines(r.out) == 4);
  // The total is conserved to roundoff on every step.
  std::istringstream lines(r.out);
  std::string line;
  double first_total = 0.0;
  int step = 0;
  while (std::getline(lines, line)) {
    const auto pos = line.find("total_probability=");
    REQUIRE(pos != std::string::npos);
    CHECK(line.find(fmt::format("step {} ", step)) == 0);
    const double total = std::stod(line.substr(pos + 18));
    if (step == 0)
      first_total = total;
    else
      CHECK(total == Catch::Approx(first_total).epsilon(1e-14));
    ++step;
  }
  // Snapshots exist, with header + 8 grid rows each.
  for (int s = 0; s <= 3; ++s) {
    const std::string path = fmt::format("{}_step{}.csv", prefix, s);
    CHECK(count_lines(slurp(path)) == 9);
    std::remove(path.c_str());
  }
  // dt = 0 evolves nothing: consecutive snapshots are byte-identical.
  const RunResult r0 = run_cli("evolve \"" + field +
                               "\" --steps 1 --dt 0 --density-grid 2 "
                               "--out-prefix \"" +
                               prefix + "\"");
  CHECK(r0.exit_code == 0);
  CHECK(slurp(prefix + "_step0.csv") == slurp(prefix + "_step1.csv"));
  for (int s = 0; s <= 1; ++s)
    std::remove(fmt::format("{}_step{}.csv", prefix, s).c_str());
  std::remove(field.c_str());
}

TEST_CASE("inner matches the library value", "[cli]") {
  const std::string pa = temp_path("a.field");
  const std::string pb = temp_path("b.field");
  const DiscreteModeField A = sample_field(21);
  const DiscreteModeField B = sample_field(22);
  write_field_file(pa, A);
  write_field_file(pb, B);
  for (const std::string kind : {"sigma3", "canonical", "general", "modesum"}) {
    const RunResult r = run_cli("inner \"" + pa + "\" \"" + pb +
                                "\" --kind " + kind + " --x0 0.4");
    CHECK(r.exit_code == 0);
    std::istringstream iss(r.out);
    std::string name;
    double re = 0, im = 0;
    iss >> name >> re >> im;
    CHECK(name == kind);
    complexd expected;
    if (kind == "sigma3")
      expected = inner_product(InnerProductKind::Sigma3, A, B, 0.4);
    else if (kind == "canonical")
      expected = inner_product(InnerProductKind::Canonical, A, B, 0.4);
    else if (kind == "general")
      expected = inner_product(InnerProductKind::General, A, B, 0.4,
                               A.norm_params);
    else
      expected = inner_product_modesum(A, B, A.norm_params);
    CHECK(re == Catch::Approx(expected.real()).margin(1e-15));
    CHECK(im == Catch::Approx(expected.imag()).margin(1e-15));
  }
  CHECK(run_cli("inner \"" + pa + "\" \"" + pb + "\" --kind nonsense")
            .exit_code == 2);
  std::remove(pa.c_str());
  std::remove(pb.c_str());
}
