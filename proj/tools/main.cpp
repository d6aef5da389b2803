//! \file main.cpp
//! \brief Command-line surface: verification suites, localized-state profile
//!        data, wavepacket evolution, inner products of stored fields.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage / parse / I/O error.
//! All stdout output is byte-deterministic for a given seed and config;
//! wall-clock timings go to stderr.

#include <fmt/format.h>

#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "proca/field_io.hpp"
#include "proca/fields.hpp"
#include "proca/inner_products.hpp"
#include "proca/localized.hpp"
#include "proca/relativity.hpp"
#include "proca/verify.hpp"

namespace {

using namespace proca;

//==============================================================================
// verify
//==============================================================================

int run_verify(const std::string& config_path,
               const std::vector<std::string>& suites,
               const std::string& field_path) {
  RunConfig rc;
  if (!config_path.empty()) rc = read_config(config_path);

  if (!field_path.empty()) {
    const DiscreteModeField f = read_field_file(field_path);
    fmt::print("field file {}: {} modes, valid\n", field_path,
               f.modes.size());
  }

  const std::vector<SuiteResult> results = run_suites(rc, suites);
  bool all_pass = true;
  for (const auto& s : results) {
    fmt::print("[suite {}]\n", s.name);
    for (const auto& c : s.checks) {
      if (c.name == "runtime_seconds") {
        // Timing is machine-dependent; keep stdout byte-deterministic.
        fmt::print(stderr, "  [time] {}: {:.3f} s (budget {:.0f} s) {}\n",
                   s.name, c.measured, c.tolerance,
                   c.pass ? "PASS" : "FAIL");
      } else {
        fmt::print("  {} {}  measured {}  {} {}\n", c.pass ? "PASS" : "FAIL",
                   c.name, format_g17(c.measured),
                   c.lower_bound ? "bound" : "tol", format_g17(c.tolerance));
      }
      all_pass = all_pass && c.pass;
    }
    fmt::print("  suite {}: {}\n", s.name, s.pass() ? "PASS" : "FAIL");
  }
  fmt::print("overall: {}\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}

//==============================================================================
// localized
//==============================================================================

int run_localized(int epsilon, int spin, double mz_min, double mz_max,
                  int points, const std::string& out) {
  (void)spin;  // the radial integrals are independent of the spin label
  const PhysicsConfig cfg{1.0, 1.0, 1.0};
  QuadratureSpec spec;
  spec.mass = cfg.mass;
  const auto rows =
      localized_scan(cfg, epsilon, mz_min, mz_max, points, spec);
  CsvWriter csv(out, {"Mz", "I1_closed", "I2_closed", "I3_closed", "I1_quad",
                      "I2_quad", "I3_quad"});
  for (const auto& r : rows)
    csv.row({r.mz, r.i1_closed, r.i2_closed, r.i3_closed, r.i1_quad.real(),
             r.i2_quad.real(), r.i3_quad.real()});
  csv.close();
  fmt::print("wrote {} rows to {}\n", rows.size(), out);
  return 0;
}

//==============================================================================
// evolve
//==============================================================================

int run_evolve(const std::string& field_path, int steps, double dt,
               int density_grid, const std::string& out_prefix) {
  DiscreteModeField f = read_field_file(field_path);
  const double half_width = 10.0 / f.cfg.mass;

  const auto snapshot = [&](int step, double x0) {
    if (density_grid <= 0) return;
    const std::string path = fmt::format("{}_step{}.csv", out_prefix, step);
    CsvWriter csv(path, {"x", "y", "z", "rho"});
    const int n = density_grid;
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < n; ++iz) {
          const auto coord = [&](int i) {
            return n == 1 ? 0.0 : -half_width + 2.0 * half_width * i / (n - 1);
          };
          const Vec3 x(coord(ix), coord(iy), coord(iz));
          csv.row({x.x(), x.y(), x.z(),
                   probability_density_general(f, x0, x, f.norm_params)});
        }
    csv.close();
  };

  for (int step = 0; step <= steps; ++step) {
    const double x0 = step * dt;
    const double total =
        inner_product_modesum(f, f, f.norm_params).real();
    fmt::print("step {} t={} total_probability={}\n", step, format_g17(x0),
               format_g17(total));
    snapshot(step, x0);
    if (step < steps) f = evolve(f, dt);
  }
  return 0;
}

//==============================================================================
// inner
//==============================================================================

int run_inner(const std::string& path_a, const std::string& path_b,
              const std::string& kind, double x0) {
  const DiscreteModeField A = read_field_file(path_a);
  const DiscreteModeField B = read_field_file(path_b);
  complexd v;
  if (kind == "sigma3") {
    v = inner_product(InnerProductKind::Sigma3, A, B, x0);
  } else if (kind == "canonical") {
    v = inner_product(InnerProductKind::Canonical, A, B, x0);
  } else if (kind == "general") {
    // Weights are taken from the first field's stored normalization.
    v = inner_product(InnerProductKind::General, A, B, x0, A.norm_params);
  } else if (kind == "modesum") {
    v = inner_product_modesum(A, B, A.norm_params);
  } else {
    fmt::print(stderr, "error: unknown inner-product kind '{}'\n", kind);
    return 2;
  }
  fmt::print("{} {} {}\n", kind, format_g17(v.real()), format_g17(v.imag()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "proca: pseudo-Hermitian quantum mechanics of the Proca field"};
  app.require_subcommand(1);

  // verify -------------------------------------------------------------------
  std::string config_path;
  std::vector<std::string> suites;
  std::string field_path;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the invariant verification suites");
  verify_cmd->add_option("config", config_path,
                         "Run configuration (flat key=value file)");
  verify_cmd
      ->add_option("--suite", suites,
                   "Restrict to the named suites (repeatable)")
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--field", field_path,
                         "Also load and validate a stored field file");

  // localized ----------------------------------------------------------------
  int epsilon = +1;
  int spin = 0;
  double mz_min = 0.2, mz_max = 5.0;
  int points = 100;
  std::string out = "localized.csv";
  CLI::App* localized_cmd = app.add_subcommand(
      "localized", "Emit the localized-state radial profile I1, I2, I3");
  localized_cmd->add_option("--epsilon", epsilon, "Chirality (+1 or -1)")
      ->check(CLI::IsMember({1, -1}));
  localized_cmd->add_option("--spin", spin, "Spin label (+1, -1 or 0)")
      ->check(CLI::IsMember({1, -1, 0}));
  localized_cmd->add_option("--mz-min", mz_min, "Smallest Mz (must be > 0)");
  localized_cmd->add_option("--mz-max", mz_max, "Largest Mz");
  localized_cmd->add_option("--points", points, "Number of samples")
      ->check(CLI::PositiveNumber);
  localized_cmd->add_option("--out", out, "Output CSV path");

  // evolve -------------------------------------------------------------------
  std::string evolve_field;
  int steps = 10;
  double dt = 0.05;
  int density_grid = 0;
  std::string out_prefix = "evolve";
  CLI::App* evolve_cmd = app.add_subcommand(
      "evolve", "Evolve a stored field; print per-step total probability");
  evolve_cmd->add_option("field", evolve_field, "Stored field file")
      ->required();
  evolve_cmd->add_option("--steps", steps, "Number of time steps")
      ->check(CLI::NonNegativeNumber);
  evolve_cmd->add_option("--dt", dt, "Time step");
  evolve_cmd->add_option("--density-grid", density_grid,
                         "Write rho snapshots on an n^3 grid (0: none)");
  evolve_cmd->add_option("--out-prefix", out_prefix,
                         "Snapshot file prefix");

  // inner --------------------------------------------------------------------
  std::string inner_a, inner_b;
  std::string kind = "canonical";
  double x0 = 0.0;
  CLI::App* inner_cmd = app.add_subcommand(
      "inner", "Inner product of two stored fields");
  inner_cmd->add_option("fieldA", inner_a, "First stored field")->required();
  inner_cmd->add_option("fieldB", inner_b, "Second stored field")->required();
  inner_cmd->add_option("--kind", kind,
                        "sigma3 | canonical | general | modesum");
  inner_cmd->add_option("--x0", x0, "Evaluation time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify_cmd) return run_verify(config_path, suites, field_path);
    if (*localized_cmd) {
      if (!(mz_min > 0.0)) {
        fmt::print(stderr, "error: --mz-min must be > 0 (got {})\n", mz_min);
        return 2;
      }
      if (mz_max < mz_min) {
        fmt::print(stderr, "error: --mz-max must be >= --mz-min\n");
        return 2;
      }
      return run_localized(epsilon, spin, mz_min, mz_max, points, out);
    }
    if (*evolve_cmd)
      return run_evolve(evolve_field, steps, dt, density_grid, out_prefix);
    if (*inner_cmd) return run_inner(inner_a, inner_b, kind, x0);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 2;
  }
  return 2;
}
