//! \file verify.hpp
//! \brief Executable acceptance suites: every structural identity of the
//!        library expressed as a measured residual against a pinned tolerance.

#pragma once

#include <string>
#include <vector>

#include "proca/field_io.hpp"

namespace proca {

//! One measured check. For upper-bound checks pass iff measured <= tolerance;
//! for lower-bound checks (positivity) pass iff measured > tolerance.
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool lower_bound = false;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  double wall_seconds = 0.0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

//! Suite names in execution order:
//! mode_algebra, gamma_independence, inner_products, lorentz, localized,
//! observables, gauge, specfun.
const std::vector<std::string>& suite_names();

//! Run one suite by name (throws std::invalid_argument on unknown name).
SuiteResult run_suite(const std::string& name, const RunConfig& rc);

//! Run the named suites (all when the filter is empty).
std::vector<SuiteResult> run_suites(const RunConfig& rc,
                                    const std::vector<std::string>& filter);

}  // namespace proca
