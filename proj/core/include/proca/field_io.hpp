//! \file field_io.hpp
//! \brief Text serialization: field files, flat key=value run configs, CSV.
//!
//! All numeric output uses 17 significant digits with '.' decimal separator,
//! which round-trips IEEE doubles bit-exactly.

#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "proca/fields.hpp"

namespace proca {

//==============================================================================
// Formatting
//==============================================================================

//! Shortest 17-significant-digit representation (round-trip exact).
std::string format_g17(double x);

//==============================================================================
// Field files
//==============================================================================

//! Write a mode expansion: header (mass, gamma, kappa, normalization
//! convention and its weights), then one record per mode with kx ky kz and
//! the six coefficients as re/im pairs in the canonical slot order
//! (+,+1) (+,-1) (+,0) (-,+1) (-,-1) (-,0).
void write_field_file(const std::string& path, const DiscreteModeField& f);

//! Inverse of write_field_file; throws std::runtime_error with the path and
//! line number on malformed input.
DiscreteModeField read_field_file(const std::string& path);

//==============================================================================
// Run configuration
//==============================================================================

//! \brief Flat key=value run configuration.
//!
//! Keys: M, gamma, kappa, lattice_n, seed, and the six metric weights
//! alpha_<chirality>_<helicity> (chirality plus|minus, helicity p1|m1|0) as
//! "re,im" pairs. Missing keys keep their defaults; '#' starts a comment.
struct RunConfig {
  PhysicsConfig cfg{1.0, 1.0, 1.0};
  MetricParams params = MetricParams::identity();
  int lattice_n = 32;
  std::uint64_t seed = 20260823ULL;
};

RunConfig parse_config(const std::string& text, const std::string& origin);
RunConfig read_config(const std::string& path);
void write_config(const std::string& path, const RunConfig& rc);

//==============================================================================
// CSV
//==============================================================================

//! \brief Comma-separated writer: one header row, then numeric rows at 17
//!        significant digits.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<double>& values);
  //! Flushes and closes; throws on I/O failure.
  void close();

 private:
  std::string path_;
  std::ofstream out_;
  std::size_t columns_ = 0;
};

}  // namespace proca
