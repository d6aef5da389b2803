//! \file field_io.cpp
//! \brief Text serialization of fields, run configs and CSV tables.

#include "proca/field_io.hpp"

#include <fmt/format.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace proca {

namespace {

constexpr const char* kFieldMagic = "proca-field-v1";

[[noreturn]] void fail(const std::string& origin, std::size_t line,
                       const std::string& what) {
  throw std::runtime_error(fmt::format("{}:{}: {}", origin, line, what));
}

//! Chirality/helicity key fragments in canonical slot order.
const char* kChirName[2] = {"plus", "minus"};
const char* kHelName[3] = {"p1", "m1", "0"};

double parse_double(const std::string& s, const std::string& origin,
                    std::size_t line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) fail(origin, line, "trailing characters in number");
    return v;
  } catch (const std::invalid_argument&) {
    fail(origin, line, fmt::format("not a number: '{}'", s));
  } catch (const std::out_of_range&) {
    fail(origin, line, fmt::format("number out of range: '{}'", s));
  }
}

}  // namespace

std::string format_g17(double x) { return fmt::format("{:.17g}", x); }

//==============================================================================
// Field files
//==============================================================================

void write_field_file(const std::string& path, const DiscreteModeField& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << kFieldMagic << "\n";
  out << "mass " << format_g17(f.cfg.mass) << "\n";
  out << "gamma " << format_g17(f.cfg.gamma) << "\n";
  out << "kappa " << format_g17(f.cfg.kappa) << "\n";
  out << "normalization "
      << (f.norm == Normalization::Unit ? "unit" : "relativistic") << "\n";
  out << "weights";
  for (int eps : kChiralities)
    for (int h : kHelicities) {
      const complexd a = f.norm_params.al(eps, h);
      out << " " << format_g17(a.real()) << " " << format_g17(a.imag());
    }
  out << "\n";
  out << "modes " << f.modes.size() << "\n";
  for (const auto& m : f.modes) {
    out << format_g17(m.k.x()) << " " << format_g17(m.k.y()) << " "
        << format_g17(m.k.z());
    for (const auto& c : m.c)
      out << " " << format_g17(c.real()) << " " << format_g17(c.imag());
    out << "\n";
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

DiscreteModeField read_field_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next_line() || line != kFieldMagic)
    fail(path, lineno, fmt::format("expected magic line '{}'", kFieldMagic));

  DiscreteModeField f;
  auto read_keyed = [&](const char* key) -> std::string {
    if (!next_line()) fail(path, lineno, fmt::format("missing '{}' line", key));
    std::istringstream iss(line);
    std::string k, rest;
    iss >> k;
    if (k != key)
      fail(path, lineno, fmt::format("expected key '{}', got '{}'", key, k));
    std::getline(iss, rest);
    const auto start = rest.find_first_not_of(" \t");
    return start == std::string::npos ? std::string() : rest.substr(start);
  };

  f.cfg.mass = parse_double(read_keyed("mass"), path, lineno);
  f.cfg.gamma = parse_double(read_keyed("gamma"), path, lineno);
  f.cfg.kappa = parse_double(read_keyed("kappa"), path, lineno);
  const std::string norm = read_keyed("normalization");
  if (norm == "unit") {
    f.norm = Normalization::Unit;
  } else if (norm == "relativistic") {
    f.norm = Normalization::Relativistic;
  } else {
    fail(path, lineno, "normalization must be 'unit' or 'relativistic'");
  }
  {
    std::istringstream iss(read_keyed("weights"));
    std::string tok;
    std::array<double, 12> w{};
    for (auto& v : w) {
      if (!(iss >> tok)) fail(path, lineno, "expected 12 weight numbers");
      v = parse_double(tok, path, lineno);
    }
    int idx = 0;
    for (int eps : kChiralities)
      for (int h : kHelicities) {
        f.norm_params.al(eps, h) = complexd(w[2 * idx], w[2 * idx + 1]);
        ++idx;
      }
  }
  const std::size_t count = [&] {
    const std::string v = read_keyed("modes");
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      fail(path, lineno, fmt::format("bad mode count '{}'", v));
    }
  }();

  f.modes.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    if (!next_line())
      fail(path, lineno, fmt::format("expected {} mode records, got {}",
                                     count, j));
    std::istringstream iss(line);
    std::array<double, 15> v{};
    std::string tok;
    for (auto& x : v) {
      if (!(iss >> tok))
        fail(path, lineno, "mode record needs 15 numbers (k and 6 re/im)");
      x = parse_double(tok, path, lineno);
    }
    if (iss >> tok) fail(path, lineno, "trailing data in mode record");
    Mode m;
    m.k = Vec3(v[0], v[1], v[2]);
    for (int c = 0; c < 6; ++c)
      m.c[c] = complexd(v[3 + 2 * c], v[4 + 2 * c]);
    f.modes.push_back(m);
  }
  if (next_line()) fail(path, lineno, "trailing data after mode records");
  try {
    f.norm_params.validate();
    f.validate();
  } catch (const std::exception& e) {
    fail(path, lineno, fmt::format("invalid field data: {}", e.what()));
  }
  return f;
}

//==============================================================================
// Run configuration
//==============================================================================

RunConfig parse_config(const std::string& text, const std::string& origin) {
  RunConfig rc;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(origin, lineno, "expected key=value");
    auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = strip(line.substr(0, eq));
    const std::string val = strip(line.substr(eq + 1));
    if (key.empty() || val.empty())
      fail(origin, lineno, "empty key or value");

    if (key == "M") {
      rc.cfg.mass = parse_double(val, origin, lineno);
    } else if (key == "gamma") {
      rc.cfg.gamma = parse_double(val, origin, lineno);
    } else if (key == "kappa") {
      rc.cfg.kappa = parse_double(val, origin, lineno);
    } else if (key == "lattice_n") {
      rc.lattice_n = static_cast<int>(parse_double(val, origin, lineno));
    } else if (key == "seed") {
      try {
        rc.seed = std::stoull(val);
      } catch (const std::exception&) {
        fail(origin, lineno, fmt::format("bad seed '{}'", val));
      }
    } else if (key.rfind("alpha_", 0) == 0) {
      int eps = 0, h = 2;
      bool found = false;
      for (int ce = 0; ce < 2 && !found; ++ce)
        for (int ch = 0; ch < 3 && !found; ++ch)
          if (key == fmt::format("alpha_{}_{}", kChirName[ce], kHelName[ch])) {
            eps = ce == 0 ? +1 : -1;
            h = ch == 0 ? +1 : (ch == 1 ? -1 : 0);
            found = true;
          }
      if (!found) fail(origin, lineno, fmt::format("unknown key '{}'", key));
      const auto comma = val.find(',');
      if (comma == std::string::npos)
        fail(origin, lineno, "alpha value must be 're,im'");
      const double re = parse_double(strip(val.substr(0, comma)), origin,
                                     lineno);
      const double im = parse_double(strip(val.substr(comma + 1)), origin,
                                     lineno);
      rc.params.al(eps, h) = complexd(re, im);
    } else {
      fail(origin, lineno, fmt::format("unknown key '{}'", key));
    }
  }
  if (!(rc.cfg.mass > 0.0) || !(rc.cfg.gamma > 0.0) || !(rc.cfg.kappa > 0.0))
    throw std::runtime_error(origin + ": M, gamma, kappa must be positive");
  if (rc.lattice_n < 2 || rc.lattice_n % 2 != 0)
    throw std::runtime_error(origin + ": lattice_n must be even and >= 2");
  rc.params.validate();
  return rc;
}

RunConfig read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

void write_config(const std::string& path, const RunConfig& rc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "M=" << format_g17(rc.cfg.mass) << "\n";
  out << "gamma=" << format_g17(rc.cfg.gamma) << "\n";
  out << "kappa=" << format_g17(rc.cfg.kappa) << "\n";
  int ce = 0;
  for (int eps : kChiralities) {
    int ch = 0;
    for (int h : kHelicities) {
      const complexd a = rc.params.al(eps, h);
      out << fmt::format("alpha_{}_{}={},{}\n", kChirName[ce], kHelName[ch],
                         format_g17(a.real()), format_g17(a.imag()));
      ++ch;
    }
    ++ce;
  }
  out << "lattice_n=" << rc.lattice_n << "\n";
  out << "seed=" << rc.seed << "\n";
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

//==============================================================================
// CSV
//==============================================================================

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : path_(path), out_(path), columns_(header.size()) {
  if (!out_) throw std::runtime_error("cannot open for writing: " + path);
  for (std::size_t i = 0; i < header.size(); ++i)
    out_ << (i ? "," : "") << header[i];
  out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_)
    throw std::invalid_argument("CSV row width mismatch");
  for (std::size_t i = 0; i < values.size(); ++i)
    out_ << (i ? "," : "") << format_g17(values[i]);
  out_ << "\n";
}

void CsvWriter::close() {
  out_.flush();
  out_.close();
  if (out_.fail()) throw std::runtime_error("write failed: " + path_);
}

}  // namespace proca
