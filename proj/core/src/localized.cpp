#include "proca/localized.hpp"

#include <fmt/format.h>

namespace proca {

namespace {

//! Closed-form building blocks at w = M z (unit mass and coupling).
struct ClosedBlocks {
  double A, E, Gp, Gm, Gminus, Cp, Cm;
};

ClosedBlocks closed_blocks(double w) {
  const double g14 = gamma_fn(0.25);
  const double g34 = gamma_fn(0.75);
  const double sqpi = std::sqrt(kPi);
  const double c1 = sqpi * std::pow(2.0, 0.25) / g14;
  const double c2 = std::pow(2.0, 0.25) * g14 / (4.0 * sqpi);
  ClosedBlocks b;
  b.A = c1 * std::pow(w, -0.25) * bessel_k(1.25, w);
  b.Gp = c1 * std::pow(w, -0.25) * bessel_k(0.25, w);
  b.Gm = -c2 * std::pow(w, -0.75) * bessel_k(0.75, w);
  b.E = -c2 * std::pow(w, -0.75) * bessel_k(1.75, w);
  // Gamma(-3/4) = -(4/3) Gamma(1/4).
  const double gm34 = -(4.0 / 3.0) * g14;
  b.Gminus = (sqpi / gm34) * std::pow(0.5 * w, -1.25) * bessel_k(1.25, w);
  const double q = 0.25 * w * w;
  b.Cp = c1 * (g14 * std::pow(2.0, 0.25) * std::sqrt(w) *
                   hyp1f2(0.25, 0.75, 1.25, q) -
               std::pow(2.0, 0.75) * g34 * w * hyp1f2(0.5, 1.25, 1.5, q));
  b.Cm = c2 * g34 * std::pow(2.0, 0.75) / std::sqrt(w) *
             hyp1f2(-0.25, 0.25, 0.75, q) +
         (2.0 / 3.0) * c2 * g14 * std::pow(2.0, -0.75) * w *
             hyp1f2(0.5, 1.5, 1.75, q);
  return b;
}

//! Unit-scale closed forms Ihat_j(w).
std::array<double, 3> closed_unit(double w) {
  const ClosedBlocks b = closed_blocks(w);
  const double pref = 1.0 / (2.0 * kPi * kPi);
  const double i1 = pref * (b.A / (w * w) - (b.Gminus - b.Gp) / w);
  const double i2 = pref * (b.A / w + (b.Cm - b.Cp) / (w * w * w) -
                            (b.Gm - b.Gp) / (w * w));
  const double i3 = pref * ((b.E - b.A) / w -
                            3.0 * (b.Cm - b.Cp) / (w * w * w) +
                            3.0 * (b.Gm - b.Gp) / (w * w));
  return {i1, i2, i3};
}

}  // namespace

LocalizedIntegrals localized_integrals_quadrature(const PhysicsConfig& cfg,
                                                  double z, int eps, double dt,
                                                  const QuadratureSpec& spec) {
  cfg.validate();
  chirality_slot(eps);
  if (!(z > 0.0))
    throw std::domain_error("localized_integrals_quadrature: z must be > 0");
  const double M = cfg.mass, kap = cfg.kappa;
  QuadratureSpec s = spec;
  s.mass = M;

  const auto W1 = [&](double k) -> complexd {
    const double om = std::sqrt(k * k + M * M);
    return std::exp(-kI * complexd(eps) * dt * om) / std::sqrt(om);
  };
  const auto W2 = [&](double k) -> double {
    const double kz = k * z;
    return std::sin(kz) / (kz * z * z) - std::cos(kz) / (z * z);
  };

  LocalizedIntegrals out;
  out.I1 = (z / (2.0 * kPi * kPi * std::sqrt(M * kap))) *
           regulated_radial_integral(
               [&](double k) { return k * k * W1(k) * W2(k); }, s)
               .value;
  const double pref23 = std::sqrt(M / kap) / (2.0 * kPi * kPi);
  out.I2 = pref23 *
           regulated_radial_integral(
               [&](double k) {
                 const double om = std::sqrt(k * k + M * M);
                 return W1(k) * (k * std::sin(k * z) / z +
                                 W2(k) * (om / M - 1.0));
               },
               s)
               .value;
  out.I3 = pref23 *
           regulated_radial_integral(
               [&](double k) {
                 const double om = std::sqrt(k * k + M * M);
                 return W1(k) * (k * std::sin(k * z) / z - 3.0 * W2(k)) *
                        (om / M - 1.0);
               },
               s)
               .value;
  return out;
}

LocalizedIntegrals localized_integrals_closed(const PhysicsConfig& cfg,
                                              double z) {
  cfg.validate();
  if (!(z > 0.0))
    throw std::domain_error("localized_integrals_closed: z must be > 0");
  const double scale = std::pow(cfg.mass, 3) / std::sqrt(cfg.kappa);
  const auto unit = closed_unit(cfg.mass * z);
  LocalizedIntegrals out;
  out.I1 = scale * unit[0];
  out.I2 = scale * unit[1];
  out.I3 = scale * unit[2];
  return out;
}

FourVec localized_field_value(const PhysicsConfig& cfg, int eps, int s,
                              const Vec3& y, const Vec3& x, double dt,
                              LocalizedMethod method,
                              const QuadratureSpec* spec) {
  helicity_slot(s);  // s uses the same label set {+1,-1,0}
  const Vec3 d = x - y;
  const double z = d.norm();
  if (!(z > 0.0))
    throw std::domain_error(
        "localized_field_value: the profile is singular at x = y");
  LocalizedIntegrals I;
  if (method == LocalizedMethod::Closed) {
    if (dt != 0.0)
      throw std::invalid_argument(
          "localized_field_value: closed form requires dt = 0");
    I = localized_integrals_closed(cfg, z);
  } else {
    const QuadratureSpec def = QuadratureSpec::fine(cfg.mass);
    I = localized_integrals_quadrature(cfg, z, eps, dt,
                                       spec != nullptr ? *spec : def);
  }
  const Vec3 n = d / z;
  // Map the spin label to its Cartesian slot: (+1,-1,0) -> (0,1,2).
  const int is = helicity_slot(s);
  FourVec out;
  out.t = kI * complexd(eps) * n[is] * I.I1;
  for (int i = 0; i < 3; ++i)
    out.r(i) = (i == is ? I.I2 : complexd{}) + n[i] * n[is] * I.I3;
  return out;
}

std::vector<LocalizedScanRow> localized_scan(const PhysicsConfig& cfg, int eps,
                                             double mz_min, double mz_max,
                                             int points,
                                             const QuadratureSpec& spec) {
  if (points < 2 || !(mz_min > 0.0) || !(mz_max > mz_min))
    throw std::invalid_argument("localized_scan: bad grid");
  std::vector<LocalizedScanRow> rows;
  for (int i = 0; i < points; ++i) {
    const double mz = mz_min + (mz_max - mz_min) * i / (points - 1);
    const double z = mz / cfg.mass;
    LocalizedScanRow row;
    row.mz = mz;
    const LocalizedIntegrals c = localized_integrals_closed(cfg, z);
    row.i1_closed = c.I1.real();
    row.i2_closed = c.I2.real();
    row.i3_closed = c.I3.real();
    const LocalizedIntegrals q =
        localized_integrals_quadrature(cfg, z, eps, 0.0, spec);
    row.i1_quad = q.I1;
    row.i2_quad = q.I2;
    row.i3_quad = q.I3;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace proca
