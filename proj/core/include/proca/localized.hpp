//! \file localized.hpp
//! \brief Localized (delta-normalized) states and their closed-form profiles.
//!
//! The spatial profile of a localized state displaced by z = |x - y| is built
//! from three radial integrals (unit direction n = (x - y)/z, s in {+1,-1,0}
//! labelling the Cartesian spin component):
//!   A^0      = i eps n_s I1,
//!   vecA_i   = I2 delta_{is} + n_i n_s I3,
//! with
//!   I1 = z/(2 pi^2 sqrt(M kappa)) int k^2 W1 W2 dk,
//!   I2 = sqrt(M/kappa)/(2 pi^2) int W1 { k sin(kz)/z + W2 (omega/M - 1) } dk,
//!   I3 = sqrt(M/kappa)/(2 pi^2) int W1 { k sin(kz)/z - 3 W2 }(omega/M - 1) dk,
//!   W1 = e^{-i eps dt omega} / sqrt(omega),
//!   W2 = sin(kz)/(k z^3) - cos(kz)/z^2.
//! The integrals are Abel-summable; the regulated quadrature evaluates them
//! for any dt, and at dt = 0 closed forms in K_{1/4..7/4} and 1F2 exist.
//! They scale as I_j = (M^3/sqrt(kappa)) Ihat_j(Mz).

#pragma once

#include "proca/fields.hpp"
#include "proca/specfun.hpp"

namespace proca {

//! The three radial integrals (complex to cover dt != 0).
struct LocalizedIntegrals {
  complexd I1{}, I2{}, I3{};
};

//! Regulated-quadrature evaluation at displacement z > 0 and time offset dt.
LocalizedIntegrals localized_integrals_quadrature(const PhysicsConfig& cfg,
                                                  double z, int eps, double dt,
                                                  const QuadratureSpec& spec);

//! Closed-form evaluation (dt = 0; real). Requires z > 0.
LocalizedIntegrals localized_integrals_closed(const PhysicsConfig& cfg,
                                              double z);

//! Independent of chirality and of the spin label at dt = 0.
enum class LocalizedMethod { Closed, Quadrature };

//! Four-potential value of the localized state (eps, s) centred at y,
//! evaluated at x, with time offset dt = x0 - x0_ref. The Closed method
//! requires dt = 0.
FourVec localized_field_value(const PhysicsConfig& cfg, int eps, int s,
                              const Vec3& y, const Vec3& x, double dt,
                              LocalizedMethod method,
                              const QuadratureSpec* spec = nullptr);

//! One row of a localized-profile scan.
struct LocalizedScanRow {
  double mz = 0.0;
  double i1_closed = 0.0, i2_closed = 0.0, i3_closed = 0.0;
  complexd i1_quad{}, i2_quad{}, i3_quad{};
};

//! Scan Mz over [mz_min, mz_max] with `points` samples (inclusive endpoints),
//! evaluating both routes.
std::vector<LocalizedScanRow> localized_scan(const PhysicsConfig& cfg, int eps,
                                             double mz_min, double mz_max,
                                             int points,
                                             const QuadratureSpec& spec);

}  // namespace proca
