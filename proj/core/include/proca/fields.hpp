//! \file fields.hpp
//! \brief Discrete mode expansions of Proca solutions and their initial data.
//!
//! A solution is stored as a finite set of plane-wave modes; each mode carries
//! six complex coefficients in the canonical (chirality, helicity) order. The
//! four-potential is
//!   A^mu(x0, x) = sum_j sum_{eps,h} c_{eps,h}(k_j) N_{eps,h}
//!                 u^mu_{eps,h}(k_j) e^{-i eps omega_j x0} phi_{k_j}(x),
//! with phi_k(x) = (2 pi)^{-3/2} e^{i k.x} and the Kronecker convention
//! integral phi_k* phi_k' = delta_{k,k'} for mode sums.

#pragma once

#include <vector>

#include "proca/mode_algebra.hpp"

namespace proca {

//! Normalization convention for the mode coefficients.
enum class Normalization {
  Unit,          //!< N_{eps,h} = 1
  Relativistic,  //!< |N_{eps,h}|^2 = 2M / (kappa a_{eps,h})
};

//! One plane-wave mode: momentum plus the six coefficients.
struct Mode {
  Vec3 k = Vec3::Zero();
  std::array<complexd, 6> c{};
};

//==============================================================================
// DiscreteModeField
//==============================================================================

//! \brief Finite mode expansion of a Proca solution.
struct DiscreteModeField {
  PhysicsConfig cfg;
  Normalization norm = Normalization::Unit;
  //! Weights entering the Relativistic normalization (identity otherwise).
  MetricParams norm_params = MetricParams::identity();
  std::vector<Mode> modes;

  //! Normalization constant N_{eps,h} (k-independent, real positive).
  double N(int eps, int h) const {
    if (norm == Normalization::Unit) return 1.0;
    return std::sqrt(2.0 * cfg.mass /
                     (cfg.kappa * norm_params.a(eps, h)));
  }

  complexd coeff(std::size_t j, int eps, int h) const {
    return modes[j].c[mode_slot(eps, h)];
  }
  complexd& coeff(std::size_t j, int eps, int h) {
    return modes[j].c[mode_slot(eps, h)];
  }

  //! Throws if a momentum vanishes or two modes coincide (within tol).
  void validate(double tol = 1e-9) const;
};

//! Convenience: a field with a single excited coefficient.
DiscreteModeField single_mode_field(const PhysicsConfig& cfg, const Vec3& k,
                                    int eps, int h, complexd c,
                                    Normalization norm = Normalization::Unit);

//==============================================================================
// Evaluation and evolution
//==============================================================================

//! Four-potential A^mu(x0, x).
FourVec evaluate(const DiscreteModeField& f, double x0, const Vec3& x);

//! Time derivative dA^mu/dx0 at (x0, x).
FourVec evaluate_dt(const DiscreteModeField& f, double x0, const Vec3& x);

//! Electric field E = -Adot - grad A^0 at (x0, x).
FourVec evaluate_electric(const DiscreteModeField& f, double x0, const Vec3& x);

//! Exact evolution by dt (phases e^{-i eps omega dt} on the coefficients).
DiscreteModeField evolve(const DiscreteModeField& f, double dt);

//==============================================================================
// Per-mode spectral amplitudes
//==============================================================================

//! Spectral amplitude of one mode at a fixed time: the four-vector factor
//! multiplying phi_k(x), plus its time derivative and the electric-field
//! amplitude E = -Adot - i k A^0.
struct ModeAmplitude {
  Vec3 k = Vec3::Zero();
  double omega = 0.0;
  FourVec A;     //!< four-potential amplitude
  FourVec Adot;  //!< d/dx0 amplitude
  Vec3c E;       //!< electric-field amplitude (spatial)
  Vec3c Edot;    //!< its time derivative
};

//! All mode amplitudes of the field at time x0.
std::vector<ModeAmplitude> mode_amplitudes(const DiscreteModeField& f,
                                           double x0);

//! Spectral amplitude restricted to one chirality (A_eps and its derivative).
struct ChiralAmplitude {
  Vec3c A = Vec3c::Zero();     //!< spatial amplitude of the eps-part
  complexd A0{};               //!< time component of the eps-part
};
ChiralAmplitude chiral_amplitude(const DiscreteModeField& f, std::size_t j,
                                 int eps, double x0);

//==============================================================================
// Six-component representation
//==============================================================================

//! Per-mode six-component vector Psi = (A - i gamma E, A + i gamma E) at x0.
std::vector<Vec6> six_component(const DiscreteModeField& f, double x0);

//! Reconstruct mode coefficients from six-component per-mode data at time x0
//! (projection onto the bi-orthonormal left eigenvectors).
DiscreteModeField from_six_component(const PhysicsConfig& cfg,
                                     const std::vector<Vec3>& ks,
                                     const std::vector<Vec6>& psi, double x0,
                                     Normalization norm = Normalization::Unit,
                                     const MetricParams& norm_params =
                                         MetricParams::identity());

//==============================================================================
// Initial data
//==============================================================================

//! \brief Mode-expanded Cauchy data (A, Adot) at a reference time.
struct FieldInitialData {
  PhysicsConfig cfg;
  double x0 = 0.0;
  struct Entry {
    Vec3 k = Vec3::Zero();
    FourVec A;
    FourVec Adot;
  };
  std::vector<Entry> entries;
};

//! Snapshot the Cauchy data of a mode field at time x0.
FieldInitialData initial_data(const DiscreteModeField& f, double x0);

//! Evolve Cauchy data by dt with the cosine/sine propagator
//!   A -> cos(omega dt) A + sin(omega dt)/omega Adot,
//!   Adot -> -omega sin(omega dt) A + cos(omega dt) Adot.
FieldInitialData propagate(const FieldInitialData& d, double dt);

//! Max norm of the constraint residual  L[A] = Adot^0 + div A  over modes.
double constraint_residual(const FieldInitialData& d);

//! Project Cauchy data back onto the on-shell mode basis. Exact when the data
//! came from a Proca solution.
DiscreteModeField project_initial_data(const FieldInitialData& d,
                                       Normalization norm = Normalization::Unit,
                                       const MetricParams& norm_params =
                                           MetricParams::identity());

//==============================================================================
// Splits
//==============================================================================

//! Chirality components A_{+} and A_{-} (coefficients masked by eps).
DiscreteModeField chirality_component(const DiscreteModeField& f, int eps);

//! Helicity component A_h, h in {+1,-1,0}.
DiscreteModeField helicity_component(const DiscreteModeField& f, int h);

}  // namespace proca
