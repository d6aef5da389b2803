//! \file observables.hpp
//! \brief Position, momentum, spin, helicity and angular-momentum actions on
//!        Proca solutions, plus the velocity-operator identity.
//!
//! Momentum, helicity and spin act mode-wise and are provided directly on
//! DiscreteModeField. The position operator involves k-derivatives and is not
//! closed on finite mode sets; it is realized spectrally on a cubic momentum
//! lattice (GridField) through FFT duality, with two independent routes:
//!   WAVEFUNCTION  multiply the position wave function by x,
//!   COVARIANT     apply the closed-form position kernels to the potential.

#pragma once

#include <functional>

#include "proca/transforms.hpp"

namespace proca {

//==============================================================================
// Mode-wise operator actions
//==============================================================================

//! Momentum component i: coefficients c -> k_i c.
DiscreteModeField apply_momentum(const DiscreteModeField& f, int i);

//! Helicity: [hel A](x0) = (0, hel A(x0)), i.e. c_{eps,h} -> h c_{eps,h}.
DiscreteModeField apply_helicity(const DiscreteModeField& f);

//! Mean-spin component i. The result is the Proca solution with initial data
//!   S^0 = (1/(M omega)) (k x Adot)_i,   vec S = s~0^i A,
//! re-expanded exactly in the mode basis.
DiscreteModeField apply_spin(const DiscreteModeField& f, int i);

//! Position action requires a GridField; this overload always throws
//! RepresentationError (the operator is not closed on finite mode sets).
DiscreteModeField apply_position(const DiscreteModeField& f, int i);

//! Same restriction as apply_position.
DiscreteModeField apply_angular_momentum(const DiscreteModeField& f, int i);

//==============================================================================
// Momentum lattice
//==============================================================================

//! \brief Cubic half-offset momentum lattice (k = 0 excluded when the center
//!        k0 lies on a dual lattice point, e.g. k0 = 0) and its dual centered
//!        position lattice.
struct LatticeSpec {
  int n = 32;            //!< sites per axis
  double dk = 0.1;       //!< momentum spacing
  Vec3 k0 = Vec3::Zero();  //!< momentum-space center of the lattice

  std::size_t sites() const {
    return static_cast<std::size_t>(n) * n * n;
  }
  //! k_axis = k0[axis] + dk (idx - n/2 + 1/2), idx in [0, n).
  double k_axis(int axis, int idx) const {
    return k0[axis] + dk * (idx - 0.5 * n + 0.5);
  }
  Vec3 k_at(int ix, int iy, int iz) const {
    return Vec3(k_axis(0, ix), k_axis(1, iy), k_axis(2, iz));
  }
  //! Dual spacing dx = 2 pi / (n dk).
  double dx() const { return 2.0 * kPi / (n * dk); }
  //! x_axis = dx (idx - n/2).
  double x_axis(int idx) const { return dx() * (idx - n / 2); }
  std::size_t index(int ix, int iy, int iz) const {
    return (static_cast<std::size_t>(ix) * n + iy) * n + iz;
  }
  void validate() const;
};

//! \brief Position wave function sampled on the momentum lattice.
//!
//! f[chirality_slot(eps)][cartesian component][site]; the labels of the three
//! components follow the (s = +1, -1, 0) <-> (x, y, z) correspondence of the
//! wave-function representation.
struct GridField {
  PhysicsConfig cfg;
  LatticeSpec lat;
  MetricParams params = MetricParams::identity();
  double x0_ref = 0.0;
  std::array<std::array<std::vector<complexd>, 3>, 2> f;

  void allocate();
  void validate() const;
};

//! Gaussian packet of definite chirality and helicity:
//!   c(k) = exp(-|k - kbar|^2 / (4 sigma^2)) e^{-i k.xbar},
//! normalized to ((A,A)) = 1 on the lattice.
GridField gaussian_packet(const PhysicsConfig& cfg, const LatticeSpec& lat,
                          int eps, int h, const Vec3& kbar, double sigma,
                          const Vec3& xbar, double x0_ref = 0.0);

//! Norm square  sum |f|^2  (equals the inner product ((A,A))).
double grid_norm_sq(const GridField& g);

//! l2 overlap  sum f1* . f2  of two fields on the same lattice.
complexd grid_overlap(const GridField& a, const GridField& b);

//! Exact time evolution by dt (phases e^{-i eps omega dt} site-wise).
GridField grid_evolve(const GridField& g, double dt);

//! Chirality involution C: f_eps -> eps f_eps.
GridField grid_apply_charge(const GridField& g);

//! Flatten the lattice into a DiscreteModeField (sites with max coefficient
//! below cutoff are dropped).
DiscreteModeField grid_to_modes(const GridField& g, double cutoff = 0.0);

//==============================================================================
// Spectral transforms
//==============================================================================

//! \brief FFT-backed maps between the half-offset momentum lattice and its
//!        centered position lattice, and the spectral position multiply.
class LatticeTransform {
 public:
  explicit LatticeTransform(const LatticeSpec& lat);
  ~LatticeTransform();
  LatticeTransform(const LatticeTransform&) = delete;
  LatticeTransform& operator=(const LatticeTransform&) = delete;

  //! g(x_m) = sum_n ghat(k_n) e^{i k_n . x_m}, in place on the site array.
  void to_position(std::vector<complexd>& a) const;
  //! Inverse of to_position (includes the 1/n^3 normalization).
  void to_momentum(std::vector<complexd>& a) const;
  //! Spectral realization of multiplication by x_axis on the momentum side.
  void apply_x(std::vector<complexd>& a, int axis) const;

  const LatticeSpec& lattice() const { return lat_; }

 private:
  struct Impl;
  LatticeSpec lat_;
  Impl* impl_;
};

//==============================================================================
// Position action
//==============================================================================

enum class PositionMethod {
  WaveFunction,  //!< multiply the wave function by x spectrally
  Covariant,     //!< closed-form potential kernels + spectral x terms
};

//! Component i of the position action; both methods return the resulting
//! state in the wave-function representation. The Covariant route evaluates
//! the displayed kernels at the reference time of the grid (where the
//! explicit (x0 - x0_0) terms vanish) and supports only identity params.
GridField apply_position(const GridField& g, int i, PositionMethod method);

//! Expectation <x0> (component-wise, WaveFunction route).
Vec3 grid_position_expectation(const GridField& g);

//! Per-site four-vector data chi = (chi^0, vec chi) of the position action at
//! the grid reference time, from the covariant displays
//!   chi^0 = Y_i A^0 + (1/(M omega)) Adot_i,    vec chi = X_i A,
//! with the multiplication-by-x parts realized spectrally.
std::vector<FourVec> position_four_data(const GridField& g, int i);

//==============================================================================
// Helicity, spin and angular momentum on the lattice
//==============================================================================

//! Residual of the helicity two-path identity: coefficient route
//! (c -> h c through the full mode machinery) against the spectral curl route
//! (khat . S) f = i khat x f, as a max-norm ratio.
double helicity_two_path_residual(const GridField& g);

//! Spin component i on wave functions (the spin-1 matrix on the Cartesian
//! index).
GridField grid_apply_spin(const GridField& g, int i);

//! Total angular momentum M_i = (x0 x p0)_i + s0_i on wave functions.
GridField grid_apply_angular_momentum(const GridField& g, int i);

//! Orbital part L_i = M_i - s0_i.
GridField grid_apply_orbital(const GridField& g, int i);

//! Expectation of a grid-to-grid operator in the state g.
complexd grid_expectation(const GridField& g,
                          const std::function<GridField(const GridField&)>& op);

//==============================================================================
// Velocity identity
//==============================================================================

struct VelocityCheckResult {
  //! max_i || i[h, x0^i] f - (k_i / omega) C f || / || f ||, commutator via
  //! evolve conjugation, central difference in the step, Richardson step
  //! extrapolation.
  double operator_residual = 0.0;
  Vec3 mean_commutator = Vec3::Zero();  //!< <i[h, x0]> per component
  Vec3 mean_spectral = Vec3::Zero();    //!< sum |f|^2 eps k/omega (exact)
};

VelocityCheckResult velocity_check(const GridField& g, double delta = 0.02);

}  // namespace proca
