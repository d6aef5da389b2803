//! \file mode_algebra.hpp
//! \brief Per-momentum operator algebra of the pseudo-Hermitian Proca theory.
//!
//! Everything in this module is a closed-form matrix (or eigenvector) at a
//! single momentum k: the six-component Hamiltonian, the metric operators
//! eta_+ and their square roots, the bi-orthonormal eigensystem, the
//! five-parameter family of general metrics, the Foldy-type transform blocks,
//! and the Case-type position/spin operators.
//!
//! Block convention for six-component quantities: the first three entries are
//! the upper (chirality-mixing) block, i.e. Psi = (A - i gamma E, A + i gamma E)
//! per mode, and Sigma_3 = diag(I_3, -I_3).

#pragma once

#include "proca/types.hpp"

namespace proca {

//==============================================================================
// Spin-1 matrices and helicity structure
//==============================================================================

//! Spin-1 generator S_{i+1} (i in {0,1,2}); (S_i)_{jk} = -i eps_{ijk}.
const Mat3& spin_matrix(int i);

//! v . S for a real 3-vector v; satisfies (v.S) w = i v x w.
Mat3 vec_dot_spin(const Vec3& v);

//! Helicity matrix  (khat . S).
Mat3 helicity_matrix(const Vec3& k);

//! Component i of (k x S), i.e. eps_{ijk} k_j S_k.
Mat3 cross_spin_component(const Vec3& k, int i);

//! sigma (2x2) tensor identity/structure on the chirality block space times a
//! 3x3 matrix.
Mat6 kron_sigma(const Eigen::Matrix2cd& s, const Mat3& m);

Eigen::Matrix2cd sigma0();  //!< identity
Eigen::Matrix2cd sigma1();  //!< off-diagonal swap
Eigen::Matrix2cd sigma3();  //!< diag(1,-1)

//! Sigma_3 = sigma3 kron I_3 (the indefinite reference metric).
const Mat6& sigma3_66();

//==============================================================================
// Polarization four-vectors
//==============================================================================

//! \brief Real transverse triad and circular polarization four-vectors at
//!        momentum k for chirality eps.
//!
//! a1 is along zhat x khat (xhat if k is within 1e-8 of the z-axis), a2 =
//! khat x a1, and a3 = (|k|/M, (eps omega / M) khat). The circular set is
//! u_{+1} = (a1 + i a2)/sqrt(2), u_{-1} = (a1 - i a2)/sqrt(2), u_0 = a3.
//! It is orthonormal under the conjugated Minkowski product and complete on
//! the mass shell.
struct PolarizationSet {
  int eps = +1;
  Vec3 a1 = Vec3::Zero();
  Vec3 a2 = Vec3::Zero();
  FourVec a3;
  //! u[helicity_slot(h)]
  std::array<FourVec, 3> u;
};

PolarizationSet polarization_basis(const Vec3& k, int eps,
                                   const PhysicsConfig& cfg);

//==============================================================================
// Mode matrices
//==============================================================================

//! \brief All canonical per-momentum matrices and the bi-orthonormal
//!        eigensystem at momentum k.
struct ModeMatrixSet {
  Vec3 k = Vec3::Zero();
  double knorm = 0.0;   //!< |k|
  double omega = 0.0;   //!< sqrt(k^2 + M^2)
  double r = 0.0;       //!< sqrt(gamma omega)
  PhysicsConfig cfg;

  Mat3 hel;     //!< khat.S
  Mat3 hel2;    //!< (khat.S)^2 = I - khat khat^T
  Mat3 m2ks2;   //!< M^2 I + (k.S)^2   (the spatial wave operator)
  Mat3 H1, H2;  //!< sub-Hamiltonians

  Mat6 H;             //!< H = (1/2) [[H1, H2], [-H2, -H1]]
  Mat6 eta_plus;      //!< canonical positive metric at this momentum
  Mat6 eta_plus_inv;  //!< its inverse
  Mat6 rho;           //!< positive square root of eta_plus
  Mat6 rho_inv;       //!< its inverse
  Mat6 C;             //!< charge-like symmetry C = H / omega
  Mat6 P;             //!< parity-like symmetry P = Sigma_3

  //! Right eigenvectors: H Psi_{eps,h} = eps omega Psi_{eps,h};
  //! indices [chirality_slot(eps)][helicity_slot(h)].
  std::array<std::array<Vec6, 3>, 2> Psi;
  //! Left partners: H^dag Phi = eps omega Phi, <Psi_a, Phi_b> = delta_ab.
  std::array<std::array<Vec6, 3>, 2> Phi;

  const Vec6& psi(int eps, int h) const {
    return Psi[chirality_slot(eps)][helicity_slot(h)];
  }
  const Vec6& phi(int eps, int h) const {
    return Phi[chirality_slot(eps)][helicity_slot(h)];
  }
};

//! Build every canonical matrix at momentum k. Requires |k| > 0.
ModeMatrixSet mode_matrices(const Vec3& k, const PhysicsConfig& cfg);

//==============================================================================
// Five-parameter inner-product family
//==============================================================================

//! \brief Parameters alpha_{eps,h} of the general metric family; the physical
//!        weights are a_{eps,h} = |alpha_{eps,h}|^2.
//!
//! The overall phase and scale conventions: alpha defaults to 1 in every slot
//! (canonical product). Five independent ratios matter physically; the
//! redundant overall scale is kept for convenience.
struct MetricParams {
  std::array<complexd, 6> alpha{complexd{1.0, 0.0}, complexd{1.0, 0.0},
                                complexd{1.0, 0.0}, complexd{1.0, 0.0},
                                complexd{1.0, 0.0}, complexd{1.0, 0.0}};

  static MetricParams identity() { return {}; }

  complexd al(int eps, int h) const { return alpha[mode_slot(eps, h)]; }
  complexd& al(int eps, int h) { return alpha[mode_slot(eps, h)]; }

  //! Physical weight a_{eps,h} = |alpha_{eps,h}|^2.
  double a(int eps, int h) const { return std::norm(al(eps, h)); }

  bool is_identity(double tol = 1e-14) const {
    for (const auto& v : alpha)
      if (std::abs(v - complexd{1.0, 0.0}) > tol) return false;
    return true;
  }

  void validate() const {
    for (const auto& v : alpha)
      if (!(std::abs(v) > 0.0))
        throw std::invalid_argument("MetricParams: alphas must be nonzero");
  }

  //! Transverse-sector weight combinations
  //!   L^s_b = (1/4)[a_{+,1} + s a_{+,-1} + b a_{-,1} + s b a_{-,-1}],
  //! s, b in {+1,-1}.
  double L_trans(int s, int b) const {
    return 0.25 * (a(+1, +1) + s * a(+1, -1) + b * a(-1, +1) +
                   s * b * a(-1, -1));
  }
  //! Longitudinal combinations L^0_b = (1/2)[a_{+,0} + b a_{-,0}].
  double L_long(int b) const { return 0.5 * (a(+1, 0) + b * a(-1, 0)); }

  //! Amplitude combinations Z^eps_s = (alpha_{eps,1} + s alpha_{eps,-1})/2.
  complexd Z(int eps, int s) const {
    return 0.5 * (al(eps, +1) + complexd(s) * al(eps, -1));
  }
  //! F^s_b = (Z^{+1}_s + b Z^{-1}_s)/2 (chirality combinations at fixed s).
  complexd F_trans(int s, int b) const {
    return 0.5 * (Z(+1, s) + complexd(b) * Z(-1, s));
  }
  //! F^0_b = (alpha_{+,0} + b alpha_{-,0})/2.
  complexd F_long(int b) const {
    return 0.5 * (al(+1, 0) + complexd(b) * al(-1, 0));
  }

  //! Element-wise reciprocal (parameters of the inverse intertwiner).
  MetricParams reciprocal() const {
    MetricParams out;
    for (int i = 0; i < 6; ++i) out.alpha[i] = 1.0 / alpha[i];
    return out;
  }
};

//==============================================================================
// General metric family
//==============================================================================

//! \brief Intertwiner and metric structure of the general inner-product family
//!        at one momentum.
struct GeneralMetricSet {
  Mat6 A_op;           //!< intertwiner  A = sum alpha |Psi><Phi|
  Mat6 A_inv;          //!< inverse intertwiner (alphas reciprocated)
  Mat6 eta_tilde;      //!< general metric  A^dag eta_+ A
  Mat6 eta_tilde_inv;  //!< its inverse
  Mat6 rho_tilde;      //!< rho A (intertwines to the free Foldy form)
  Mat6 rho_tilde_inv;  //!< its inverse
};

//! Closed-form construction (no eigen decomposition, no numeric inversion).
GeneralMetricSet general_metric(const ModeMatrixSet& mm,
                                const MetricParams& params);

//! The 3x3 weight operators Theta_{b,h}; b in {+1,-1} selects the chirality
//! combination, h in {+1,0,-1} the power of sqrt(D):
//!   Theta_{b,h} = [L^+_b omega^h - M^{2h} L^0_b omega^{-h}] hel^2
//!                 + L^-_b omega^h hel + M^{2h} L^0_b omega^{-h}.
Mat3 theta_operator(const ModeMatrixSet& mm, const MetricParams& params, int b,
                    int h);

//==============================================================================
// Foldy-type transform blocks
//==============================================================================

//! Canonical transform block U = [sqrt(omega) - M/sqrt(omega)] hel^2
//!                               + M/sqrt(omega) I.
Mat3 foldy_u(const ModeMatrixSet& mm);

//! Its inverse  U^{-1} = [1/sqrt(omega) - sqrt(omega)/M] hel^2
//!                       + sqrt(omega)/M I.
Mat3 foldy_u_inv(const ModeMatrixSet& mm);

//! General family blocks U_{eps,pm}:
//!   U_{eps,pm} = [Z^eps_+ omega^{pm/2} - M^{pm} alpha_{eps,0} omega^{-pm/2}]
//!                hel^2 + Z^eps_- omega^{pm/2} hel
//!                + M^{pm} alpha_{eps,0} omega^{-pm/2} I,   pm in {+1,-1}.
Mat3 foldy_u_general(const ModeMatrixSet& mm, const MetricParams& params,
                     int eps, int pm);

//! Closed-form inverse of U_{eps,+} (reciprocal alphas).
Mat3 foldy_u_general_inv(const ModeMatrixSet& mm, const MetricParams& params,
                         int eps);

//==============================================================================
// Case-type operators in the Foldy representation
//==============================================================================

//! Mean-spin operator S0 = rho^{-1} (sigma0 kron S) rho, one 6x6 matrix per
//! Cartesian component.
std::array<Mat6, 3> case_spin_operator(const ModeMatrixSet& mm);

//! Momentum-dependent part of the Case position operator (X0 minus the
//! multiplication by x), one 6x6 matrix per Cartesian component; equals
//! i rho^{-1} (d rho / d k_i) in closed form.
std::array<Mat6, 3> case_position_correction(const ModeMatrixSet& mm);

//==============================================================================
// Position / spin matrix kernels on solution space
//==============================================================================

//! Scalar coefficient of the time-component position kernel: the operator on
//! A^0 is x_i + i k_i [1/(2D) + 1/(M(sqrt(D)+M))]; this returns the additive
//! non-x part (times A^0).
complexd position_scalar_correction(const ModeMatrixSet& mm, int i);

//! Matrix part of the spatial position kernel (the operator on the 3-vector A
//! minus the multiplication by x_i).
Mat3 position_vector_correction(const ModeMatrixSet& mm, int i);

//! Mean-spin kernel s~0^i acting on 3-vector amplitudes.
Mat3 spin_kernel(const ModeMatrixSet& mm, int i);

}  // namespace proca
