//! \file types.hpp
//! \brief Core value types and conventions shared by every module.
//!
//! Conventions (fixed across the whole library):
//!  - metric signature (-,+,+,+); natural units;
//!  - chirality eps in {+1,-1} labels the sign of the frequency;
//!  - helicity h in {+1,-1,0}; the canonical storage order of the six
//!    (chirality, helicity) slots is
//!        (+,+1), (+,-1), (+,0), (-,+1), (-,-1), (-,0);
//!  - plane-wave normalization phi_k(x) = (2 pi)^{-3/2} e^{i k.x}, with the
//!    discrete Kronecker convention  integral phi_k* phi_k' = delta_{k,k'}
//!    for mode sums.

#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace proca {

using complexd = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Vec3c = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;
using Mat6 = Eigen::Matrix<complexd, 6, 6>;
using Vec6 = Eigen::Matrix<complexd, 6, 1>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr complexd kI{0.0, 1.0};

//! Chiralities in storage order.
inline constexpr std::array<int, 2> kChiralities{+1, -1};
//! Helicities in storage order.
inline constexpr std::array<int, 3> kHelicities{+1, -1, 0};

//! Storage slot of a chirality: +1 -> 0, -1 -> 1.
inline int chirality_slot(int eps) {
  if (eps == +1) return 0;
  if (eps == -1) return 1;
  throw std::invalid_argument("chirality must be +1 or -1");
}

//! Storage slot of a helicity: +1 -> 0, -1 -> 1, 0 -> 2.
inline int helicity_slot(int h) {
  if (h == +1) return 0;
  if (h == -1) return 1;
  if (h == 0) return 2;
  throw std::invalid_argument("helicity must be +1, -1 or 0");
}

//! Flat slot in the canonical six-component order.
inline int mode_slot(int eps, int h) {
  return 3 * chirality_slot(eps) + helicity_slot(h);
}

//==============================================================================
// PhysicsConfig
//==============================================================================

//! \brief Global physical parameters: mass M, representation parameter gamma,
//!        overall normalization kappa. All strictly positive.
struct PhysicsConfig {
  double mass = 1.0;
  double gamma = 1.0;
  double kappa = 1.0;

  void validate() const {
    if (!(mass > 0.0) || !(gamma > 0.0) || !(kappa > 0.0))
      throw std::invalid_argument(
          "PhysicsConfig: mass, gamma and kappa must all be positive");
  }
};

//! Relativistic energy omega(k) = sqrt(k^2 + M^2).
inline double omega_of(const Vec3& k, const PhysicsConfig& cfg) {
  return std::sqrt(k.squaredNorm() + cfg.mass * cfg.mass);
}

//==============================================================================
// FourVec
//==============================================================================

//! \brief Complex four-vector with contravariant components (t, r).
struct FourVec {
  complexd t{0.0, 0.0};
  Vec3c r = Vec3c::Zero();

  FourVec() = default;
  FourVec(complexd t0, Vec3c r0) : t(t0), r(std::move(r0)) {}

  FourVec operator+(const FourVec& o) const { return {t + o.t, r + o.r}; }
  FourVec operator-(const FourVec& o) const { return {t - o.t, r - o.r}; }
  FourVec operator*(complexd s) const { return {s * t, s * r}; }
  FourVec conj() const { return {std::conj(t), r.conjugate()}; }

  double norm() const {
    return std::sqrt(std::norm(t) + r.squaredNorm());
  }
};

inline FourVec operator*(complexd s, const FourVec& v) { return v * s; }

//! Unconjugated Minkowski product a_mu b^mu = -a^0 b^0 + a.b  (signature -+++).
inline complexd minkowski_dot(const FourVec& a, const FourVec& b) {
  return -a.t * b.t + a.r.cwiseProduct(b.r).sum();
}

//! Conjugated Minkowski product a*_mu b^mu.
inline complexd minkowski_dot_conj(const FourVec& a, const FourVec& b) {
  return minkowski_dot(a.conj(), b);
}

//==============================================================================
// Small helpers
//==============================================================================

//! Frobenius norm of the difference of two matrices (generic Eigen types).
template <typename A, typename B>
double frob_diff(const A& a, const B& b) {
  return (a - b).norm();
}

//! Exception used for representation-level misuse (wrong field kind, mode
//! collisions after boosts, etc).
class RepresentationError : public std::runtime_error {
 public:
  explicit RepresentationError(const std::string& what)
      : std::runtime_error(what) {}
};

//! Exception thrown when an iterative numerical procedure fails to converge;
//! carries human-readable diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace proca
