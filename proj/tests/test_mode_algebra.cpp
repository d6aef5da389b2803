//! \file test_mode_algebra.cpp
//! \brief Per-momentum operator algebra: Hamiltonian, metrics, Foldy maps,
//!        polarization bases and Case-type operators.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "proca/mode_algebra.hpp"

using namespace proca;

namespace {

const PhysicsConfig kCfg{1.0, 1.0, 1.0};

Mat3 spin3(int i) {
  // (S_i)_{jk} = -i eps_{ijk}
  Mat3 s = Mat3::Zero();
  const int j = (i + 1) % 3, l = (i + 2) % 3;
  s(j, l) = -kI;
  s(l, j) = kI;
  return s;
}

Mat6 blockdiag(const Mat3& m) {
  Mat6 b = Mat6::Zero();
  b.block<3, 3>(0, 0) = m;
  b.block<3, 3>(3, 3) = m;
  return b;
}

double max_abs(const Mat6& m) { return m.cwiseAbs().maxCoeff(); }
double max_abs3(const Mat3& m) { return m.cwiseAbs().maxCoeff(); }

const Vec3 kSample(0.7, -0.4, 1.1);

}  // namespace

TEST_CASE("helicity matrix at k along z", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(Vec3(0, 0, 2), kCfg);
  CHECK(max_abs3(mm.hel - spin3(2)) < 1e-15);
  Mat3 proj = Mat3::Identity();
  proj(2, 2) = 0.0;
  CHECK(max_abs3(mm.hel2 - proj) < 1e-15);
  CHECK(mm.omega == Catch::Approx(std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("helicity projector is I minus khat khat^T", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  const Vec3 khat = kSample.normalized();
  const Mat3 expected =
      Mat3::Identity() - (khat * khat.transpose()).cast<complexd>();
  CHECK(max_abs3(mm.hel2 - expected) < 1e-14);
  CHECK(max_abs3(mm.hel * mm.hel - mm.hel2) < 1e-14);
  // hel^3 = hel (eigenvalues -1, 0, +1).
  CHECK(max_abs3(mm.hel * mm.hel * mm.hel - mm.hel) < 1e-14);
}

TEST_CASE("Hamiltonian squares to omega^2", "[mode_algebra]") {
  for (const double g : {0.4, 1.0, 2.7}) {
    PhysicsConfig cfg = kCfg;
    cfg.gamma = g;
    const ModeMatrixSet mm = mode_matrices(kSample, cfg);
    CHECK(max_abs(mm.H * mm.H - mm.omega * mm.omega * Mat6::Identity()) <
          1e-12);
    CHECK(max_abs(mm.C - mm.H / mm.omega) < 1e-13);
  }
}

TEST_CASE("parity is the block sign matrix", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  Mat6 s3 = Mat6::Identity();
  s3.block<3, 3>(3, 3) *= -1.0;
  CHECK(max_abs(mm.P - s3) == 0.0);
  CHECK(max_abs(sigma3_66() - s3) == 0.0);
}

TEST_CASE("metric inverses and positivity", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  CHECK(max_abs(mm.eta_plus * mm.eta_plus_inv - Mat6::Identity()) < 1e-13);
  CHECK(max_abs(mm.rho * mm.rho_inv - Mat6::Identity()) < 1e-13);
  CHECK(max_abs(mm.rho - mm.rho.adjoint()) < 1e-14);
  CHECK(max_abs(mm.eta_plus - mm.eta_plus.adjoint()) < 1e-14);
  Eigen::SelfAdjointEigenSolver<Mat6> es(mm.rho);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
  Eigen::SelfAdjointEigenSolver<Mat6> eg(mm.eta_plus);
  CHECK(eg.eigenvalues().minCoeff() > 0.0);
  // rho is the positive square root of the metric.
  CHECK(max_abs(mm.rho * mm.rho - mm.eta_plus) < 1e-12);
}

TEST_CASE("eigenvectors and biorthogonal duals", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  for (int eps : kChiralities)
    for (int h : kHelicities) {
      CHECK((mm.H * mm.psi(eps, h) - eps * mm.omega * mm.psi(eps, h)).norm() <
            1e-12);
      // Duals are left eigenvectors: H^dagger phi = eps omega phi.
      CHECK((mm.H.adjoint() * mm.phi(eps, h) -
             eps * mm.omega * mm.phi(eps, h))
                .norm() < 1e-12);
      // The dual pairs through the eta metric: phi = eta_plus psi / <..>.
      const Vec6 ep = mm.eta_plus * mm.psi(eps, h);
      const complexd scale = mm.psi(eps, h).dot(ep);
      CHECK((ep / scale - mm.phi(eps, h)).norm() < 1e-11);
    }
}

TEST_CASE("polarization bases", "[mode_algebra]") {
  for (int eps : kChiralities) {
    const PolarizationSet pol = polarization_basis(kSample, eps, kCfg);
    // Conjugated Minkowski orthonormality.
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const complexd ip = minkowski_dot_conj(pol.u[a], pol.u[b]);
        CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-13);
      }
    // Lorenz transversality k_mu u^mu = 0 with k^0 = eps omega.
    const double om = omega_of(kSample, kCfg);
    const FourVec k4{complexd(eps * om, 0.0), kSample.cast<complexd>()};
    for (const auto& u : pol.u)
      CHECK(std::abs(minkowski_dot(k4, u)) < 1e-13);
    // The longitudinal entry is a3 = (|k|/M, (eps omega / M) khat).
    CHECK(std::abs(pol.u[2].t - kSample.norm() / kCfg.mass) < 1e-14);
    CHECK((pol.u[2].r -
           (eps * om / kCfg.mass) * kSample.normalized().cast<complexd>())
              .norm() < 1e-13);
  }
  // Degenerate direction k along z falls back to a1 = x.
  const PolarizationSet pz = polarization_basis(Vec3(0, 0, 1.5), +1, kCfg);
  CHECK((pz.a1 - Vec3(1, 0, 0)).norm() < 1e-12);
}

TEST_CASE("Foldy U maps", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  const Mat3 u = foldy_u(mm);
  const Mat3 uinv = foldy_u_inv(mm);
  CHECK(max_abs3(u * uinv - Mat3::Identity()) < 1e-13);
  const double om = mm.omega;
  const PolarizationSet pol = polarization_basis(kSample, +1, kCfg);
  // Transverse polarizations are sqrt(omega) eigenvectors.
  for (int slot : {0, 1})
    CHECK((u * pol.u[slot].r - std::sqrt(om) * pol.u[slot].r).norm() < 1e-13);
  // The longitudinal direction khat maps with M / sqrt(omega).
  const Vec3c khat = kSample.normalized().cast<complexd>();
  CHECK((u * khat - (kCfg.mass / std::sqrt(om)) * khat).norm() < 1e-13);
  // The general map at identity weights reduces to the canonical one.
  const MetricParams id;
  CHECK(max_abs3(foldy_u_general(mm, id, +1, +1) - u) < 1e-13);
  CHECK(max_abs3(foldy_u_general_inv(mm, id, +1) - uinv) < 1e-13);
  // General inverse really inverts.
  MetricParams p;
  p.al(+1, +1) = complexd(0.8, 0.3);
  p.al(+1, -1) = complexd(1.1, -0.2);
  p.al(+1, 0) = complexd(0.6, 0.1);
  p.al(-1, +1) = complexd(1.3, 0.0);
  p.al(-1, -1) = complexd(0.9, 0.9);
  p.al(-1, 0) = complexd(1.0, -0.5);
  for (int eps : kChiralities)
    CHECK(max_abs3(foldy_u_general(mm, p, eps, +1) *
                       foldy_u_general_inv(mm, p, eps) -
                   Mat3::Identity()) < 1e-12);
}

TEST_CASE("theta operators at identity weights", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  const MetricParams id;
  CHECK(max_abs3(theta_operator(mm, id, +1, 0) - Mat3::Identity()) < 1e-14);
  CHECK(max_abs3(theta_operator(mm, id, -1, 0)) < 1e-14);
}

TEST_CASE("general metric family at identity and inverses", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  const GeneralMetricSet gid = general_metric(mm, MetricParams::identity());
  CHECK(max_abs(gid.eta_tilde - mm.eta_plus) < 1e-12);
  CHECK(max_abs(gid.rho_tilde - mm.rho) < 1e-12);

  MetricParams p;
  p.al(+1, +1) = complexd(0.8, 0.3);
  p.al(+1, -1) = complexd(1.1, -0.2);
  p.al(+1, 0) = complexd(0.6, 0.1);
  p.al(-1, +1) = complexd(1.3, 0.0);
  p.al(-1, -1) = complexd(0.9, 0.9);
  p.al(-1, 0) = complexd(1.0, -0.5);
  const GeneralMetricSet gm = general_metric(mm, p);
  CHECK(max_abs(gm.eta_tilde * gm.eta_tilde_inv - Mat6::Identity()) < 1e-12);
  CHECK(max_abs(gm.rho_tilde * gm.rho_tilde_inv - Mat6::Identity()) < 1e-12);
  CHECK(max_abs(gm.A_op * gm.A_inv - Mat6::Identity()) < 1e-12);
  CHECK(max_abs(gm.eta_tilde - gm.eta_tilde.adjoint()) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Mat6> es(gm.eta_tilde);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("metric parameter combinations", "[mode_algebra]") {
  MetricParams p;
  p.al(+1, +1) = complexd(2.0, 0.0);
  p.al(+1, -1) = complexd(0.0, 1.0);
  p.al(+1, 0) = complexd(0.5, 0.0);
  p.al(-1, +1) = complexd(1.0, 1.0);
  p.al(-1, -1) = complexd(1.0, 0.0);
  p.al(-1, 0) = complexd(0.0, 2.0);
  CHECK(p.a(+1, +1) == Catch::Approx(4.0));
  CHECK(p.a(+1, -1) == Catch::Approx(1.0));
  CHECK(p.a(-1, +1) == Catch::Approx(2.0));
  CHECK(p.L_trans(+1, +1) == Catch::Approx(0.25 * (4 + 1 + 2 + 1)));
  CHECK(p.L_trans(-1, +1) == Catch::Approx(0.25 * (4 - 1 + 2 - 1)));
  CHECK(p.L_long(-1) == Catch::Approx(0.5 * (0.25 - 4.0)));
  const MetricParams r = p.reciprocal();
  for (int eps : kChiralities)
    for (int h : kHelicities)
      CHECK(std::abs(r.al(eps, h) * p.al(eps, h) - 1.0) < 1e-15);
  MetricParams bad;
  bad.al(+1, 0) = complexd(0.0, 0.0);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("Case spin operator", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  const auto S = case_spin_operator(mm);
  // Two-path: the closed form equals rho^{-1} (sigma0 kron S_i) rho.
  for (int i = 0; i < 3; ++i)
    CHECK(max_abs(S[i] - mm.rho_inv * blockdiag(spin3(i)) * mm.rho) < 1e-12);
  // su(2) algebra and Casimir s(s+1) = 2.
  CHECK(max_abs(S[0] * S[1] - S[1] * S[0] - kI * S[2]) < 1e-12);
  CHECK(max_abs(S[1] * S[2] - S[2] * S[1] - kI * S[0]) < 1e-12);
  CHECK(max_abs(S[0] * S[0] + S[1] * S[1] + S[2] * S[2] -
                2.0 * Mat6::Identity()) < 1e-12);
}

TEST_CASE("Case position correction equals i rho^-1 d rho", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  const auto X = case_position_correction(mm);
  const double delta = 1e-5;
  for (int i = 0; i < 3; ++i) {
    Vec3 kp = kSample, km = kSample;
    kp[i] += delta;
    km[i] -= delta;
    const Mat6 drho = (mode_matrices(kp, kCfg).rho -
                       mode_matrices(km, kCfg).rho) /
                      (2.0 * delta);
    CHECK(max_abs(X[i] - kI * mm.rho_inv * drho) < 1e-7);
  }
}

TEST_CASE("position and spin kernels are the block sums", "[mode_algebra]") {
  const ModeMatrixSet mm = mode_matrices(kSample, kCfg);
  const auto X = case_position_correction(mm);
  const auto S = case_spin_operator(mm);
  // Acting on a balanced six-vector (A; A), the 6x6 operators reduce to the
  // 3x3 kernels on A: upper block-row sum equals the kernel.
  for (int i = 0; i < 3; ++i) {
    const Mat3 xsum = X[i].block<3, 3>(0, 0) + X[i].block<3, 3>(0, 3);
    CHECK(max_abs3(xsum - position_vector_correction(mm, i)) < 1e-13);
    const Mat3 ssum = S[i].block<3, 3>(0, 0) + S[i].block<3, 3>(0, 3);
    CHECK(max_abs3(ssum - spin_kernel(mm, i)) < 1e-13);
  }
  // Scalar kernel closed form.
  const double om = mm.omega, M = kCfg.mass;
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(position_scalar_correction(mm, i) -
                   kI * kSample[i] *
                       (0.5 / (om * om) + 1.0 / (M * (om + M)))) < 1e-15);
}

TEST_CASE("zero momentum is rejected", "[mode_algebra]") {
  CHECK_THROWS_AS(mode_matrices(Vec3::Zero(), kCfg), std::invalid_argument);
}
