#include "proca/mode_algebra.hpp"

namespace proca {

//==============================================================================
// Spin matrices
//==============================================================================

namespace {

std::array<Mat3, 3> make_spin_matrices() {
  std::array<Mat3, 3> S;
  for (auto& m : S) m = Mat3::Zero();
  // (S_i)_{jk} = -i eps_{ijk}
  S[0](1, 2) = -kI; S[0](2, 1) = kI;
  S[1](2, 0) = -kI; S[1](0, 2) = kI;
  S[2](0, 1) = -kI; S[2](1, 0) = kI;
  return S;
}

const std::array<Mat3, 3>& spin_all() {
  static const std::array<Mat3, 3> S = make_spin_matrices();
  return S;
}

//! Assemble a 6x6 from four 3x3 blocks.
Mat6 block2(const Mat3& a11, const Mat3& a12, const Mat3& a21,
            const Mat3& a22) {
  Mat6 m;
  m.block<3, 3>(0, 0) = a11;
  m.block<3, 3>(0, 3) = a12;
  m.block<3, 3>(3, 0) = a21;
  m.block<3, 3>(3, 3) = a22;
  return m;
}

Vec6 stack2(const Vec3c& top, const Vec3c& bot) {
  Vec6 v;
  v.segment<3>(0) = top;
  v.segment<3>(3) = bot;
  return v;
}

}  // namespace

const Mat3& spin_matrix(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("spin_matrix: i in {0,1,2}");
  return spin_all()[i];
}

Mat3 vec_dot_spin(const Vec3& v) {
  return v.x() * spin_all()[0] + v.y() * spin_all()[1] + v.z() * spin_all()[2];
}

Mat3 helicity_matrix(const Vec3& k) {
  const double kn = k.norm();
  if (!(kn > 0.0))
    throw std::invalid_argument("helicity_matrix: |k| must be positive");
  return vec_dot_spin(k / kn);
}

Mat3 cross_spin_component(const Vec3& k, int i) {
  // (k x S)_i = eps_{ijk} k_j S_k
  const auto& S = spin_all();
  const int j = (i + 1) % 3, l = (i + 2) % 3;
  return k[j] * S[l] - k[l] * S[j];
}

Mat6 kron_sigma(const Eigen::Matrix2cd& s, const Mat3& m) {
  return block2(s(0, 0) * m, s(0, 1) * m, s(1, 0) * m, s(1, 1) * m);
}

Eigen::Matrix2cd sigma0() { return Eigen::Matrix2cd::Identity(); }
Eigen::Matrix2cd sigma1() {
  Eigen::Matrix2cd s;
  s << 0, 1, 1, 0;
  return s;
}
Eigen::Matrix2cd sigma3() {
  Eigen::Matrix2cd s;
  s << 1, 0, 0, -1;
  return s;
}

const Mat6& sigma3_66() {
  static const Mat6 s = kron_sigma(sigma3(), Mat3::Identity());
  return s;
}

//==============================================================================
// Polarization basis
//==============================================================================

PolarizationSet polarization_basis(const Vec3& k, int eps,
                                   const PhysicsConfig& cfg) {
  cfg.validate();
  const double kn = k.norm();
  if (!(kn > 0.0))
    throw std::invalid_argument("polarization_basis: |k| must be positive");
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("polarization_basis: eps must be +1 or -1");

  const Vec3 kh = k / kn;
  const double M = cfg.mass;
  const double om = std::sqrt(kn * kn + M * M);

  PolarizationSet p;
  p.eps = eps;
  Vec3 a1 = Vec3(0, 0, 1).cross(kh);
  if (a1.norm() < 1e-8)
    a1 = Vec3(1, 0, 0);
  else
    a1.normalize();
  p.a1 = a1;
  p.a2 = kh.cross(a1);
  p.a3 = FourVec{complexd(kn / M, 0.0),
                 (eps * om / M) * kh.cast<complexd>()};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  p.u[helicity_slot(+1)] =
      FourVec{0.0, inv_sqrt2 * (p.a1.cast<complexd>() +
                                kI * p.a2.cast<complexd>())};
  p.u[helicity_slot(-1)] =
      FourVec{0.0, inv_sqrt2 * (p.a1.cast<complexd>() -
                                kI * p.a2.cast<complexd>())};
  p.u[helicity_slot(0)] = p.a3;
  return p;
}

//==============================================================================
// Mode matrices
//==============================================================================

ModeMatrixSet mode_matrices(const Vec3& k, const PhysicsConfig& cfg) {
  cfg.validate();
  const double kn = k.norm();
  if (!(kn > 0.0))
    throw std::invalid_argument("mode_matrices: |k| must be positive");

  ModeMatrixSet mm;
  mm.k = k;
  mm.knorm = kn;
  mm.cfg = cfg;
  const double M = cfg.mass, gam = cfg.gamma;
  const double om = std::sqrt(kn * kn + M * M);
  mm.omega = om;
  mm.r = std::sqrt(gam * om);

  const Mat3 I = Mat3::Identity();
  mm.hel = helicity_matrix(k);
  mm.hel2 = mm.hel * mm.hel;
  const Mat3 kS = vec_dot_spin(k);
  const Mat3 kS2 = kS * kS;
  mm.m2ks2 = M * M * I + kS2;

  const double D = om * om;
  mm.H1 = gam * mm.m2ks2 + (D * I - kS2) / (gam * M * M);
  mm.H2 = gam * mm.m2ks2 - (D * I - kS2) / (gam * M * M);
  mm.H = 0.5 * block2(mm.H1, mm.H2, -mm.H2, -mm.H1);

  mm.eta_plus = (0.5 / om) * block2(mm.H1, mm.H2, mm.H2, mm.H1);
  mm.eta_plus_inv = (0.5 / om) * block2(mm.H1, -mm.H2, -mm.H2, mm.H1);

  const double sq = std::sqrt(om);
  const Mat3 rp = (gam * M - 1.0) * (sq - M / sq) * mm.hel2 +
                  (gam * M * M / sq + sq) * I;
  const Mat3 rm = (gam * M + 1.0) * (sq - M / sq) * mm.hel2 +
                  (gam * M * M / sq - sq) * I;
  const double pref = 1.0 / (2.0 * M * std::sqrt(gam));
  mm.rho = pref * block2(rp, rm, rm, rp);
  // Inverse in the same closed block form (reciprocal-parameter identity).
  const Mat3 bp = M * (gam * sq + 1.0 / sq) * mm.hel2 +
                  (gam * M * M / sq + sq) * (I - mm.hel2);
  const Mat3 bm = M * (gam * sq - 1.0 / sq) * mm.hel2 +
                  (gam * M * M / sq - sq) * (I - mm.hel2);
  mm.rho_inv = pref * block2(bp, -bm, -bm, bp);

  mm.C = mm.H / om;
  mm.P = sigma3_66();

  for (int eps : kChiralities) {
    const PolarizationSet pol = polarization_basis(k, eps, cfg);
    for (int h : kHelicities) {
      const FourVec& u = pol.u[helicity_slot(h)];
      const Vec3c uv = u.r;
      const complexd u0 = u.t;
      const double rr = mm.r;
      const Vec3c kc = k.cast<complexd>();
      mm.Psi[chirality_slot(eps)][helicity_slot(h)] =
          0.5 * stack2((1.0 / rr + eps * rr) * uv - (gam / rr) * u0 * kc,
                       (1.0 / rr - eps * rr) * uv + (gam / rr) * u0 * kc);
      mm.Phi[chirality_slot(eps)][helicity_slot(h)] =
          0.5 *
          stack2((rr + eps / rr) * uv - complexd(eps) * (gam / rr) * u0 * kc,
                 (rr - eps / rr) * uv - complexd(eps) * (gam / rr) * u0 * kc);
    }
  }
  return mm;
}

//==============================================================================
// General metric family
//==============================================================================

namespace {

//! 2x2 chirality-space structure matrices M and N (real symmetric).
Eigen::Matrix2cd chirality_M(const ModeMatrixSet& mm) {
  const double gam = mm.cfg.gamma, D = mm.omega * mm.omega;
  Eigen::Matrix2cd m;
  m << gam * gam * D + 1.0, gam * gam * D - 1.0, gam * gam * D - 1.0,
      gam * gam * D + 1.0;
  return m * (0.5 / (mm.omega * gam));
}

Eigen::Matrix2cd chirality_N(const ModeMatrixSet& mm) {
  const double gam = mm.cfg.gamma, M = mm.cfg.mass, D = mm.omega * mm.omega;
  const double M4 = M * M * M * M;
  Eigen::Matrix2cd n;
  n << gam * gam * M4 + D, gam * gam * M4 - D, gam * gam * M4 - D,
      gam * gam * M4 + D;
  return n * (0.5 / (mm.omega * gam * M * M));
}

//! Structural intertwiner for a given coefficient table (see MetricParams::F_*).
Mat6 structural_intertwiner(const ModeMatrixSet& mm, const MetricParams& p) {
  const Eigen::Matrix2cd M2 = chirality_M(mm);
  const Eigen::Matrix2cd N2 = chirality_N(mm);
  const Eigen::Matrix2cd s0 = sigma0(), s3 = sigma3();
  const Mat6 h6 = kron_sigma(s0, mm.hel);
  const Mat6 h6sq = kron_sigma(s0, mm.hel2);

  const Mat6 t2 = kron_sigma(p.F_trans(+1, -1) * (s3 * M2) -
                                 p.F_long(-1) * (s3 * N2) +
                                 (p.F_trans(+1, +1) - p.F_long(+1)) * s0,
                             Mat3::Identity());
  const Mat6 t1 = kron_sigma(
      p.F_trans(-1, -1) * (s3 * M2) + p.F_trans(-1, +1) * s0, Mat3::Identity());
  const Mat6 t0 = kron_sigma(p.F_long(-1) * (s3 * N2) + p.F_long(+1) * s0,
                             Mat3::Identity());
  return t2 * h6sq + t1 * h6 + t0;
}

//! rho-tilde block: eps picks the sign structure, the params' chirality slot
//! `epsc` picks which alpha family enters.
Mat3 rho_tilde_block(const ModeMatrixSet& mm, const MetricParams& p, int eps,
                     int epsc) {
  const double M = mm.cfg.mass, gam = mm.cfg.gamma;
  const double sq = std::sqrt(mm.omega);
  const Mat3 I = Mat3::Identity();
  return M * (gam * sq + eps / sq) *
             (p.Z(epsc, +1) * mm.hel2 + p.Z(epsc, -1) * mm.hel) +
         p.al(epsc, 0) * (gam * M * M / sq + eps * sq) * (I - mm.hel2);
}

}  // namespace

GeneralMetricSet general_metric(const ModeMatrixSet& mm,
                                const MetricParams& params) {
  params.validate();
  GeneralMetricSet g;
  const MetricParams rec = params.reciprocal();
  g.A_op = structural_intertwiner(mm, params);
  g.A_inv = structural_intertwiner(mm, rec);

  // eta~ = A^dag eta_+ A via the structural L,M,N form (no products needed).
  {
    const Mat6 M6 = kron_sigma(chirality_M(mm), Mat3::Identity());
    const Mat6 N6 = kron_sigma(chirality_N(mm), Mat3::Identity());
    const Mat6& S3 = sigma3_66();
    const Mat6 h6 = kron_sigma(sigma0(), mm.hel);
    const Mat6 h6sq = kron_sigma(sigma0(), mm.hel2);
    const double Lpp = params.L_trans(+1, +1), Lpm = params.L_trans(+1, -1);
    const double Lmp = params.L_trans(-1, +1), Lmm = params.L_trans(-1, -1);
    const double L0p = params.L_long(+1), L0m = params.L_long(-1);
    g.eta_tilde = (Lpp * M6 + (Lpm - L0m) * S3 - L0p * N6) * h6sq +
                  (Lmp * M6 + Lmm * S3) * h6 + L0p * N6 + L0m * S3;
  }
  // Inverse metric via the closed-form inverse intertwiner.
  g.eta_tilde_inv = g.A_inv * mm.eta_plus_inv * g.A_inv.adjoint();

  const double pref = 1.0 / (2.0 * mm.cfg.mass * std::sqrt(mm.cfg.gamma));
  g.rho_tilde = pref * block2(rho_tilde_block(mm, params, +1, +1),
                              rho_tilde_block(mm, params, -1, +1),
                              rho_tilde_block(mm, params, -1, -1),
                              rho_tilde_block(mm, params, +1, -1));
  g.rho_tilde_inv = pref * block2(rho_tilde_block(mm, rec, +1, +1),
                                  -rho_tilde_block(mm, rec, -1, -1),
                                  -rho_tilde_block(mm, rec, -1, +1),
                                  rho_tilde_block(mm, rec, +1, -1));
  return g;
}

Mat3 theta_operator(const ModeMatrixSet& mm, const MetricParams& params, int b,
                    int h) {
  if (b != 1 && b != -1)
    throw std::invalid_argument("theta_operator: b must be +1 or -1");
  if (h != 1 && h != -1 && h != 0)
    throw std::invalid_argument("theta_operator: h must be +1, -1 or 0");
  const double M = mm.cfg.mass, om = mm.omega;
  const double om_h = std::pow(om, h);
  const double m2h = std::pow(M, 2 * h);
  const double Lp = params.L_trans(+1, b), Lm = params.L_trans(-1, b),
               L0 = params.L_long(b);
  return (Lp * om_h - m2h * L0 / om_h) * mm.hel2 + Lm * om_h * mm.hel +
         (m2h * L0 / om_h) * Mat3::Identity();
}

//==============================================================================
// Foldy blocks
//==============================================================================

Mat3 foldy_u(const ModeMatrixSet& mm) {
  const double M = mm.cfg.mass, sq = std::sqrt(mm.omega);
  return (sq - M / sq) * mm.hel2 + (M / sq) * Mat3::Identity();
}

Mat3 foldy_u_inv(const ModeMatrixSet& mm) {
  const double M = mm.cfg.mass, sq = std::sqrt(mm.omega);
  return (1.0 / sq - sq / M) * mm.hel2 + (sq / M) * Mat3::Identity();
}

Mat3 foldy_u_general(const ModeMatrixSet& mm, const MetricParams& params,
                     int eps, int pm) {
  if (pm != 1 && pm != -1)
    throw std::invalid_argument("foldy_u_general: pm must be +1 or -1");
  const double M = mm.cfg.mass;
  const double d4 = std::pow(mm.omega, 0.5 * pm);  // D^{pm/4}
  const double mp = std::pow(M, pm);
  const complexd a0 = params.al(eps, 0);
  return (params.Z(eps, +1) * d4 - mp * a0 / d4) * mm.hel2 +
         params.Z(eps, -1) * d4 * mm.hel +
         (mp * a0 / d4) * Mat3::Identity();
}

Mat3 foldy_u_general_inv(const ModeMatrixSet& mm, const MetricParams& params,
                         int eps) {
  const MetricParams rec = params.reciprocal();
  const double M = mm.cfg.mass;
  const double sq = std::sqrt(mm.omega);
  const complexd a0i = rec.al(eps, 0);
  return (rec.Z(eps, +1) / sq - sq * a0i / M) * mm.hel2 +
         rec.Z(eps, -1) / sq * mm.hel + (sq * a0i / M) * Mat3::Identity();
}

//==============================================================================
// Case-type operators
//==============================================================================

std::array<Mat6, 3> case_spin_operator(const ModeMatrixSet& mm) {
  const double M = mm.cfg.mass, om = mm.omega, D = om * om;
  const Mat3 kS = vec_dot_spin(mm.k);
  std::array<Mat6, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Mat3& Si = spin_matrix(i);
    const Mat3 kxSi = cross_spin_component(mm.k, i);
    const Mat3 diag = (D + M * M) / (2.0 * M * om) * Si -
                      (om - M) / (2.0 * M * om * (om + M)) * (mm.k[i] * kS);
    const Mat3 off = (kS * kxSi + kxSi * kS);
    out[i] = kron_sigma(sigma0(), diag) +
             (kI / (2.0 * M * om)) * kron_sigma(sigma1(), off);
  }
  return out;
}

std::array<Mat6, 3> case_position_correction(const ModeMatrixSet& mm) {
  const double M = mm.cfg.mass, om = mm.omega, D = om * om;
  const Mat3 kS = vec_dot_spin(mm.k);
  const Mat3 kS2 = kS * kS;
  std::array<Mat6, 3> out;
  for (int i = 0; i < 3; ++i) {
    const Mat3& Si = spin_matrix(i);
    const Mat3 kxSi = cross_spin_component(mm.k, i);
    const Mat3 off = -0.5 * kI * mm.k[i] / D * Mat3::Identity() -
                     kI * mm.k[i] / (M * D * (om + M)) * kS2 +
                     0.5 * kI / (M * om) * (Si * kS + kS * Si);
    out[i] = -(om - M) / (2.0 * M * om * (om + M)) *
                 kron_sigma(sigma0(), kxSi) +
             kron_sigma(sigma1(), off);
  }
  return out;
}

//==============================================================================
// Position / spin kernels on solution space
//==============================================================================

complexd position_scalar_correction(const ModeMatrixSet& mm, int i) {
  const double M = mm.cfg.mass, om = mm.omega, D = om * om;
  return kI * mm.k[i] * (0.5 / D + 1.0 / (M * (om + M)));
}

Mat3 position_vector_correction(const ModeMatrixSet& mm, int i) {
  const double M = mm.cfg.mass, om = mm.omega, D = om * om;
  const Mat3 kS = vec_dot_spin(mm.k);
  const Mat3 kS2 = kS * kS;
  const Mat3& Si = spin_matrix(i);
  const Mat3 kxSi = cross_spin_component(mm.k, i);
  return -0.5 * kI * mm.k[i] / D * Mat3::Identity() -
         kI * mm.k[i] / (M * D * (om + M)) * kS2 +
         0.5 * kI / (M * om) * (Si * kS + kS * Si) -
         (om - M) / (2.0 * M * om * (om + M)) * kxSi;
}

Mat3 spin_kernel(const ModeMatrixSet& mm, int i) {
  const double M = mm.cfg.mass, om = mm.omega, D = om * om;
  const Mat3 kS = vec_dot_spin(mm.k);
  const Mat3& Si = spin_matrix(i);
  const Mat3 kxSi = cross_spin_component(mm.k, i);
  return (D + M * M) / (2.0 * M * om) * Si -
         (om - M) / (2.0 * M * om * (om + M)) * (mm.k[i] * kS) +
         0.5 * kI / (M * om) * (kS * kxSi + kxSi * kS);
}

}  // namespace proca
