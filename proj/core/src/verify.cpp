//! \file verify.cpp
//! \brief Acceptance suites: measured residuals for the library's structural
//!        identities, with pinned tolerances and runtime budgets.

#include "proca/verify.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "proca/inner_products.hpp"
#include "proca/localized.hpp"
#include "proca/mode_algebra.hpp"
#include "proca/observables.hpp"
#include "proca/relativity.hpp"
#include "proca/specfun.hpp"
#include "proca/symmetry_gauge.hpp"
#include "proca/transforms.hpp"

namespace proca {

namespace {

//==============================================================================
// Bookkeeping helpers
//==============================================================================

class Checker {
 public:
  //! Upper-bound check: pass iff measured <= tol.
  void le(const std::string& name, double measured, double tol) {
    out_.push_back({name, measured, tol, false, measured <= tol});
  }
  //! Lower-bound check: pass iff measured > bound.
  void gt(const std::string& name, double measured, double bound) {
    out_.push_back({name, measured, bound, true, measured > bound});
  }
  //! Boolean condition rendered as a 0/1 residual.
  void ok(const std::string& name, bool cond) {
    out_.push_back({name, cond ? 0.0 : 1.0, 0.5, false, cond});
  }
  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::vector<CheckResult> out_;
};

template <typename Body>
SuiteResult timed_suite(const std::string& name, double budget_seconds,
                        Body&& body) {
  SuiteResult s;
  s.name = name;
  Checker ch;
  const auto t0 = std::chrono::steady_clock::now();
  body(ch);
  const auto t1 = std::chrono::steady_clock::now();
  s.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  s.checks = ch.take();
  s.checks.push_back({"runtime_seconds", s.wall_seconds, budget_seconds, false,
                      s.wall_seconds <= budget_seconds});
  return s;
}

double max_abs(const Mat6& m) { return m.cwiseAbs().maxCoeff(); }

//! Relative max-norm deviation with a unit floor on the reference scale.
double rel_mat(const Mat6& a, const Mat6& b) {
  return (a - b).cwiseAbs().maxCoeff() /
         std::max(1.0, b.cwiseAbs().maxCoeff());
}

double rel_c(complexd a, complexd b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

//==============================================================================
// Random draws (all deterministic under the run seed)
//==============================================================================

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Vec3 v(nd(rng), nd(rng), nd(rng));
  while (v.norm() < 1e-6) v = Vec3(nd(rng), nd(rng), nd(rng));
  return v.normalized();
}

Vec3 random_k(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> ud(lo, hi);
  return ud(rng) * random_unit(rng);
}

complexd random_c(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  return {nd(rng), nd(rng)};
}

MetricParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.6, 1.5);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
  MetricParams p;
  for (auto& a : p.alpha) a = std::polar(mag(rng), ph(rng));
  return p;
}

DiscreteModeField random_field(const PhysicsConfig& cfg,
                               const std::vector<Vec3>& ks,
                               std::mt19937_64& rng,
                               bool positive_frequency_only = false) {
  DiscreteModeField f;
  f.cfg = cfg;
  for (const auto& k : ks) {
    Mode m;
    m.k = k;
    for (int eps : kChiralities)
      for (int h : kHelicities) {
        if (positive_frequency_only && eps == -1) continue;
        m.c[mode_slot(eps, h)] = random_c(rng);
      }
    f.modes.push_back(m);
  }
  return f;
}

std::vector<Vec3> random_kset(std::mt19937_64& rng, std::size_t n, double lo,
                              double hi) {
  std::vector<Vec3> ks;
  while (ks.size() < n) {
    const Vec3 k = random_k(rng, lo, hi);
    bool clash = false;
    for (const auto& q : ks) clash = clash || (q - k).norm() < 1e-3;
    if (!clash) ks.push_back(k);
  }
  return ks;
}

//==============================================================================
// Grid helpers local to the suites
//==============================================================================

GridField grid_add(const GridField& a, const GridField& b) {
  GridField out = a;
  for (int sector = 0; sector < 2; ++sector)
    for (int comp = 0; comp < 3; ++comp)
      for (std::size_t s = 0; s < out.f[sector][comp].size(); ++s)
        out.f[sector][comp][s] += b.f[sector][comp][s];
  return out;
}

double grid_rel_diff(const GridField& a, const GridField& b) {
  double num = 0.0, den = 0.0;
  for (int sector = 0; sector < 2; ++sector)
    for (int comp = 0; comp < 3; ++comp)
      for (std::size_t s = 0; s < a.f[sector][comp].size(); ++s) {
        num += std::norm(a.f[sector][comp][s] - b.f[sector][comp][s]);
        den += std::norm(b.f[sector][comp][s]);
      }
  return std::sqrt(num / std::max(den, 1e-300));
}

//==============================================================================
// Criterion 1: per-mode operator algebra
//==============================================================================

SuiteResult criterion_mode_algebra(const RunConfig& rc) {
  return timed_suite("mode_algebra", 5.0, [&](Checker& ch) {
    std::mt19937_64 rng(rc.seed + 1);
    std::uniform_real_distribution<double> gdist(0.3, 3.0);
    std::array<double, 5> gammas{};
    for (auto& g : gammas) g = gdist(rng);

    double r_herm = 0, r_eta = 0, r_eta_t = 0, r_foldy = 0, r_bio = 0;
    double r_res = 0, r_inv = 0, r_pol = 0;
    const Mat6& S3 = sigma3_66();
    for (int t = 0; t < 200; ++t) {
      const Vec3 k = random_k(rng, 0.15, 2.0);
      for (const double g : gammas) {
        PhysicsConfig cfg = rc.cfg;
        cfg.gamma = g;
        const ModeMatrixSet mm = mode_matrices(k, cfg);
        const Mat6 Hd = mm.H.adjoint();
        r_herm = std::max(r_herm, rel_mat(Hd, S3 * mm.H * S3));
        r_eta = std::max(r_eta,
                         rel_mat(Hd, mm.eta_plus * mm.H * mm.eta_plus_inv));
        const GeneralMetricSet gm = general_metric(mm, random_params(rng));
        r_eta_t = std::max(
            r_eta_t, rel_mat(Hd, gm.eta_tilde * mm.H * gm.eta_tilde_inv));
        r_foldy = std::max(
            r_foldy, rel_mat(mm.rho * mm.H * mm.rho_inv, mm.omega * S3));

        Mat6 res_id = Mat6::Zero();
        Mat6 res_h = Mat6::Zero();
        for (int eps : kChiralities)
          for (int h : kHelicities) {
            for (int eps2 : kChiralities)
              for (int h2 : kHelicities) {
                const complexd ip = mm.psi(eps, h).dot(mm.phi(eps2, h2));
                const double d = (eps == eps2 && h == h2) ? 1.0 : 0.0;
                r_bio = std::max(r_bio, std::abs(ip - d));
              }
            res_id += mm.psi(eps, h) * mm.phi(eps, h).adjoint();
            res_h += (eps * mm.omega) * mm.psi(eps, h) *
                     mm.phi(eps, h).adjoint();
          }
        r_res = std::max(r_res, max_abs(res_id - Mat6::Identity()));
        r_res = std::max(r_res, rel_mat(res_h, mm.H));

        r_inv = std::max(r_inv, max_abs(mm.C * mm.C - Mat6::Identity()));
        r_inv = std::max(r_inv, rel_mat(mm.C, mm.eta_plus_inv * mm.P));

        // Polarization completeness: sum_h u^mu conj(u^nu) = eta^{mu nu}
        // + k^mu k^nu / M^2 with k^0 = eps omega.
        for (int eps : kChiralities) {
          const PolarizationSet pol = polarization_basis(k, eps, cfg);
          Eigen::Matrix4cd T = Eigen::Matrix4cd::Zero();
          for (const auto& u : pol.u) {
            Eigen::Vector4cd v;
            v << u.t, u.r(0), u.r(1), u.r(2);
            T += v * v.adjoint();
          }
          Eigen::Vector4d k4(eps * mm.omega, k.x(), k.y(), k.z());
          Eigen::Matrix4d ref =
              k4 * k4.transpose() / (cfg.mass * cfg.mass);
          ref(0, 0) -= 1.0;
          ref(1, 1) += 1.0;
          ref(2, 2) += 1.0;
          ref(3, 3) += 1.0;
          r_pol = std::max(
              r_pol, (T - ref.cast<complexd>()).cwiseAbs().maxCoeff());
        }
      }
    }
    ch.le("H_dagger_equals_Sigma3_H_Sigma3_rel", r_herm, 1e-14);
    ch.le("H_dagger_equals_eta_H_eta_inv_rel", r_eta, 1e-12);
    ch.le("H_dagger_equals_eta_tilde_H_eta_tilde_inv_rel", r_eta_t, 1e-12);
    ch.le("rho_H_rho_inv_equals_omega_Sigma3_rel", r_foldy, 1e-12);
    ch.le("biorthonormality_max_dev", r_bio, 1e-13);
    ch.le("spectral_resolutions_identity_and_H", r_res, 1e-13);
    ch.le("C_squared_identity_and_C_equals_etainv_P", r_inv, 1e-12);
    ch.le("polarization_completeness_max_dev", r_pol, 1e-13);
  });
}

//==============================================================================
// Criterion 2: gamma independence
//==============================================================================

SuiteResult criterion_gamma_independence(const RunConfig& rc) {
  return timed_suite("gamma_independence", 5.0, [&](Checker& ch) {
    std::mt19937_64 rng(rc.seed + 2);
    const std::array<double, 3> gammas{0.3, 1.0, 3.0};
    const Mat6& S3 = sigma3_66();
    (void)S3;

    double r_h = 0, r_u = 0, r_ug = 0;
    for (int t = 0; t < 40; ++t) {
      const Vec3 k = random_k(rng, 0.15, 2.0);
      const MetricParams pg = random_params(rng);
      std::array<Mat6, 3> foldy_h;
      std::array<Mat3, 3> u_ops;
      std::array<Mat3, 3> ug_ops;
      for (std::size_t i = 0; i < gammas.size(); ++i) {
        PhysicsConfig cfg = rc.cfg;
        cfg.gamma = gammas[i];
        const ModeMatrixSet mm = mode_matrices(k, cfg);
        foldy_h[i] = mm.rho * mm.H * mm.rho_inv;
        u_ops[i] = foldy_u(mm);
        ug_ops[i] = foldy_u_general(mm, pg, t % 2 ? +1 : -1, +1);
      }
      for (std::size_t i = 1; i < gammas.size(); ++i) {
        r_h = std::max(r_h, rel_mat(foldy_h[i], foldy_h[0]));
        r_u = std::max(r_u, (u_ops[i] - u_ops[0]).cwiseAbs().maxCoeff());
        r_ug = std::max(r_ug, (ug_ops[i] - ug_ops[0]).cwiseAbs().maxCoeff());
      }
    }
    ch.le("foldy_hamiltonian_gamma_independent", r_h, 1e-12);
    ch.le("foldy_u_gamma_independent", r_u, 1e-12);
    ch.le("foldy_u_general_gamma_independent", r_ug, 1e-12);

    // Wave functions of one and the same mode expansion across gamma.
    const auto ks = random_kset(rng, 6, 0.2, 1.8);
    const MetricParams pg = random_params(rng);
    std::array<WaveFunctionSet, 3> wfs;
    {
      PhysicsConfig cfg0 = rc.cfg;
      cfg0.gamma = gammas[0];
      const DiscreteModeField seed_field = random_field(cfg0, ks, rng);
      for (std::size_t i = 0; i < gammas.size(); ++i) {
        DiscreteModeField f = seed_field;
        f.cfg.gamma = gammas[i];
        wfs[i] = to_wavefunction(f, 0.4, pg);
      }
    }
    double r_wf = 0;
    for (std::size_t i = 1; i < gammas.size(); ++i)
      for (std::size_t j = 0; j < wfs[0].entries.size(); ++j)
        for (int sector = 0; sector < 2; ++sector)
          r_wf = std::max(r_wf, (wfs[i].entries[j].f[sector] -
                                 wfs[0].entries[j].f[sector])
                                    .cwiseAbs()
                                    .maxCoeff());
    ch.le("wavefunctions_gamma_independent", r_wf, 1e-12);
  });
}

//==============================================================================
// Criterion 3: inner-product suite
//==============================================================================

SuiteResult criterion_inner_products(const RunConfig& rc) {
  return timed_suite("inner_products", 5.0, [&](Checker& ch) {
    std::mt19937_64 rng(rc.seed + 3);
    const PhysicsConfig cfg = rc.cfg;
    const auto ks = random_kset(rng, 8, 0.2, 1.8);

    // Positivity: Gram matrices of six random fields.
    std::vector<DiscreteModeField> fields;
    for (int i = 0; i < 6; ++i) fields.push_back(random_field(cfg, ks, rng));
    const MetricParams pg = random_params(rng);
    auto min_eig = [](const Eigen::MatrixXcd& g) {
      const Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
      return es.eigenvalues().minCoeff();
    };
    ch.gt("gram_min_eigenvalue_canonical",
          min_eig(gram_matrix(InnerProductKind::Canonical, fields, 0.0)), 0.0);
    ch.gt("gram_min_eigenvalue_general",
          min_eig(gram_matrix(InnerProductKind::General, fields, 0.0, pg)),
          0.0);

    // Time invariance across 20 evolve steps (evaluation time co-moving).
    {
      DiscreteModeField A = random_field(cfg, ks, rng);
      DiscreteModeField B = random_field(cfg, ks, rng);
      const double dt = 0.37;
      double x0 = 0.2;
      const complexd c0 = inner_product(InnerProductKind::Canonical, A, B, x0);
      const complexd s0 = inner_product(InnerProductKind::Sigma3, A, B, x0);
      const complexd g0 =
          inner_product(InnerProductKind::General, A, B, x0, pg);
      double r_t = 0;
      for (int step = 0; step < 20; ++step) {
        A = evolve(A, dt);
        B = evolve(B, dt);
        x0 += dt;
        r_t = std::max(
            r_t, rel_c(inner_product(InnerProductKind::Canonical, A, B, x0),
                       c0));
        r_t = std::max(
            r_t,
            rel_c(inner_product(InnerProductKind::Sigma3, A, B, x0), s0));
        r_t = std::max(
            r_t,
            rel_c(inner_product(InnerProductKind::General, A, B, x0, pg), g0));
      }
      ch.le("time_invariance_20_steps", r_t, 1e-12);
    }

    // Two-path equality of the general product: position-space weight
    // operators vs direct mode sum vs sector decomposition into Sigma3.
    {
      double r_two = 0;
      for (int t = 0; t < 5; ++t) {
        const DiscreteModeField A = random_field(cfg, ks, rng);
        const DiscreteModeField B = random_field(cfg, ks, rng);
        const MetricParams p = random_params(rng);
        const double x0 = 0.3 * t;
        const complexd v1 =
            inner_product(InnerProductKind::General, A, B, x0, p);
        const complexd v2 = inner_product_modesum(A, B, p);
        const complexd v3 = decompose_as_sigma3(A, B, x0, p);
        r_two = std::max({r_two, rel_c(v1, v2), rel_c(v2, v3), rel_c(v1, v3)});
      }
      ch.le("general_product_three_route_equality", r_two, 1e-12);
    }

    // Positive-frequency restriction: the positive products coincide with
    // the indefinite Sigma3 product.
    {
      double r_pf = 0;
      for (int t = 0; t < 5; ++t) {
        const DiscreteModeField A = random_field(cfg, ks, rng, true);
        const DiscreteModeField B = random_field(cfg, ks, rng, true);
        const complexd vs =
            inner_product(InnerProductKind::Sigma3, A, B, 0.1);
        const complexd vc =
            inner_product(InnerProductKind::Canonical, A, B, 0.1);
        r_pf = std::max(r_pf, rel_c(vc, vs));
      }
      ch.le("positive_frequency_sigma3_coincidence", r_pf, 1e-12);
    }
  });
}

//==============================================================================
// Criterion 4: Lorentz suite
//==============================================================================

SuiteResult criterion_lorentz(const RunConfig& rc) {
  return timed_suite("lorentz", 10.0, [&](Checker& ch) {
    std::mt19937_64 rng(rc.seed + 4);
    const PhysicsConfig cfg = rc.cfg;

    // Finite-boost invariance of the general product, collinear geometry
    // (boost along the common momentum axis preserves the helicity split).
    // The momenta are fast enough (k_z/omega > 0.8) that no |beta| <= 0.8
    // boost reverses a mode's direction, which would migrate helicity slots.
    {
      const std::vector<Vec3> ks{Vec3(0, 0, 1.4), Vec3(0, 0, 1.9),
                                 Vec3(0, 0, 2.6)};
      std::uniform_real_distribution<double> bd(0.1, 0.8);
      double r_b = 0;
      for (int t = 0; t < 5; ++t) {
        const MetricParams p = random_params(rng);
        const DiscreteModeField A = random_field(cfg, ks, rng);
        const DiscreteModeField B = random_field(cfg, ks, rng);
        const complexd v0 =
            inner_product(InnerProductKind::General, A, B, 0.0, p);
        for (int attempt = 0; attempt < 10; ++attempt) {
          const Vec3 beta = (t % 2 ? 1.0 : -1.0) * bd(rng) * Vec3(0, 0, 1);
          try {
            const complexd v1 = inner_product(InnerProductKind::General,
                                              boost_field(A, beta),
                                              boost_field(B, beta), 0.0, p);
            r_b = std::max(r_b, rel_c(v1, v0));
            break;
          } catch (const RepresentationError&) {
            continue;  // boosted momentum degenerate for this draw; redraw
          }
        }
      }
      ch.le("general_product_collinear_boost_invariance", r_b, 1e-10);
    }

    // Canonical and Sigma3 products under generic boosts.
    {
      std::uniform_real_distribution<double> bd(0.1, 0.8);
      double r_c = 0, r_s = 0, r_i = 0;
      for (int t = 0; t < 5; ++t) {
        const auto ks = random_kset(rng, 3, 0.3, 1.5);
        const DiscreteModeField A = random_field(cfg, ks, rng);
        const DiscreteModeField B = random_field(cfg, ks, rng);
        for (int attempt = 0; attempt < 10; ++attempt) {
          const Vec3 beta = bd(rng) * random_unit(rng);
          try {
            const DiscreteModeField Ab = boost_field(A, beta);
            const DiscreteModeField Bb = boost_field(B, beta);
            r_c = std::max(
                r_c,
                rel_c(inner_product(InnerProductKind::Canonical, Ab, Bb, 0.0),
                      inner_product(InnerProductKind::Canonical, A, B, 0.0)));
            r_s = std::max(
                r_s,
                rel_c(inner_product(InnerProductKind::Sigma3, Ab, Bb, 0.0),
                      inner_product(InnerProductKind::Sigma3, A, B, 0.0)));
            const DiscreteModeField Aback = boost_field(Ab, -beta);
            double dmax = 0;
            for (std::size_t j = 0; j < A.modes.size(); ++j)
              for (int s = 0; s < 6; ++s)
                dmax = std::max(dmax,
                                std::abs(Aback.modes[j].c[s] -
                                         A.modes[j].c[s]));
            r_i = std::max(r_i, dmax);
            break;
          } catch (const RepresentationError&) {
            continue;
          }
        }
      }
      ch.le("canonical_product_boost_invariance", r_c, 1e-10);
      ch.le("sigma3_product_boost_invariance", r_s, 1e-10);
      ch.le("boost_inverse_roundtrip", r_i, 1e-10);
    }

    // Continuity equation at random spacetime points.
    {
      const auto ks = random_kset(rng, 4, 0.25, 1.6);
      const DiscreteModeField A = random_field(cfg, ks, rng);
      std::uniform_real_distribution<double> xd(-2.0, 2.0);
      double r_div = 0;
      for (int t = 0; t < 20; ++t) {
        const double x0 = xd(rng);
        const Vec3 x(xd(rng), xd(rng), xd(rng));
        r_div = std::max(r_div, std::abs(current_divergence(A, x0, x)));
      }
      ch.le("current_continuity_max_abs_divergence", r_div, 1e-10);
    }

    // Norm bookkeeping: integral of the probability density equals the
    // integral of J^0 equals the mode-sum norm, canonically and in a random
    // family member.
    {
      const auto ks = random_kset(rng, 4, 0.25, 1.6);
      const DiscreteModeField A = random_field(cfg, ks, rng);
      const MetricParams id = MetricParams::identity();
      const MetricParams p = random_params(rng);
      double r_n = 0;
      r_n = std::max(r_n, rel_c(integral_probability_general(A, id),
                                integral_j0_general(A, id)));
      r_n = std::max(r_n, rel_c(integral_probability_general(A, p),
                                integral_j0_general(A, p)));
      r_n = std::max(r_n, rel_c(integral_probability_general(A, p),
                                inner_product_modesum(A, A, p)));
      ch.le("density_current_norm_consistency", r_n, 1e-12);
    }
  });
}

//==============================================================================
// Criterion 5: localized states
//==============================================================================

SuiteResult criterion_localized(const RunConfig& rc) {
  return timed_suite("localized", 60.0, [&](Checker& ch) {
    const PhysicsConfig cfg = rc.cfg;
    const QuadratureSpec spec = QuadratureSpec::fine(cfg.mass);

    double r_cmp = 0;
    for (const double mz : {0.5, 1.0, 2.0, 4.0}) {
      const double z = mz / cfg.mass;
      const LocalizedIntegrals q =
          localized_integrals_quadrature(cfg, z, +1, 0.0, spec);
      const LocalizedIntegrals c = localized_integrals_closed(cfg, z);
      r_cmp = std::max(r_cmp, std::abs(q.I1 - c.I1) / std::abs(c.I1));
      r_cmp = std::max(r_cmp, std::abs(q.I2 - c.I2) / std::abs(c.I2));
      r_cmp = std::max(r_cmp, std::abs(q.I3 - c.I3) / std::abs(c.I3));
    }
    ch.le("quadrature_vs_closed_form_rel", r_cmp, 1e-3);

    // Chirality independence of the radial profile at dt = 0.
    {
      const double z = 1.0 / cfg.mass;
      const LocalizedIntegrals qp =
          localized_integrals_quadrature(cfg, z, +1, 0.0, spec);
      const LocalizedIntegrals qm =
          localized_integrals_quadrature(cfg, z, -1, 0.0, spec);
      const double r_eps =
          std::max({std::abs(qp.I1 - qm.I1), std::abs(qp.I2 - qm.I2),
                    std::abs(qp.I3 - qm.I3)}) /
          std::abs(qp.I1);
      ch.le("chirality_independence_at_dt0", r_eps, 1e-8);
    }

    // Qualitative radial profile: I1, I2 positive, I3 negative, magnitudes
    // grow toward the singular origin and decay monotonically in the tail.
    {
      bool signs = true, singular = true, monotone = true;
      std::vector<double> grid;
      for (double mz = 0.3; mz <= 5.0 + 1e-9; mz += 0.1) grid.push_back(mz);
      LocalizedIntegrals prev{};
      bool have_prev = false;
      for (const double mz : grid) {
        const LocalizedIntegrals c =
            localized_integrals_closed(cfg, mz / cfg.mass);
        signs = signs && c.I1.real() > 0 && c.I2.real() > 0 &&
                c.I3.real() < 0;
        if (have_prev && mz > 1.5 + 1e-9) {
          monotone = monotone && std::abs(c.I1) < std::abs(prev.I1) &&
                     std::abs(c.I2) < std::abs(prev.I2) &&
                     std::abs(c.I3) < std::abs(prev.I3);
        }
        prev = c;
        have_prev = true;
      }
      const LocalizedIntegrals near =
          localized_integrals_closed(cfg, 0.3 / cfg.mass);
      const LocalizedIntegrals mid =
          localized_integrals_closed(cfg, 1.0 / cfg.mass);
      singular = std::abs(near.I1) > std::abs(mid.I1) &&
                 std::abs(near.I2) > std::abs(mid.I2) &&
                 std::abs(near.I3) > std::abs(mid.I3);
      ch.ok("profile_signs_I1_I2_positive_I3_negative", signs);
      ch.ok("profile_singular_toward_origin", singular);
      ch.ok("profile_monotone_decay_beyond_mz_1p5", monotone);
    }
  });
}

//==============================================================================
// Criterion 6: observables on the lattice
//==============================================================================

SuiteResult criterion_observables(const RunConfig& rc) {
  return timed_suite("observables", 30.0, [&](Checker& ch) {
    const PhysicsConfig cfg = rc.cfg;
    // Lattice centered on the packet momentum: every tail (k edges, the
    // polarization kink at k = 0, the x-space box) sits ~10 sigma out.
    const Vec3 kbar(0, 0, 1.5);
    const LatticeSpec lat{32, 0.09, kbar};
    const Vec3 xbar(1.5, -1.0, 2.0);
    const GridField pb =
        gaussian_packet(cfg, lat, +1, 0, kbar, 0.14, xbar);

    // Two-path position action: spectral wave-function multiply against the
    // covariant potential kernels.
    {
      double r_two = 0;
      for (const int axis : {0, 2}) {
        const GridField w =
            apply_position(pb, axis, PositionMethod::WaveFunction);
        const GridField c =
            apply_position(pb, axis, PositionMethod::Covariant);
        r_two = std::max(r_two, grid_rel_diff(c, w));
      }
      ch.le("position_two_path_agreement", r_two, 1e-6);
    }

    // Position expectation of the packet center.
    {
      const Vec3 xe = grid_position_expectation(pb);
      ch.le("position_expectation_matches_center",
            (xe - xbar).cwiseAbs().maxCoeff(), 1e-6);
    }

    // Commutators: components of x0 among themselves and with C.
    {
      const GridField mix = grid_add(
          pb, gaussian_packet(cfg, lat, -1, +1, kbar, 0.14, -xbar));
      const auto xw = [&](const GridField& g, int i) {
        return apply_position(g, i, PositionMethod::WaveFunction);
      };
      const double r_xx = grid_rel_diff(xw(xw(mix, 0), 2), xw(xw(mix, 2), 0));
      const double r_xc = grid_rel_diff(grid_apply_charge(xw(mix, 1)),
                                        xw(grid_apply_charge(mix), 1));
      ch.le("position_component_commutator", r_xx, 1e-10);
      ch.le("position_charge_commutator", r_xc, 1e-10);

      // Helicity two-path: coefficient route vs spectral curl.
      ch.le("helicity_two_path_agreement", helicity_two_path_residual(mix),
            1e-10);
    }

    // Velocity identity on a narrow packet (narrow in k so the spread of the
    // group velocity over the packet stays below the gate).
    {
      const Vec3 kv(0, 0, 0.5);
      const LatticeSpec latv{32, 0.004, kv};
      const GridField pa =
          gaussian_packet(cfg, latv, +1, 0, kv, 0.0075, Vec3::Zero());
      const VelocityCheckResult vc = velocity_check(pa);
      const double vref = kv.z() / omega_of(kv, cfg);
      ch.le("velocity_mean_matches_kbar_over_omegabar",
            std::abs(vc.mean_spectral.z() - vref), 1e-4);
      ch.le("velocity_commutator_vs_spectral_mean",
            (vc.mean_commutator - vc.mean_spectral).cwiseAbs().maxCoeff(),
            1e-6);
      ch.le("velocity_operator_identity_residual", vc.operator_residual,
            1e-6);
    }

    // Angular momentum bookkeeping.
    {
      const GridField pc =
          gaussian_packet(cfg, lat, +1, +1, kbar, 0.06, Vec3::Zero());
      const auto expect = [&](const GridField& g, auto&& op) {
        return grid_overlap(g, op(g)).real() / grid_norm_sq(g);
      };
      const double s3 =
          expect(pc, [](const GridField& g) { return grid_apply_spin(g, 2); });
      const double l3 = expect(
          pc, [](const GridField& g) { return grid_apply_orbital(g, 2); });
      const double m3 = expect(pc, [](const GridField& g) {
        return grid_apply_angular_momentum(g, 2);
      });
      ch.le("angular_momentum_additivity", std::abs(m3 - l3 - s3), 1e-12);
      ch.le("helicity_packet_spin_projection", std::abs(m3 - l3 - 1.0), 0.05);

      const GridField pc0 =
          gaussian_packet(cfg, lat, +1, 0, kbar, 0.16, Vec3::Zero());
      const double l30 = expect(
          pc0, [](const GridField& g) { return grid_apply_orbital(g, 2); });
      ch.le("symmetric_packet_orbital_l3", std::abs(l30), 1e-10);
    }
  });
}

//==============================================================================
// Criterion 7: gauge structure
//==============================================================================

SuiteResult criterion_gauge(const RunConfig& rc) {
  return timed_suite("gauge", 2.0, [&](Checker& ch) {
    std::mt19937_64 rng(rc.seed + 7);
    const PhysicsConfig cfg = rc.cfg;
    const auto ks = random_kset(rng, 5, 0.2, 1.8);
    std::uniform_real_distribution<double> td(0.0, 2.0 * kPi);

    // Total probability (the family norm) is gauge invariant.
    {
      double r_p = 0;
      for (int t = 0; t < 10; ++t) {
        const DiscreteModeField A = random_field(cfg, ks, rng);
        const MetricParams p = random_params(rng);
        const double theta = td(rng);
        const DiscreteModeField At = gauge_transform(A, p, theta);
        r_p = std::max(r_p, rel_c(inner_product_modesum(At, At, p),
                                  inner_product_modesum(A, A, p)));
        r_p = std::max(
            r_p,
            rel_c(inner_product(InnerProductKind::General, At, At, 0.2, p),
                  inner_product(InnerProductKind::General, A, A, 0.2, p)));
      }
      ch.le("total_probability_gauge_invariance", r_p, 1e-13);
    }

    // Generator: finite transform minus first-order expansion is O(theta^2).
    {
      const DiscreteModeField A = random_field(cfg, ks, rng);
      const MetricParams p = random_params(rng);
      const double r1 = gauge_generator_residual(A, p, 0.02);
      const double r2 = gauge_generator_residual(A, p, 0.01);
      ch.le("generator_residual_small_step", r2, 1e-3);
      ch.ok("generator_residual_quadratic_order",
            r2 > 0 && std::abs(r1 / r2 - 4.0) < 1.0);
    }

    // Group classification against a phase-periodicity brute force.
    {
      // Rational weights 1/2, 1/3, 3/4, 2/5, 1, 5/6 -> period 2 pi * 60.
      const std::array<GaugeWeight, 6> w{
          GaugeWeight::exact(1, 2), GaugeWeight::exact(1, 3),
          GaugeWeight::exact(3, 4), GaugeWeight::exact(2, 5),
          GaugeWeight::exact(1, 1), GaugeWeight::exact(5, 6)};
      const GaugeGroupInfo info = classify_gauge_group(w);
      MetricParams p;
      const std::array<double, 6> a{1.0 / 2, 1.0 / 3, 3.0 / 4,
                                    2.0 / 5, 1.0,     5.0 / 6};
      for (int s = 0; s < 6; ++s) p.alpha[s] = std::sqrt(a[s]);
      bool brute_ok = info.compact;
      if (info.compact) {
        // Scan a prime number of subdivisions: the identity must appear at
        // the full period and nowhere earlier.
        const int nsteps = 997;
        int first_identity = -1;
        for (int j = 1; j <= nsteps; ++j) {
          const double theta = info.period * j / nsteps;
          const auto phases = gauge_group_element(p, theta);
          double dev = 0;
          for (const auto& ph : phases)
            dev = std::max(dev, std::abs(ph - complexd(1.0, 0.0)));
          if (dev < 1e-9) {
            first_identity = j;
            break;
          }
        }
        brute_ok = brute_ok && first_identity == nsteps;
        brute_ok = brute_ok && std::abs(info.period - 2.0 * kPi * 60.0) <
                                   1e-9 * info.period;
      }
      ch.ok("rational_weights_compact_u1_with_brute_force_period", brute_ok);

      // An irrational weight makes the closure non-compact: no period.
      std::array<GaugeWeight, 6> wi = w;
      wi[3] = GaugeWeight::irrational();
      const GaugeGroupInfo info2 = classify_gauge_group(wi);
      MetricParams p2 = p;
      p2.alpha[3] = std::sqrt(std::sqrt(2.0));  // weight sqrt(2)
      bool line_ok = !info2.compact;
      for (int j = 1; j <= 4000; ++j) {
        const double theta = 2.0 * kPi * j / 200.0;
        const auto phases = gauge_group_element(p2, theta);
        double dev = 0;
        for (const auto& ph : phases)
          dev = std::max(dev, std::abs(ph - complexd(1.0, 0.0)));
        if (dev < 1e-9) line_ok = false;
      }
      ch.ok("irrational_weight_line_group_no_period", line_ok);
    }
  });
}

//==============================================================================
// Criterion 8: special functions
//==============================================================================

SuiteResult criterion_specfun(const RunConfig& rc) {
  return timed_suite("specfun", 2.0, [&](Checker& ch) {
    (void)rc;
    std::vector<double> zgrid;
    for (int i = 0; i <= 10; ++i)
      zgrid.push_back(0.01 * std::pow(20.0 / 0.01, i / 10.0));

    // Three-term recurrence K_{nu+1} = K_{nu-1} + (2 nu / z) K_nu.
    {
      double r_rec = 0;
      for (const double z : zgrid)
        for (const double nu : {0.25, 0.75, 1.25, 1.75}) {
          const double up = bessel_k(nu + 1.0, z);
          const double down = bessel_k(std::abs(nu - 1.0), z);
          const double mid = bessel_k(nu, z);
          r_rec = std::max(r_rec,
                           std::abs(up - down - (2.0 * nu / z) * mid) / up);
        }
      ch.le("bessel_k_recurrence_rel", r_rec, 1e-9);
    }

    // Half-integer closed form.
    {
      double r_half = 0;
      for (const double z : zgrid) {
        const double closed = std::sqrt(kPi / (2.0 * z)) * std::exp(-z);
        r_half = std::max(r_half,
                          std::abs(bessel_k(0.5, z) - closed) / closed);
      }
      ch.le("bessel_k_half_closed_form_rel", r_half, 1e-12);
    }

    // 1F2 series against an independent brute-force Kahan summation.
    {
      struct Case {
        double a, b1, b2, z;
      };
      const std::vector<Case> cases{{0.5, 1.25, 1.5, 1.0},
                                    {0.25, 0.75, 1.25, 4.0},
                                    {-0.25, 0.25, 0.75, 2.0},
                                    {0.5, 1.5, 1.75, 6.25}};
      double r_f = 0;
      for (const auto& c : cases) {
        double sum = 0.0, comp = 0.0, term = 1.0;
        for (int n = 0; n < 80; ++n) {
          const double y = term - comp;
          const double t = sum + y;
          comp = (t - sum) - y;
          sum = t;
          term *= (c.a + n) / ((c.b1 + n) * (c.b2 + n)) * c.z / (n + 1);
        }
        r_f = std::max(r_f, std::abs(hyp1f2(c.a, c.b1, c.b2, c.z) - sum) /
                                std::abs(sum));
      }
      ch.le("hyp1f2_series_stability_rel", r_f, 1e-11);
    }

    // Gamma functional equation.
    {
      double r_g = 0;
      for (const double x : {0.25, 0.75, 1.25, 2.5})
        r_g = std::max(r_g, std::abs(gamma_fn(x + 1.0) - x * gamma_fn(x)) /
                                gamma_fn(x + 1.0));
      ch.le("gamma_functional_equation_rel", r_g, 1e-12);
    }
  });
}

}  // namespace

//==============================================================================
// Suite registry
//==============================================================================

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "mode_algebra", "gamma_independence", "inner_products", "lorentz",
      "localized",    "observables",        "gauge",          "specfun"};
  return names;
}

SuiteResult run_suite(const std::string& name, const RunConfig& rc) {
  using Runner = SuiteResult (*)(const RunConfig&);
  static const std::map<std::string, Runner> registry{
      {"mode_algebra", &criterion_mode_algebra},
      {"gamma_independence", &criterion_gamma_independence},
      {"inner_products", &criterion_inner_products},
      {"lorentz", &criterion_lorentz},
      {"localized", &criterion_localized},
      {"observables", &criterion_observables},
      {"gauge", &criterion_gauge},
      {"specfun", &criterion_specfun}};
  const auto it = registry.find(name);
  if (it == registry.end())
    throw std::invalid_argument("unknown suite: " + name);
  return it->second(rc);
}

std::vector<SuiteResult> run_suites(const RunConfig& rc,
                                    const std::vector<std::string>& filter) {
  std::vector<SuiteResult> out;
  if (filter.empty()) {
    for (const auto& n : suite_names()) out.push_back(run_suite(n, rc));
    return out;
  }
  for (const auto& n : filter) out.push_back(run_suite(n, rc));
  return out;
}

}  // namespace proca
