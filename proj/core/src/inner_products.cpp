#include "proca/inner_products.hpp"

namespace proca {

namespace {

//! Complex 3-vector L2 pairing with conjugation on the first slot.
complexd pair3(const Vec3c& a, const Vec3c& b) { return a.dot(b); }

//! Find the mode of B matching momentum k (or -1).
long match_mode(const DiscreteModeField& B, const Vec3& k) {
  for (std::size_t j = 0; j < B.modes.size(); ++j)
    if ((B.modes[j].k - k).norm() <= 1e-9 * std::max(1.0, k.norm()))
      return static_cast<long>(j);
  return -1;
}

struct PairContext {
  ModeAmplitude a;  //!< amplitude of A's mode
  ModeAmplitude b;  //!< amplitude of B's matching mode
  ModeMatrixSet mm;
};

//! Iterate matched mode pairs of A and B at time x0.
template <typename F>
void for_matched(const DiscreteModeField& A, const DiscreteModeField& B,
                 double x0, F&& fn) {
  if (std::abs(A.cfg.mass - B.cfg.mass) > 1e-14 ||
      std::abs(A.cfg.gamma - B.cfg.gamma) > 1e-14 ||
      std::abs(A.cfg.kappa - B.cfg.kappa) > 1e-14)
    throw RepresentationError(
        "inner_product: fields with different physics configs");
  const auto ampsA = mode_amplitudes(A, x0);
  const auto ampsB = mode_amplitudes(B, x0);
  for (std::size_t i = 0; i < ampsA.size(); ++i) {
    const long j = match_mode(B, A.modes[i].k);
    if (j < 0) continue;
    PairContext ctx{ampsA[i], ampsB[static_cast<std::size_t>(j)],
                    mode_matrices(A.modes[i].k, A.cfg)};
    fn(ctx);
  }
}

}  // namespace

complexd inner_product(InnerProductKind kind, const DiscreteModeField& A,
                       const DiscreteModeField& B, double x0,
                       const MetricParams& params) {
  const double M = A.cfg.mass, kap = A.cfg.kappa;
  complexd total{};
  switch (kind) {
    case InnerProductKind::Sigma3: {
      const double g = kap / (2.0 * M);
      for_matched(A, B, x0, [&](const PairContext& c) {
        total += kI * g * (pair3(c.a.E, c.b.A.r) - pair3(c.a.A.r, c.b.E));
      });
      break;
    }
    case InnerProductKind::Canonical: {
      for_matched(A, B, x0, [&](const PairContext& c) {
        const double inv_sq = 1.0 / c.mm.omega;  // D^{-1/2} on this mode
        total += (kap / (2.0 * M)) *
                 (pair3(c.a.A.r, inv_sq * c.b.Edot) -
                  pair3(c.a.E, inv_sq * c.b.Adot.r));
      });
      break;
    }
    case InnerProductKind::General: {
      params.validate();
      for_matched(A, B, x0, [&](const PairContext& c) {
        const Mat3 thp = theta_operator(c.mm, params, +1, 0);
        const Mat3 thm = theta_operator(c.mm, params, -1, 0);
        const double inv_sq = 1.0 / c.mm.omega;
        const Vec3c tEd = thp * (inv_sq * c.b.Edot);
        const Vec3c tAd = thp * (inv_sq * c.b.Adot.r);
        const Vec3c tE = thm * c.b.E;
        const Vec3c tA = thm * c.b.A.r;
        total += (kap / (2.0 * M)) *
                 (pair3(c.a.A.r, tEd) - pair3(c.a.E, tAd) -
                  kI * (pair3(c.a.A.r, tE) - pair3(c.a.E, tA)));
      });
      break;
    }
  }
  return total;
}

complexd inner_product_six_component(const DiscreteModeField& A,
                                     const DiscreteModeField& B, double x0) {
  const double M = A.cfg.mass, kap = A.cfg.kappa, gam = A.cfg.gamma;
  const auto psiA = six_component(A, x0);
  const auto psiB = six_component(B, x0);
  complexd total{};
  for (std::size_t i = 0; i < psiA.size(); ++i) {
    const long j = match_mode(B, A.modes[i].k);
    if (j < 0) continue;
    const ModeMatrixSet mm = mode_matrices(A.modes[i].k, A.cfg);
    total += (kap / (4.0 * gam * M)) *
             psiA[i].dot(mm.eta_plus * psiB[static_cast<std::size_t>(j)]);
  }
  return total;
}

complexd inner_product_sigma3_six(const DiscreteModeField& A,
                                  const DiscreteModeField& B, double x0) {
  const double M = A.cfg.mass, kap = A.cfg.kappa, gam = A.cfg.gamma;
  const double g = kap / (2.0 * M);
  const auto psiA = six_component(A, x0);
  const auto psiB = six_component(B, x0);
  complexd total{};
  for (std::size_t i = 0; i < psiA.size(); ++i) {
    const long j = match_mode(B, A.modes[i].k);
    if (j < 0) continue;
    total += (g / (2.0 * gam)) *
             psiA[i].dot(sigma3_66() * psiB[static_cast<std::size_t>(j)]);
  }
  return total;
}

complexd inner_product_modesum(const DiscreteModeField& A,
                               const DiscreteModeField& B,
                               const MetricParams& params) {
  const double M = A.cfg.mass, kap = A.cfg.kappa;
  complexd total{};
  for (std::size_t i = 0; i < A.modes.size(); ++i) {
    const long j = match_mode(B, A.modes[i].k);
    if (j < 0) continue;
    const double om = omega_of(A.modes[i].k, A.cfg);
    for (int eps : kChiralities)
      for (int h : kHelicities)
        total += (kap / M) * params.a(eps, h) * om * A.N(eps, h) *
                 B.N(eps, h) *
                 std::conj(A.coeff(i, eps, h)) *
                 B.coeff(static_cast<std::size_t>(j), eps, h);
  }
  return total;
}

complexd inner_product_sigma3_sector(const DiscreteModeField& A,
                                     const DiscreteModeField& B, double x0,
                                     int eps) {
  return inner_product(InnerProductKind::Sigma3, chirality_component(A, eps),
                       chirality_component(B, eps), x0);
}

complexd decompose_as_sigma3(const DiscreteModeField& A,
                             const DiscreteModeField& B, double x0,
                             const MetricParams& params) {
  complexd total(0.0, 0.0);
  for (int eps : kChiralities) {
    const DiscreteModeField Ae = chirality_component(A, eps);
    const DiscreteModeField Be = chirality_component(B, eps);
    for (int h : kHelicities) {
      const complexd s =
          inner_product(InnerProductKind::Sigma3, helicity_component(Ae, h),
                        helicity_component(Be, h), x0);
      total += static_cast<double>(eps) * params.a(eps, h) * s;
    }
  }
  return total;
}

Eigen::MatrixXcd gram_matrix(InnerProductKind kind,
                             const std::vector<DiscreteModeField>& fields,
                             double x0, const MetricParams& params) {
  const auto n = static_cast<Eigen::Index>(fields.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = inner_product(kind, fields[static_cast<std::size_t>(i)],
                              fields[static_cast<std::size_t>(j)], x0, params);
  return g;
}

}  // namespace proca
