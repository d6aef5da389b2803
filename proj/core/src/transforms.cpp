#include "proca/transforms.hpp"

namespace proca {

WaveFunctionSet to_wavefunction(const DiscreteModeField& A, double x0_ref,
                                const MetricParams& params) {
  params.validate();
  WaveFunctionSet w;
  w.cfg = A.cfg;
  w.params = params;
  w.x0_ref = x0_ref;
  const double pref = std::sqrt(A.cfg.kappa / A.cfg.mass);
  for (std::size_t j = 0; j < A.modes.size(); ++j) {
    WaveFunctionSet::Entry e;
    e.k = A.modes[j].k;
    const ModeMatrixSet mm = mode_matrices(e.k, A.cfg);
    for (int eps : kChiralities) {
      const ChiralAmplitude ca = chiral_amplitude(A, j, eps, x0_ref);
      const Mat3 U = foldy_u_general(mm, params, eps, +1);
      e.f[chirality_slot(eps)] = pref * (U * ca.A);
    }
    w.entries.push_back(std::move(e));
  }
  return w;
}

DiscreteModeField from_wavefunction(const WaveFunctionSet& w,
                                    Normalization norm,
                                    const MetricParams& norm_params) {
  DiscreteModeField out;
  out.cfg = w.cfg;
  out.norm = norm;
  out.norm_params = norm_params;
  const double pref = std::sqrt(w.cfg.mass / w.cfg.kappa);
  for (const auto& e : w.entries) {
    const ModeMatrixSet mm = mode_matrices(e.k, w.cfg);
    Mode m;
    m.k = e.k;
    for (int eps : kChiralities) {
      const Mat3 Uinv = foldy_u_general_inv(mm, w.params, eps);
      const Vec3c Aeps = pref * (Uinv * e.f[chirality_slot(eps)]);
      const PolarizationSet pol = polarization_basis(e.k, eps, w.cfg);
      const complexd phase =
          std::exp(-kI * complexd(eps) * mm.omega * w.x0_ref);
      // Transverse coefficients by unitary projection of the spatial parts;
      // longitudinal via khat . A_eps = c_0 N (eps omega / M).
      for (int h : {+1, -1}) {
        const complexd proj = pol.u[helicity_slot(h)].r.dot(Aeps);
        m.c[mode_slot(eps, h)] = proj / (out.N(eps, h) * phase);
      }
      const Vec3c kh = (e.k / e.k.norm()).cast<complexd>();
      const complexd proj0 = kh.dot(Aeps) * (w.cfg.mass /
                                             (complexd(eps) * mm.omega));
      m.c[mode_slot(eps, 0)] = proj0 / (out.N(eps, 0) * phase);
    }
    out.modes.push_back(m);
  }
  return out;
}

complexd wavefunction_time_component(const WaveFunctionSet& w, std::size_t j) {
  const auto& e = w.entries.at(j);
  const ModeMatrixSet mm = mode_matrices(e.k, w.cfg);
  const double M = w.cfg.mass, kap = w.cfg.kappa;
  const complexd a_p0 = w.params.al(+1, 0);
  const complexd a_m0 = w.params.al(-1, 0);
  const Vec3c kc = e.k.cast<complexd>();
  // A^0(x0_ref) = D^{-1/4}/sqrt(M kappa) k . (f_+ / alpha_{+,0}
  //                                           - f_- / alpha_{-,0}).
  const complexd dotp = kc.transpose() * e.f[chirality_slot(+1)];
  const complexd dotm = kc.transpose() * e.f[chirality_slot(-1)];
  return (dotp / a_p0 - dotm / a_m0) /
         (std::sqrt(mm.omega) * std::sqrt(M * kap));
}

WaveFunctionSet evolve_wavefunction(const WaveFunctionSet& w, double dt) {
  WaveFunctionSet out = w;
  out.x0_ref = w.x0_ref + dt;
  for (auto& e : out.entries) {
    const double om = omega_of(e.k, w.cfg);
    for (int eps : kChiralities)
      e.f[chirality_slot(eps)] *=
          std::exp(-kI * complexd(eps) * om * dt);
  }
  return out;
}

DiscreteModeField map_between_products(const DiscreteModeField& A,
                                       const MetricParams& target) {
  target.validate();
  DiscreteModeField out = A;
  for (auto& m : out.modes)
    for (int eps : kChiralities)
      for (int h : kHelicities)
        m.c[mode_slot(eps, h)] /= target.al(eps, h);
  return out;
}

}  // namespace proca
