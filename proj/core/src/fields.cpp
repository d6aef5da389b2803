#include "proca/fields.hpp"

#include <fmt/format.h>

namespace proca {

namespace {

double pw_norm() {
  static const double v = std::pow(2.0 * kPi, -1.5);
  return v;
}

}  // namespace

void DiscreteModeField::validate(double tol) const {
  cfg.validate();
  norm_params.validate();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (!(modes[i].k.norm() > 0.0))
      throw RepresentationError("DiscreteModeField: zero momentum mode");
    for (std::size_t j = i + 1; j < modes.size(); ++j)
      if ((modes[i].k - modes[j].k).norm() <=
          tol * std::max(1.0, modes[i].k.norm()))
        throw RepresentationError(
            fmt::format("DiscreteModeField: coincident modes {} and {}", i, j));
  }
}

DiscreteModeField single_mode_field(const PhysicsConfig& cfg, const Vec3& k,
                                    int eps, int h, complexd c,
                                    Normalization norm) {
  DiscreteModeField f;
  f.cfg = cfg;
  f.norm = norm;
  Mode m;
  m.k = k;
  m.c[mode_slot(eps, h)] = c;
  f.modes.push_back(m);
  f.validate();
  return f;
}

//==============================================================================
// Evaluation
//==============================================================================

std::vector<ModeAmplitude> mode_amplitudes(const DiscreteModeField& f,
                                           double x0) {
  std::vector<ModeAmplitude> out;
  out.reserve(f.modes.size());
  for (const auto& m : f.modes) {
    ModeAmplitude amp;
    amp.k = m.k;
    amp.omega = omega_of(m.k, f.cfg);
    for (int eps : kChiralities) {
      const PolarizationSet pol = polarization_basis(m.k, eps, f.cfg);
      const complexd phase = std::exp(-kI * complexd(eps) * amp.omega * x0);
      for (int h : kHelicities) {
        const complexd w = m.c[mode_slot(eps, h)] * f.N(eps, h) * phase;
        const FourVec& u = pol.u[helicity_slot(h)];
        amp.A = amp.A + w * u;
        amp.Adot = amp.Adot + (-kI * complexd(eps) * amp.omega * w) * u;
      }
    }
    const Vec3c kc = m.k.cast<complexd>();
    amp.E = -amp.Adot.r - kI * kc * amp.A.t;
    // Edot = -Addot - i k Adot^0 with Addot = -omega^2 A.
    amp.Edot = amp.omega * amp.omega * amp.A.r - kI * kc * amp.Adot.t;
    out.push_back(std::move(amp));
  }
  return out;
}

ChiralAmplitude chiral_amplitude(const DiscreteModeField& f, std::size_t j,
                                 int eps, double x0) {
  const Mode& m = f.modes.at(j);
  const double om = omega_of(m.k, f.cfg);
  const PolarizationSet pol = polarization_basis(m.k, eps, f.cfg);
  const complexd phase = std::exp(-kI * complexd(eps) * om * x0);
  ChiralAmplitude out;
  for (int h : kHelicities) {
    const complexd w = m.c[mode_slot(eps, h)] * f.N(eps, h) * phase;
    const FourVec& u = pol.u[helicity_slot(h)];
    out.A += w * u.r;
    out.A0 += w * u.t;
  }
  return out;
}

FourVec evaluate(const DiscreteModeField& f, double x0, const Vec3& x) {
  FourVec out;
  for (const auto& amp : mode_amplitudes(f, x0)) {
    const complexd ph = pw_norm() * std::exp(kI * complexd(amp.k.dot(x)));
    out = out + ph * amp.A;
  }
  return out;
}

FourVec evaluate_dt(const DiscreteModeField& f, double x0, const Vec3& x) {
  FourVec out;
  for (const auto& amp : mode_amplitudes(f, x0)) {
    const complexd ph = pw_norm() * std::exp(kI * complexd(amp.k.dot(x)));
    out = out + ph * amp.Adot;
  }
  return out;
}

FourVec evaluate_electric(const DiscreteModeField& f, double x0,
                          const Vec3& x) {
  FourVec out;
  for (const auto& amp : mode_amplitudes(f, x0)) {
    const complexd ph = pw_norm() * std::exp(kI * complexd(amp.k.dot(x)));
    out.r += ph * amp.E;
  }
  return out;
}

DiscreteModeField evolve(const DiscreteModeField& f, double dt) {
  DiscreteModeField out = f;
  for (auto& m : out.modes) {
    const double om = omega_of(m.k, f.cfg);
    for (int eps : kChiralities) {
      const complexd phase = std::exp(-kI * complexd(eps) * om * dt);
      for (int h : kHelicities) m.c[mode_slot(eps, h)] *= phase;
    }
  }
  return out;
}

//==============================================================================
// Six-component representation
//==============================================================================

std::vector<Vec6> six_component(const DiscreteModeField& f, double x0) {
  std::vector<Vec6> out;
  out.reserve(f.modes.size());
  const double gam = f.cfg.gamma;
  for (const auto& amp : mode_amplitudes(f, x0)) {
    Vec6 psi;
    psi.segment<3>(0) = amp.A.r - kI * gam * amp.E;
    psi.segment<3>(3) = amp.A.r + kI * gam * amp.E;
    out.push_back(psi);
  }
  return out;
}

DiscreteModeField from_six_component(const PhysicsConfig& cfg,
                                     const std::vector<Vec3>& ks,
                                     const std::vector<Vec6>& psi, double x0,
                                     Normalization norm,
                                     const MetricParams& norm_params) {
  if (ks.size() != psi.size())
    throw std::invalid_argument("from_six_component: size mismatch");
  DiscreteModeField out;
  out.cfg = cfg;
  out.norm = norm;
  out.norm_params = norm_params;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const ModeMatrixSet mm = mode_matrices(ks[j], cfg);
    Mode m;
    m.k = ks[j];
    for (int eps : kChiralities) {
      const complexd phase = std::exp(-kI * complexd(eps) * mm.omega * x0);
      for (int h : kHelicities) {
        // Unit-coefficient mode has six-component 2 r Psi_{eps,h}.
        const complexd proj = mm.phi(eps, h).dot(psi[j]);  // <Phi, psi>
        m.c[mode_slot(eps, h)] =
            proj / (2.0 * mm.r * out.N(eps, h) * phase);
      }
    }
    out.modes.push_back(m);
  }
  return out;
}

//==============================================================================
// Initial data
//==============================================================================

FieldInitialData initial_data(const DiscreteModeField& f, double x0) {
  FieldInitialData d;
  d.cfg = f.cfg;
  d.x0 = x0;
  for (const auto& amp : mode_amplitudes(f, x0))
    d.entries.push_back({amp.k, amp.A, amp.Adot});
  return d;
}

FieldInitialData propagate(const FieldInitialData& d, double dt) {
  FieldInitialData out = d;
  out.x0 = d.x0 + dt;
  for (auto& e : out.entries) {
    const double om = omega_of(e.k, d.cfg);
    const double c = std::cos(om * dt), s = std::sin(om * dt);
    const FourVec A = e.A, Ad = e.Adot;
    e.A = c * A + (s / om) * Ad;
    e.Adot = (-om * s) * A + c * Ad;
  }
  return out;
}

double constraint_residual(const FieldInitialData& d) {
  double worst = 0.0;
  for (const auto& e : d.entries) {
    const complexd div =
        kI * (e.k.x() * e.A.r(0) + e.k.y() * e.A.r(1) + e.k.z() * e.A.r(2));
    worst = std::max(worst, std::abs(e.Adot.t + div));
  }
  return worst;
}

DiscreteModeField project_initial_data(const FieldInitialData& d,
                                       Normalization norm,
                                       const MetricParams& norm_params) {
  DiscreteModeField out;
  out.cfg = d.cfg;
  out.norm = norm;
  out.norm_params = norm_params;
  for (const auto& e : d.entries) {
    const double om = omega_of(e.k, d.cfg);
    Mode m;
    m.k = e.k;
    for (int eps : kChiralities) {
      // Chirality split of the four-vector amplitude:
      //   A_eps = (A + eps (i/omega) Adot)/2.
      const FourVec Aeps =
          0.5 * (e.A + (complexd(eps) * kI / om) * e.Adot);
      const PolarizationSet pol = polarization_basis(e.k, eps, d.cfg);
      const complexd phase = std::exp(-kI * complexd(eps) * om * d.x0);
      for (int h : kHelicities) {
        const complexd proj =
            minkowski_dot_conj(pol.u[helicity_slot(h)], Aeps);
        m.c[mode_slot(eps, h)] = proj / (out.N(eps, h) * phase);
      }
    }
    out.modes.push_back(m);
  }
  return out;
}

//==============================================================================
// Splits
//==============================================================================

DiscreteModeField chirality_component(const DiscreteModeField& f, int eps) {
  chirality_slot(eps);  // validates the label
  DiscreteModeField out = f;
  for (auto& m : out.modes)
    for (int e : kChiralities)
      if (e != eps)
        for (int h : kHelicities) m.c[mode_slot(e, h)] = 0.0;
  return out;
}

DiscreteModeField helicity_component(const DiscreteModeField& f, int h) {
  helicity_slot(h);  // validates the label
  DiscreteModeField out = f;
  for (auto& m : out.modes)
    for (int hh : kHelicities)
      if (hh != h)
        for (int e : kChiralities) m.c[mode_slot(e, hh)] = 0.0;
  return out;
}

}  // namespace proca
