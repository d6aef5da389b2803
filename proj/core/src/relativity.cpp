#include "proca/relativity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "proca/inner_products.hpp"

namespace proca {
namespace {

constexpr double kMatchTol = 1e-9;

//! Chirality-resolved plane-wave atom: amplitude four-vector (coefficients
//! times polarization vectors, no phases) at wave four-vector (eps omega, k).
struct Atom {
  Vec3 k = Vec3::Zero();
  double omega = 0.0;
  int eps = +1;
  FourVec amp;
};

std::vector<Atom> collect_atoms(const DiscreteModeField& f) {
  std::vector<Atom> out;
  for (std::size_t j = 0; j < f.modes.size(); ++j) {
    const Vec3& k = f.modes[j].k;
    const double omega = omega_of(k, f.cfg);
    for (int eps : kChiralities) {
      Atom a;
      a.k = k;
      a.omega = omega;
      a.eps = eps;
      bool any = false;
      const PolarizationSet pol = polarization_basis(k, eps, f.cfg);
      for (int h : kHelicities) {
        const complexd c = f.coeff(j, eps, h);
        if (c == complexd{0.0, 0.0}) continue;
        any = true;
        const complexd w = c * f.N(eps, h);
        const FourVec& u = pol.u[helicity_slot(h)];
        a.amp.t += w * u.t;
        a.amp.r += w * u.r;
      }
      if (any) out.push_back(a);
    }
  }
  return out;
}

//! Apply the boost matrix Lambda(beta) (the convention with k' = k - eps
//! omega beta at first order) to a complex four-vector.
FourVec apply_boost(const FourVec& v, const Vec3& beta, double gl) {
  const double b2 = beta.squaredNorm();
  FourVec out;
  const complexd bdotr = beta(0) * v.r(0) + beta(1) * v.r(1) + beta(2) * v.r(2);
  out.t = gl * (v.t - bdotr);
  const double proj = b2 > 0.0 ? (gl - 1.0) / b2 : 0.0;
  out.r = v.r + (proj * bdotr - gl * v.t) * beta.cast<complexd>();
  return out;
}

//! Current density of a pair of atoms, optionally with the chirality weight
//! eps_b of the non-conjugated side (canonical current); without it the
//! Sigma3-current results.
//!   J^mu_pair = (i kappa / 2M) w_b { a*_nu F_b^{nu mu} - F_a^{nu mu *} b^nu }
//! with F^{nu mu} = i (K^nu amp^mu - K^mu amp^nu).
struct PairCurrent {
  complexd J[4];
};

PairCurrent pair_current(const Atom& a, const Atom& b, const PhysicsConfig& cfg,
                         bool chirality_weight) {
  const double Ka[4] = {a.eps * a.omega, a.k(0), a.k(1), a.k(2)};
  const double Kb[4] = {b.eps * b.omega, b.k(0), b.k(1), b.k(2)};
  const complexd av[4] = {a.amp.t, a.amp.r(0), a.amp.r(1), a.amp.r(2)};
  const complexd bv[4] = {b.amp.t, b.amp.r(0), b.amp.r(1), b.amp.r(2)};
  const double eta[4] = {-1.0, 1.0, 1.0, 1.0};
  const double wb = chirality_weight ? static_cast<double>(b.eps) : 1.0;
  const complexd pref =
      kI * cfg.kappa / (2.0 * cfg.mass) * wb * std::pow(2.0 * kPi, -3.0);

  PairCurrent out;
  for (int mu = 0; mu < 4; ++mu) {
    complexd term1{0.0, 0.0};
    complexd term2{0.0, 0.0};
    for (int nu = 0; nu < 4; ++nu) {
      const complexd Fb = kI * (Kb[nu] * bv[mu] - Kb[mu] * bv[nu]);
      const complexd Fa = kI * (Ka[nu] * av[mu] - Ka[mu] * av[nu]);
      term1 += eta[nu] * std::conj(av[nu]) * Fb;
      term2 += eta[nu] * std::conj(Fa) * bv[nu];
    }
    out.J[mu] = pref * (term1 - term2);
  }
  return out;
}

complexd pair_phase(const Atom& a, const Atom& b, double x0, const Vec3& x) {
  const double arg =
      (b.k - a.k).dot(x) - (b.eps * b.omega - a.eps * a.omega) * x0;
  return std::exp(kI * arg);
}

FourVec current_impl(const DiscreteModeField& f, double x0, const Vec3& x,
                     bool chirality_weight) {
  f.validate();
  const std::vector<Atom> atoms = collect_atoms(f);
  complexd J[4] = {};
  for (const Atom& a : atoms) {
    for (const Atom& b : atoms) {
      const PairCurrent pc = pair_current(a, b, f.cfg, chirality_weight);
      const complexd ph = pair_phase(a, b, x0, x);
      for (int mu = 0; mu < 4; ++mu) J[mu] += ph * pc.J[mu];
    }
  }
  FourVec out;
  out.t = J[0];
  out.r = Vec3c(J[1], J[2], J[3]);
  return out;
}

}  // namespace

//==============================================================================
// Boosts
//==============================================================================

DiscreteModeField boost_field(const DiscreteModeField& f, const Vec3& beta) {
  const double b2 = beta.squaredNorm();
  if (!(b2 < 1.0))
    throw std::domain_error("boost_field: |beta| must be < 1");
  f.validate();
  if (b2 == 0.0) return f;
  const double gl = 1.0 / std::sqrt(1.0 - b2);

  struct Piece {
    std::size_t source = 0;
    Vec3 kp = Vec3::Zero();
    int eps = +1;
    std::array<complexd, 3> c{};
  };
  std::vector<Piece> pieces;

  for (std::size_t j = 0; j < f.modes.size(); ++j) {
    const Vec3& k = f.modes[j].k;
    const double omega = omega_of(k, f.cfg);
    for (int eps : kChiralities) {
      bool any = false;
      for (int h : kHelicities)
        if (f.coeff(j, eps, h) != complexd{0.0, 0.0}) any = true;
      if (!any) continue;

      // Boosted wave four-vector (eps omega, k) -> (eps omega', k').
      const double p0 = gl * (eps * omega - beta.dot(k));
      const Vec3 kp = k + ((gl - 1.0) / b2 * beta.dot(k) - gl * eps * omega) *
                              beta;
      const double omegap = eps * p0;
      if (kp.norm() < kMatchTol)
        throw RepresentationError(
            "boost_field: a mode is boosted to zero spatial momentum");

      // Boosted amplitude, re-expanded in the polarization basis at k'.
      const PolarizationSet pol = polarization_basis(k, eps, f.cfg);
      FourVec w;
      for (int h : kHelicities) {
        const complexd c = f.coeff(j, eps, h);
        if (c == complexd{0.0, 0.0}) continue;
        const complexd cw = c * f.N(eps, h);
        const FourVec& u = pol.u[helicity_slot(h)];
        w.t += cw * u.t;
        w.r += cw * u.r;
      }
      const FourVec wp = apply_boost(w, beta, gl);
      const PolarizationSet polp = polarization_basis(kp, eps, f.cfg);
      Piece piece;
      piece.source = j;
      piece.kp = kp;
      piece.eps = eps;
      const double rescale = std::sqrt(omega / omegap);
      for (int h : kHelicities) {
        const complexd d =
            minkowski_dot_conj(polp.u[helicity_slot(h)], wp);
        piece.c[helicity_slot(h)] = rescale * d / f.N(eps, h);
      }
      pieces.push_back(piece);
    }
  }

  // Two pieces may share an output momentum only if they came from the same
  // source mode (the beta -> 0 limit, where both chirality halves stay put);
  // anything else is a collision the Kronecker convention cannot represent.
  DiscreteModeField out;
  out.cfg = f.cfg;
  out.norm = f.norm;
  out.norm_params = f.norm_params;
  std::vector<std::size_t> mode_source;
  for (const Piece& p : pieces) {
    bool merged = false;
    for (std::size_t m = 0; m < out.modes.size(); ++m) {
      if ((out.modes[m].k - p.kp).norm() >=
          kMatchTol * std::max(1.0, p.kp.norm()))
        continue;
      if (mode_source[m] != p.source)
        throw RepresentationError(
            "boost_field: two modes are boosted onto one momentum");
      for (int h : kHelicities)
        out.modes[m].c[mode_slot(p.eps, h)] += p.c[helicity_slot(h)];
      merged = true;
      break;
    }
    if (merged) continue;
    Mode mode;
    mode.k = p.kp;
    for (int h : kHelicities)
      mode.c[mode_slot(p.eps, h)] = p.c[helicity_slot(h)];
    out.modes.push_back(mode);
    mode_source.push_back(p.source);
  }
  out.validate();
  return out;
}

DiscreteModeField boost_field_first_order(const DiscreteModeField& f,
                                          const Vec3& beta) {
  if (!(beta.squaredNorm() < 1.0))
    throw std::domain_error("boost_field_first_order: |beta| must be < 1");
  f.validate();

  FieldInitialData data;
  data.cfg = f.cfg;
  data.x0 = 0.0;
  for (std::size_t j = 0; j < f.modes.size(); ++j) {
    const Vec3& k = f.modes[j].k;
    const double omega = omega_of(k, f.cfg);
    for (int eps : kChiralities) {
      const ChiralAmplitude ca = chiral_amplitude(f, j, eps, 0.0);
      if (ca.A.norm() == 0.0 && std::abs(ca.A0) == 0.0) continue;

      // E = -Adot - i k A^0 with Adot = -i eps omega A for a chiral part.
      const Vec3c E = kI * (eps * omega) * ca.A - kI * ca.A0 * k.cast<complexd>();
      const Vec3c B = kI * k.cast<complexd>().cross(ca.A);

      const Vec3 kp = k - (eps * omega) * beta;
      const complexd A0p =
          ca.A0 - (beta(0) * ca.A(0) + beta(1) * ca.A(1) + beta(2) * ca.A(2));
      const Vec3c Ap = ca.A - ca.A0 * beta.cast<complexd>();
      const Vec3c Ep = E + beta.cast<complexd>().cross(B);

      FieldInitialData::Entry e;
      e.k = kp;
      e.A.t = A0p;
      e.A.r = Ap;
      e.Adot.r = -Ep - kI * A0p * kp.cast<complexd>();
      e.Adot.t =
          -kI * (kp(0) * Ap(0) + kp(1) * Ap(1) + kp(2) * Ap(2));

      bool merged = false;
      for (auto& prev : data.entries) {
        if ((prev.k - kp).norm() < 1e-12 * std::max(1.0, kp.norm())) {
          prev.A = prev.A + e.A;
          prev.Adot = prev.Adot + e.Adot;
          merged = true;
          break;
        }
      }
      if (!merged) data.entries.push_back(e);
    }
  }
  return project_initial_data(data, f.norm, f.norm_params);
}

//==============================================================================
// Currents
//==============================================================================

FourVec current_canonical(const DiscreteModeField& f, double x0,
                          const Vec3& x) {
  return current_impl(f, x0, x, true);
}

FourVec current_sigma3(const DiscreteModeField& f, double x0, const Vec3& x) {
  return current_impl(f, x0, x, false);
}

complexd current_j0_general(const DiscreteModeField& f, double x0,
                            const Vec3& x, const MetricParams& params) {
  f.validate();
  params.validate();
  const double pw = std::pow(2.0 * kPi, -1.5);
  const std::vector<ModeAmplitude> amps = mode_amplitudes(f, x0);

  Vec3c SA = Vec3c::Zero();   // A(x)
  Vec3c SE = Vec3c::Zero();   // E(x)
  Vec3c T1 = Vec3c::Zero();   // Theta_{+,0} (1/omega) Edot
  Vec3c T2 = Vec3c::Zero();   // Theta_{+,0} (1/omega) Adot
  Vec3c T3 = Vec3c::Zero();   // Theta_{-,0} E
  Vec3c T4 = Vec3c::Zero();   // Theta_{-,0} A
  for (const ModeAmplitude& m : amps) {
    const ModeMatrixSet mm = mode_matrices(m.k, f.cfg);
    const Mat3 thp = theta_operator(mm, params, +1, 0);
    const Mat3 thm = theta_operator(mm, params, -1, 0);
    const complexd ph = pw * std::exp(kI * m.k.dot(x));
    SA += ph * m.A.r;
    SE += ph * m.E;
    T1 += ph * (thp * (m.Edot / m.omega)).eval();
    T2 += ph * (thp * (m.Adot.r / m.omega)).eval();
    T3 += ph * (thm * m.E).eval();
    T4 += ph * (thm * m.A.r).eval();
  }
  const double g = f.cfg.kappa / (2.0 * f.cfg.mass);
  return g * (SA.dot(T1) - SE.dot(T2) - kI * (SA.dot(T3) - SE.dot(T4)));
}

complexd current_divergence(const DiscreteModeField& f, double x0,
                            const Vec3& x) {
  f.validate();
  const std::vector<Atom> atoms = collect_atoms(f);
  complexd div{0.0, 0.0};
  for (const Atom& a : atoms) {
    for (const Atom& b : atoms) {
      const PairCurrent pc = pair_current(a, b, f.cfg, true);
      const complexd ph = pair_phase(a, b, x0, x);
      const double dk0 = b.eps * b.omega - a.eps * a.omega;
      const Vec3 dk = b.k - a.k;
      // d_mu e^{i dPhi} = i (-dk0, dk)_mu e^{i dPhi} contracted with J^mu.
      complexd jet = -dk0 * pc.J[0];
      for (int i = 0; i < 3; ++i) jet += dk(i) * pc.J[i + 1];
      div += kI * ph * jet;
    }
  }
  return div;
}

complexd integral_j0_general(const DiscreteModeField& f,
                             const MetricParams& params) {
  f.validate();
  params.validate();
  const std::vector<ModeAmplitude> amps = mode_amplitudes(f, 0.0);
  complexd total{0.0, 0.0};
  for (const ModeAmplitude& m : amps) {
    const ModeMatrixSet mm = mode_matrices(m.k, f.cfg);
    const Mat3 thp = theta_operator(mm, params, +1, 0);
    const Mat3 thm = theta_operator(mm, params, -1, 0);
    total += m.A.r.dot((thp * (m.Edot / m.omega)).eval()) -
             m.E.dot((thp * (m.Adot.r / m.omega)).eval()) -
             kI * (m.A.r.dot((thm * m.E).eval()) -
                   m.E.dot((thm * m.A.r).eval()));
  }
  return f.cfg.kappa / (2.0 * f.cfg.mass) * total;
}

//==============================================================================
// Probability density and current
//==============================================================================

double probability_density(const DiscreteModeField& f, double x0,
                           const Vec3& x) {
  f.validate();
  const double pw = std::pow(2.0 * kPi, -1.5);
  const std::vector<ModeAmplitude> amps = mode_amplitudes(f, x0);
  Vec3c UA = Vec3c::Zero();
  Vec3c UAc = Vec3c::Zero();
  for (const ModeAmplitude& m : amps) {
    const ModeMatrixSet mm = mode_matrices(m.k, f.cfg);
    const Mat3 U = foldy_u(mm);
    const complexd ph = pw * std::exp(kI * m.k.dot(x));
    UA += ph * (U * m.A.r).eval();
    UAc += ph * (U * ((kI / m.omega) * m.Adot.r)).eval();
  }
  return f.cfg.kappa / (2.0 * f.cfg.mass) *
         (UA.squaredNorm() + UAc.squaredNorm());
}

double probability_density_general(const DiscreteModeField& f, double x0,
                                   const Vec3& x, const MetricParams& params) {
  f.validate();
  params.validate();
  const double pw = std::pow(2.0 * kPi, -1.5);
  const std::vector<ModeAmplitude> amps = mode_amplitudes(f, x0);
  Vec3c Ap = Vec3c::Zero(), Am = Vec3c::Zero();
  Vec3c Cp = Vec3c::Zero(), Cm = Vec3c::Zero();
  for (const ModeAmplitude& m : amps) {
    const ModeMatrixSet mm = mode_matrices(m.k, f.cfg);
    const Mat3 Up = foldy_u_general(mm, params, +1, +1);
    const Mat3 Um = foldy_u_general(mm, params, -1, +1);
    const complexd ph = pw * std::exp(kI * m.k.dot(x));
    const Vec3c ac = (kI / m.omega) * m.Adot.r;
    Ap += ph * (Up * m.A.r).eval();
    Am += ph * (Um * m.A.r).eval();
    Cp += ph * (Up * ac).eval();
    Cm += ph * (Um * ac).eval();
  }
  const double quad = Ap.squaredNorm() + Am.squaredNorm() + Cp.squaredNorm() +
                      Cm.squaredNorm() +
                      2.0 * (Ap.dot(Cp) - Am.dot(Cm)).real();
  return f.cfg.kappa / (4.0 * f.cfg.mass) * quad;
}

double integral_probability_general(const DiscreteModeField& f,
                                    const MetricParams& params) {
  f.validate();
  params.validate();
  const std::vector<ModeAmplitude> amps = mode_amplitudes(f, 0.0);
  double total = 0.0;
  for (const ModeAmplitude& m : amps) {
    const ModeMatrixSet mm = mode_matrices(m.k, f.cfg);
    const Mat3 Up = foldy_u_general(mm, params, +1, +1);
    const Mat3 Um = foldy_u_general(mm, params, -1, +1);
    const Vec3c ac = (kI / m.omega) * m.Adot.r;
    const Vec3c a = Up * m.A.r;
    const Vec3c b = Um * m.A.r;
    const Vec3c c = Up * ac;
    const Vec3c d = Um * ac;
    total += a.squaredNorm() + b.squaredNorm() + c.squaredNorm() +
             d.squaredNorm() + 2.0 * (a.dot(c) - b.dot(d)).real();
  }
  return f.cfg.kappa / (4.0 * f.cfg.mass) * total;
}

namespace {

//! Shared mode-sum accumulators for the probability current and its
//! divergence. All entries are evaluated fields at (x0, x).
struct CurrentSums {
  Vec3c X1 = Vec3c::Zero();   // U A
  Vec3c X2 = Vec3c::Zero();   // U A_c
  Vec3c Xd1 = Vec3c::Zero();  // d0 (U A)   = U Adot
  Vec3c Xd2 = Vec3c::Zero();  // d0 (U A_c) = -i omega U A per mode
  std::array<Vec3c, 3> Y1{Vec3c::Zero(), Vec3c::Zero(), Vec3c::Zero()};
  std::array<Vec3c, 3> Y2{Vec3c::Zero(), Vec3c::Zero(), Vec3c::Zero()};
  Vec3c divY1 = Vec3c::Zero();
  Vec3c divY2 = Vec3c::Zero();
  std::array<Vec3c, 3> gradX1{Vec3c::Zero(), Vec3c::Zero(), Vec3c::Zero()};
  std::array<Vec3c, 3> gradX2{Vec3c::Zero(), Vec3c::Zero(), Vec3c::Zero()};
  complexd divX1{}, divX2{};
  Vec3c Z1 = Vec3c::Zero();  // G Adot,  G = U / (omega (omega + M))
  Vec3c Z2 = Vec3c::Zero();  // G Adot_c = -i omega G A per mode
  complexd divZ1{}, divZ2{};
  std::array<Vec3c, 3> gradZ1{Vec3c::Zero(), Vec3c::Zero(), Vec3c::Zero()};
  std::array<Vec3c, 3> gradZ2{Vec3c::Zero(), Vec3c::Zero(), Vec3c::Zero()};
};

CurrentSums accumulate_current_sums(const DiscreteModeField& f, double x0,
                                    const Vec3& x) {
  const double pw = std::pow(2.0 * kPi, -1.5);
  const double M = f.cfg.mass;
  CurrentSums s;
  for (const ModeAmplitude& m : mode_amplitudes(f, x0)) {
    const ModeMatrixSet mm = mode_matrices(m.k, f.cfg);
    const Mat3 U = foldy_u(mm);
    const double omega = m.omega;
    const double D = omega * omega;
    const double gdenom = omega * (omega + M);
    const complexd ph = pw * std::exp(kI * m.k.dot(x));
    const Vec3c a = ph * (U * m.A.r).eval();       // U A
    const Vec3c ad = ph * (U * m.Adot.r).eval();   // U Adot
    const Vec3c ga = a / gdenom;                   // G A
    const Vec3c gad = ad / gdenom;                 // G Adot
    const Vec3c kc = m.k.cast<complexd>();

    s.X1 += a;
    s.X2 += (kI / omega) * ad;
    s.Xd1 += ad;
    s.Xd2 += -kI * omega * a;
    s.divX1 += kI * kc.dot(a);  // i k . a (k real)
    s.divX2 += kI * kc.dot((kI / omega) * ad);
    s.Z1 += gad;
    s.Z2 += -kI * omega * ga;
    s.divZ1 += kI * kc.dot(gad);
    s.divZ2 += omega * kc.dot(ga);
    s.divY1 += (-m.k.squaredNorm() / D) * ad;
    s.divY2 += (kI * m.k.squaredNorm() / omega) * a;
    for (int i = 0; i < 3; ++i) {
      s.Y1[i] += (kI * m.k(i) / D) * ad;
      s.Y2[i] += (m.k(i) / omega) * a;
      s.gradX1[i] += kI * m.k(i) * a;
      s.gradX2[i] += kI * m.k(i) * ((kI / omega) * ad);
      s.gradZ1[i] += kI * m.k(i) * gad;
      s.gradZ2[i] += omega * m.k(i) * ga;
    }
  }
  return s;
}

}  // namespace

FourVec probability_current(const DiscreteModeField& f, double x0,
                            const Vec3& x) {
  f.validate();
  const CurrentSums s = accumulate_current_sums(f, x0, x);
  const double g = f.cfg.kappa / (2.0 * f.cfg.mass);

  FourVec out;
  out.t = g * (s.X1.squaredNorm() + s.X2.squaredNorm());
  for (int i = 0; i < 3; ++i) {
    double main = (s.X1.dot(s.Y1[i]) + s.X2.dot(s.Y2[i])).real();
    double ups = (std::conj(s.X1(i)) * s.divZ1).real() +
                 (std::conj(s.X2(i)) * s.divZ2).real();
    for (int j = 0; j < 3; ++j) {
      ups -= (std::conj(s.X1(j)) * s.gradZ1[j](i)).real();
      ups -= (std::conj(s.X2(j)) * s.gradZ2[j](i)).real();
    }
    out.r(i) = g * (main + ups);
  }
  return out;
}

double probability_current_divergence(const DiscreteModeField& f, double x0,
                                      const Vec3& x) {
  f.validate();
  const CurrentSums s = accumulate_current_sums(f, x0, x);
  const double g = f.cfg.kappa / (2.0 * f.cfg.mass);

  // d0 J^0.
  double div = 2.0 * (s.X1.dot(s.Xd1) + s.X2.dot(s.Xd2)).real();
  // d_i of the main term.
  for (int i = 0; i < 3; ++i)
    div += (s.gradX1[i].dot(s.Y1[i]) + s.gradX2[i].dot(s.Y2[i])).real();
  div += (s.X1.dot(s.divY1) + s.X2.dot(s.divY2)).real();
  // d_i of Upsilon^i (the grad(div) parts cancel pairwise).
  div += (std::conj(s.divX1) * s.divZ1).real() +
         (std::conj(s.divX2) * s.divZ2).real();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      div -= (std::conj(s.gradX1[i](j)) * s.gradZ1[j](i)).real();
      div -= (std::conj(s.gradX2[i](j)) * s.gradZ2[j](i)).real();
    }
  return g * div;
}

}  // namespace proca
