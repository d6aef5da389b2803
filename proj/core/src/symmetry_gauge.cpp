#include "proca/symmetry_gauge.hpp"

#include <map>
#include <numeric>

#include <fmt/format.h>

namespace proca {

//==============================================================================
// Discrete symmetries
//==============================================================================

DiscreteModeField apply_charge(const DiscreteModeField& f) {
  DiscreteModeField out = f;
  for (auto& m : out.modes)
    for (int eps : kChiralities)
      for (int h : kHelicities) m.c[mode_slot(eps, h)] *= complexd(eps);
  return out;
}

DiscreteModeField apply_pt(const DiscreteModeField& f) {
  DiscreteModeField out;
  out.cfg = f.cfg;
  out.norm = f.norm;
  out.norm_params = f.norm_params;
  for (std::size_t j = 0; j < f.modes.size(); ++j) {
    const Vec3 kr = -f.modes[j].k;
    // Merge into an existing output mode at kr if present.
    Mode* slot = nullptr;
    for (auto& m : out.modes)
      if ((m.k - kr).norm() <= 1e-9 * std::max(1.0, kr.norm())) {
        slot = &m;
        break;
      }
    if (slot == nullptr) {
      out.modes.push_back(Mode{kr, {}});
      slot = &out.modes.back();
    }
    for (int eps : kChiralities) {
      const PolarizationSet pol = polarization_basis(f.modes[j].k, eps, f.cfg);
      const PolarizationSet polr = polarization_basis(kr, eps, f.cfg);
      // Conjugated amplitude with reflected time component:
      //   amp = sum_h c* N (-u^0*, uvec*).
      FourVec amp;
      for (int h : kHelicities) {
        const complexd w =
            std::conj(f.modes[j].c[mode_slot(eps, h)]) * f.N(eps, h);
        const FourVec& u = pol.u[helicity_slot(h)];
        amp = amp + w * FourVec{-std::conj(u.t), u.r.conjugate()};
      }
      for (int h : kHelicities) {
        const complexd proj =
            minkowski_dot_conj(polr.u[helicity_slot(h)], amp);
        slot->c[mode_slot(eps, h)] += proj / out.N(eps, h);
      }
    }
  }
  return out;
}

DiscreteModeField pt_symmetrize(const DiscreteModeField& f) {
  const DiscreteModeField pt = apply_pt(f);
  // Union of mode sets with averaged coefficients.
  DiscreteModeField out = f;
  for (auto& m : out.modes)
    for (auto& c : m.c) c *= 0.5;
  for (const auto& pm : pt.modes) {
    Mode* slot = nullptr;
    for (auto& m : out.modes)
      if ((m.k - pm.k).norm() <= 1e-9 * std::max(1.0, pm.k.norm())) {
        slot = &m;
        break;
      }
    if (slot == nullptr) {
      out.modes.push_back(Mode{pm.k, {}});
      slot = &out.modes.back();
    }
    for (int i = 0; i < 6; ++i) slot->c[i] += 0.5 * pm.c[i];
  }
  return out;
}

//==============================================================================
// Gauge transformations
//==============================================================================

DiscreteModeField gauge_transform(const DiscreteModeField& f,
                                  const MetricParams& params, double theta) {
  params.validate();
  DiscreteModeField out = f;
  for (auto& m : out.modes)
    for (int eps : kChiralities)
      for (int h : kHelicities)
        m.c[mode_slot(eps, h)] *=
            std::exp(-kI * complexd(eps) * params.a(eps, h) * theta);
  return out;
}

std::array<complexd, 6> gauge_group_element(const MetricParams& params,
                                            double theta) {
  std::array<complexd, 6> out;
  for (int eps : kChiralities)
    for (int h : kHelicities)
      out[mode_slot(eps, h)] =
          std::exp(-kI * complexd(eps) * params.a(eps, h) * theta);
  return out;
}

GaugeWeight GaugeWeight::exact(long long num, long long den) {
  GaugeWeight w;
  w.rational = true;
  w.num = num;
  w.den = den;
  return w;
}

GaugeWeight GaugeWeight::irrational() {
  GaugeWeight w;
  w.rational = false;
  return w;
}

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::invalid_argument("classify_gauge_group: weight overflow");
  return r;
}

}  // namespace

GaugeGroupInfo classify_gauge_group(const std::array<GaugeWeight, 6>& w) {
  for (const auto& g : w) {
    if (!g.rational) continue;
    if (g.den == 0)
      throw std::invalid_argument(
          "classify_gauge_group: zero denominator in exact weight");
    if (g.num <= 0 || g.den < 0)
      throw std::invalid_argument(
          "classify_gauge_group: weights must be positive");
  }
  GaugeGroupInfo info;
  for (const auto& g : w)
    if (!g.rational) {
      info.compact = false;  // dense winding: closure is the whole line
      return info;
    }
  // Reduce, take d = lcm(dens), n_i = num_i d / den_i, g = gcd(n_i);
  // the period is theta* = 2 pi d / g.
  std::array<long long, 6> num{}, den{};
  for (int i = 0; i < 6; ++i) {
    const long long g0 = std::gcd(w[i].num, w[i].den);
    num[i] = w[i].num / g0;
    den[i] = w[i].den / g0;
  }
  long long d = 1;
  for (int i = 0; i < 6; ++i) d = checked_mul(d / std::gcd(d, den[i]), den[i]);
  long long g = 0;
  for (int i = 0; i < 6; ++i)
    g = std::gcd(g, checked_mul(num[i], d / den[i]));
  info.compact = true;
  const long long pg = std::gcd(d, g);
  info.period_num = d / pg;
  info.period_den = g / pg;
  info.period = 2.0 * kPi * static_cast<double>(info.period_num) /
                static_cast<double>(info.period_den);
  return info;
}

double gauge_generator_residual(const DiscreteModeField& f,
                                const MetricParams& params, double theta) {
  const DiscreteModeField fp = gauge_transform(f, params, theta);
  const DiscreteModeField fm = gauge_transform(f, params, -theta);
  double worst = 0.0;
  for (std::size_t j = 0; j < f.modes.size(); ++j) {
    const ModeMatrixSet mm = mode_matrices(f.modes[j].k, f.cfg);
    const Mat3 thp = theta_operator(mm, params, +1, 0);
    const Mat3 thm = theta_operator(mm, params, -1, 0);
    const double L0p = params.L_long(+1), L0m = params.L_long(-1);
    for (int eps : kChiralities) {
      const ChiralAmplitude a0 = chiral_amplitude(f, j, eps, 0.0);
      const ChiralAmplitude ap = chiral_amplitude(fp, j, eps, 0.0);
      const ChiralAmplitude am = chiral_amplitude(fm, j, eps, 0.0);
      // Finite-difference derivative of the transform at theta = 0.
      const Vec3c fd = (ap.A - am.A) / (2.0 * theta);
      const complexd fd0 = (ap.A0 - am.A0) / (2.0 * theta);
      // Generator: -i (Theta_{+,0} C + Theta_{-,0}), C = eps per chirality.
      const Vec3c gen =
          -kI * (complexd(eps) * (thp * a0.A) + thm * a0.A);
      const complexd gen0 =
          -kI * (complexd(eps) * L0p + L0m) * a0.A0;
      worst = std::max(worst, (fd - gen).norm());
      worst = std::max(worst, std::abs(fd0 - gen0));
    }
  }
  return worst;
}

}  // namespace proca
