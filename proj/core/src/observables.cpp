//! \file observables.cpp
//! \brief Mode-wise observable actions and the spectral lattice realization
//!        of the position operator.

#include "proca/observables.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "proca/mode_algebra.hpp"

namespace proca {

namespace {

void check_axis(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("axis index must be 0, 1, 2");
}

//! Cross product k x v for real k and complex v.
Vec3c real_cross(const Vec3& k, const Vec3c& v) {
  return Vec3c(k.y() * v.z() - k.z() * v.y(),
               k.z() * v.x() - k.x() * v.z(),
               k.x() * v.y() - k.y() * v.x());
}

}  // namespace

//==============================================================================
// Mode-wise operator actions
//==============================================================================

DiscreteModeField apply_momentum(const DiscreteModeField& f, int i) {
  check_axis(i);
  DiscreteModeField out = f;
  for (auto& m : out.modes) {
    const double ki = m.k[i];
    for (auto& c : m.c) c *= ki;
  }
  return out;
}

DiscreteModeField apply_helicity(const DiscreteModeField& f) {
  DiscreteModeField out = f;
  for (auto& m : out.modes)
    for (int eps : kChiralities)
      for (int h : kHelicities)
        m.c[mode_slot(eps, h)] *= static_cast<double>(h);
  return out;
}

DiscreteModeField apply_spin(const DiscreteModeField& f, int i) {
  check_axis(i);
  DiscreteModeField out = f;
  const double mass = f.cfg.mass;
  for (std::size_t j = 0; j < f.modes.size(); ++j) {
    const Vec3 k = f.modes[j].k;
    const ModeMatrixSet mm = mode_matrices(k, f.cfg);
    const Mat3 kernel = spin_kernel(mm, i);
    for (int eps : kChiralities) {
      const ChiralAmplitude ca = chiral_amplitude(f, j, eps, 0.0);
      // Initial data of the spin action restricted to chirality eps:
      //   time component (1/(M omega)) (k x Adot)_i with Adot = -i eps omega A,
      //   spatial part    s~0^i A.
      FourVec w;
      w.t = (-kI * static_cast<double>(eps) / mass) * real_cross(k, ca.A)[i];
      w.r = kernel * ca.A;
      const PolarizationSet pol = polarization_basis(k, eps, f.cfg);
      for (int h : kHelicities) {
        out.coeff(j, eps, h) =
            minkowski_dot_conj(pol.u[helicity_slot(h)], w) / f.N(eps, h);
      }
    }
  }
  return out;
}

DiscreteModeField apply_position(const DiscreteModeField&, int) {
  throw RepresentationError(
      "position action is not closed on a finite mode set; use the lattice "
      "(GridField) realization");
}

DiscreteModeField apply_angular_momentum(const DiscreteModeField&, int) {
  throw RepresentationError(
      "angular-momentum action is not closed on a finite mode set; use the "
      "lattice (GridField) realization");
}

//==============================================================================
// Momentum lattice
//==============================================================================

void LatticeSpec::validate() const {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("lattice size must be even and >= 2");
  if (!(dk > 0.0)) throw std::invalid_argument("lattice spacing must be > 0");
}

void GridField::allocate() {
  lat.validate();
  for (auto& sector : f)
    for (auto& comp : sector) comp.assign(lat.sites(), complexd(0.0, 0.0));
}

void GridField::validate() const {
  lat.validate();
  if (!(cfg.mass > 0.0) || !(cfg.gamma > 0.0) || !(cfg.kappa > 0.0))
    throw std::invalid_argument("physics parameters must be positive");
  params.validate();
  for (const auto& sector : f)
    for (const auto& comp : sector)
      if (comp.size() != lat.sites())
        throw std::invalid_argument("grid component has wrong size");
}

GridField gaussian_packet(const PhysicsConfig& cfg, const LatticeSpec& lat,
                          int eps, int h, const Vec3& kbar, double sigma,
                          const Vec3& xbar, double x0_ref) {
  if (eps != +1 && eps != -1)
    throw std::invalid_argument("chirality must be +1 or -1");
  if (h != +1 && h != -1 && h != 0)
    throw std::invalid_argument("helicity must be +1, -1 or 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be > 0");
  GridField g;
  g.cfg = cfg;
  g.lat = lat;
  g.x0_ref = x0_ref;
  g.allocate();
  const int slot = chirality_slot(eps);
  const double pref = std::sqrt(cfg.kappa / cfg.mass);
  for (int ix = 0; ix < lat.n; ++ix)
    for (int iy = 0; iy < lat.n; ++iy)
      for (int iz = 0; iz < lat.n; ++iz) {
        const std::size_t s = lat.index(ix, iy, iz);
        const Vec3 k = lat.k_at(ix, iy, iz);
        const double om = omega_of(k, cfg);
        const complexd c = std::exp(-(k - kbar).squaredNorm() /
                                    (4.0 * sigma * sigma)) *
                           std::exp(-kI * k.dot(xbar));
        // f = sqrt(kappa/M) U A_eps with A_eps = c u_h (unit normalization):
        // transverse modes pick up sqrt(omega) u_h, the longitudinal one
        // eps sqrt(omega) khat.
        Vec3c w;
        if (h == 0) {
          w = (static_cast<double>(eps) * k.normalized()).cast<complexd>();
        } else {
          const PolarizationSet pol = polarization_basis(k, eps, cfg);
          w = pol.u[helicity_slot(h)].r;
        }
        const complexd amp = pref * std::sqrt(om) * c;
        for (int comp = 0; comp < 3; ++comp) g.f[slot][comp][s] = amp * w[comp];
      }
  const double nrm = std::sqrt(grid_norm_sq(g));
  for (auto& sector : g.f)
    for (auto& comp : sector)
      for (auto& v : comp) v /= nrm;
  return g;
}

double grid_norm_sq(const GridField& g) {
  double s = 0.0;
  for (const auto& sector : g.f)
    for (const auto& comp : sector)
      for (const auto& v : comp) s += std::norm(v);
  return s;
}

complexd grid_overlap(const GridField& a, const GridField& b) {
  if (a.lat.n != b.lat.n || a.lat.dk != b.lat.dk)
    throw std::invalid_argument("grid overlap requires a common lattice");
  complexd s(0.0, 0.0);
  for (int sector = 0; sector < 2; ++sector)
    for (int comp = 0; comp < 3; ++comp) {
      const auto& fa = a.f[sector][comp];
      const auto& fb = b.f[sector][comp];
      for (std::size_t j = 0; j < fa.size(); ++j)
        s += std::conj(fa[j]) * fb[j];
    }
  return s;
}

GridField grid_evolve(const GridField& g, double dt) {
  GridField out = g;
  out.x0_ref += dt;
  for (int ix = 0; ix < g.lat.n; ++ix)
    for (int iy = 0; iy < g.lat.n; ++iy)
      for (int iz = 0; iz < g.lat.n; ++iz) {
        const std::size_t s = g.lat.index(ix, iy, iz);
        const double om = omega_of(g.lat.k_at(ix, iy, iz), g.cfg);
        for (int eps : kChiralities) {
          const complexd ph =
              std::exp(-kI * static_cast<double>(eps) * om * dt);
          for (int comp = 0; comp < 3; ++comp)
            out.f[chirality_slot(eps)][comp][s] *= ph;
        }
      }
  return out;
}

GridField grid_apply_charge(const GridField& g) {
  GridField out = g;
  for (auto& comp : out.f[chirality_slot(-1)])
    for (auto& v : comp) v = -v;
  return out;
}

DiscreteModeField grid_to_modes(const GridField& g, double cutoff) {
  g.validate();
  WaveFunctionSet w;
  w.cfg = g.cfg;
  w.params = g.params;
  w.x0_ref = g.x0_ref;
  w.entries.reserve(g.lat.sites());
  for (int ix = 0; ix < g.lat.n; ++ix)
    for (int iy = 0; iy < g.lat.n; ++iy)
      for (int iz = 0; iz < g.lat.n; ++iz) {
        const std::size_t s = g.lat.index(ix, iy, iz);
        WaveFunctionSet::Entry e;
        e.k = g.lat.k_at(ix, iy, iz);
        double mag = 0.0;
        for (int sector = 0; sector < 2; ++sector)
          for (int comp = 0; comp < 3; ++comp) {
            e.f[sector][comp] = g.f[sector][comp][s];
            mag = std::max(mag, std::abs(e.f[sector][comp]));
          }
        if (mag >= cutoff) w.entries.push_back(e);
      }
  return from_wavefunction(w);
}

//==============================================================================
// Spectral transforms
//==============================================================================

struct LatticeTransform::Impl {
  std::vector<complexd> buf;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  //! Per-axis twiddles of the half-offset lattice maps (see to_position).
  //! post_x carries the lattice-center phase e^{i k0 x} and is axis-specific.
  std::vector<complexd> pre_k;
  std::array<std::vector<complexd>, 3> post_x;
};

LatticeTransform::LatticeTransform(const LatticeSpec& lat)
    : lat_(lat), impl_(new Impl) {
  lat_.validate();
  const int n = lat_.n;
  impl_->buf.assign(lat_.sites(), complexd(0.0, 0.0));
  auto* p = reinterpret_cast<fftw_complex*>(impl_->buf.data());
  impl_->bwd = fftw_plan_dft_3d(n, n, n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
  impl_->fwd = fftw_plan_dft_3d(n, n, n, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
  // k_j x_m = k0 x_m + (2 pi / n)(j - a)(m - b) with a = n/2 - 1/2, b = n/2;
  // the e^{+i k x} kernel therefore factors into the plain DFT kernel
  // e^{+2 pi i j m / n} between pre_k[j] = e^{-2 pi i j b / n} and
  // post_x[m] = e^{2 pi i a b / n} e^{-2 pi i a m / n} e^{i k0 x_m}.
  const double a = 0.5 * n - 0.5;
  const double b = 0.5 * n;
  impl_->pre_k.resize(n);
  const complexd cconst = std::exp(kI * (2.0 * kPi * a * b / n));
  for (int j = 0; j < n; ++j)
    impl_->pre_k[j] = std::exp(-kI * (2.0 * kPi * j * b / n));
  for (int axis = 0; axis < 3; ++axis) {
    impl_->post_x[axis].resize(n);
    for (int j = 0; j < n; ++j)
      impl_->post_x[axis][j] = cconst *
                               std::exp(-kI * (2.0 * kPi * a * j / n)) *
                               std::exp(kI * (lat_.k0[axis] * lat_.x_axis(j)));
  }
}

LatticeTransform::~LatticeTransform() {
  if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
  if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
  delete impl_;
}

void LatticeTransform::to_position(std::vector<complexd>& v) const {
  if (v.size() != lat_.sites())
    throw std::invalid_argument("site array has wrong size");
  const int n = lat_.n;
  auto& buf = impl_->buf;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy) {
      const complexd txy = impl_->pre_k[ix] * impl_->pre_k[iy];
      for (int iz = 0; iz < n; ++iz) {
        const std::size_t s = lat_.index(ix, iy, iz);
        buf[s] = v[s] * (txy * impl_->pre_k[iz]);
      }
    }
  fftw_execute(impl_->bwd);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy) {
      const complexd txy = impl_->post_x[0][ix] * impl_->post_x[1][iy];
      for (int iz = 0; iz < n; ++iz) {
        const std::size_t s = lat_.index(ix, iy, iz);
        v[s] = buf[s] * (txy * impl_->post_x[2][iz]);
      }
    }
}

void LatticeTransform::to_momentum(std::vector<complexd>& v) const {
  if (v.size() != lat_.sites())
    throw std::invalid_argument("site array has wrong size");
  const int n = lat_.n;
  const double inv = 1.0 / static_cast<double>(lat_.sites());
  auto& buf = impl_->buf;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy) {
      const complexd txy =
          std::conj(impl_->post_x[0][ix] * impl_->post_x[1][iy]);
      for (int iz = 0; iz < n; ++iz) {
        const std::size_t s = lat_.index(ix, iy, iz);
        buf[s] = v[s] * (txy * std::conj(impl_->post_x[2][iz]));
      }
    }
  fftw_execute(impl_->fwd);
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy) {
      const complexd txy = std::conj(impl_->pre_k[ix] * impl_->pre_k[iy]);
      for (int iz = 0; iz < n; ++iz) {
        const std::size_t s = lat_.index(ix, iy, iz);
        v[s] = buf[s] * (txy * std::conj(impl_->pre_k[iz])) * inv;
      }
    }
}

void LatticeTransform::apply_x(std::vector<complexd>& v, int axis) const {
  check_axis(axis);
  to_position(v);
  const int n = lat_.n;
  for (int ix = 0; ix < n; ++ix)
    for (int iy = 0; iy < n; ++iy)
      for (int iz = 0; iz < n; ++iz) {
        const int idx = axis == 0 ? ix : (axis == 1 ? iy : iz);
        v[lat_.index(ix, iy, iz)] *= lat_.x_axis(idx);
      }
  to_momentum(v);
}

//==============================================================================
// Position action
//==============================================================================

namespace {

//! Per-site 3-vector view helpers on the [component][site] layout.
Vec3c site_vec(const std::array<std::vector<complexd>, 3>& a, std::size_t s) {
  return Vec3c(a[0][s], a[1][s], a[2][s]);
}

void set_site_vec(std::array<std::vector<complexd>, 3>& a, std::size_t s,
                  const Vec3c& v) {
  for (int comp = 0; comp < 3; ++comp) a[comp][s] = v[comp];
}

}  // namespace

GridField apply_position(const GridField& g, int i, PositionMethod method) {
  check_axis(i);
  g.validate();
  const LatticeTransform tr(g.lat);
  GridField out = g;

  if (method == PositionMethod::WaveFunction) {
    for (auto& sector : out.f)
      for (auto& comp : sector) tr.apply_x(comp, i);
    return out;
  }

  // Covariant route: map back to the potential amplitude, apply the position
  // kernel X_i = x_i + (matrix correction), return to the wave function.
  if (!g.params.is_identity())
    throw std::invalid_argument(
        "covariant position route is defined for the canonical member only");
  const double mass = g.cfg.mass;
  const double to_pot = std::sqrt(mass / g.cfg.kappa);
  const double to_wf = 1.0 / to_pot;
  const std::size_t ns = g.lat.sites();
  std::vector<Mat3> ucache(ns), uinvcache(ns), corrcache(ns);
  for (int ix = 0; ix < g.lat.n; ++ix)
    for (int iy = 0; iy < g.lat.n; ++iy)
      for (int iz = 0; iz < g.lat.n; ++iz) {
        const std::size_t s = g.lat.index(ix, iy, iz);
        const ModeMatrixSet mm = mode_matrices(g.lat.k_at(ix, iy, iz), g.cfg);
        ucache[s] = foldy_u(mm);
        uinvcache[s] = foldy_u_inv(mm);
        corrcache[s] = position_vector_correction(mm, i);
      }
  for (int eps : kChiralities) {
    const int slot = chirality_slot(eps);
    // Potential amplitude a(k) = sqrt(M/kappa) U^{-1} f_eps(k).
    std::array<std::vector<complexd>, 3> pot;
    for (auto& comp : pot) comp.assign(ns, complexd(0.0, 0.0));
    for (std::size_t s = 0; s < ns; ++s)
      set_site_vec(pot, s, to_pot * (uinvcache[s] * site_vec(g.f[slot], s)));
    // chi = x_i a + Corr_i(k) a, spectral x part component-wise.
    std::array<std::vector<complexd>, 3> xpart = pot;
    for (auto& comp : xpart) tr.apply_x(comp, i);
    for (std::size_t s = 0; s < ns; ++s) {
      const Vec3c chi = site_vec(xpart, s) + corrcache[s] * site_vec(pot, s);
      set_site_vec(out.f[slot], s, to_wf * (ucache[s] * chi));
    }
  }
  return out;
}

Vec3 grid_position_expectation(const GridField& g) {
  const double nsq = grid_norm_sq(g);
  Vec3 r = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    const GridField xg = apply_position(g, i, PositionMethod::WaveFunction);
    r[i] = grid_overlap(g, xg).real() / nsq;
  }
  return r;
}

std::vector<FourVec> position_four_data(const GridField& g, int i) {
  check_axis(i);
  g.validate();
  if (!g.params.is_identity())
    throw std::invalid_argument(
        "covariant position data is defined for the canonical member only");
  const LatticeTransform tr(g.lat);
  const double mass = g.cfg.mass;
  const double to_pot = std::sqrt(mass / g.cfg.kappa);

  // Full spectral data at the reference time: A^0, vec A, vec Adot.
  const std::size_t ns = g.lat.sites();
  std::vector<complexd> a0(ns);
  std::array<std::vector<complexd>, 3> avec, adot;
  for (auto& comp : avec) comp.assign(ns, complexd(0.0, 0.0));
  for (auto& comp : adot) comp.assign(ns, complexd(0.0, 0.0));
  std::vector<complexd> scorr(ns);
  std::vector<Mat3> vcorr(ns);
  std::vector<double> omegas(ns);
  for (int ix = 0; ix < g.lat.n; ++ix)
    for (int iy = 0; iy < g.lat.n; ++iy)
      for (int iz = 0; iz < g.lat.n; ++iz) {
        const std::size_t s = g.lat.index(ix, iy, iz);
        const Vec3 k = g.lat.k_at(ix, iy, iz);
        const ModeMatrixSet mm = mode_matrices(k, g.cfg);
        const Mat3 uinv = foldy_u_inv(mm);
        scorr[s] = position_scalar_correction(mm, i);
        vcorr[s] = position_vector_correction(mm, i);
        omegas[s] = mm.omega;
        complexd t0(0.0, 0.0);
        Vec3c tv = Vec3c::Zero();
        Vec3c td = Vec3c::Zero();
        for (int eps : kChiralities) {
          const Vec3c ae =
              to_pot * (uinv * site_vec(g.f[chirality_slot(eps)], s));
          const complexd ae0 =
              k.cast<complexd>().dot(ae) / (static_cast<double>(eps) * mm.omega);
          t0 += ae0;
          tv += ae;
          td += -kI * static_cast<double>(eps) * mm.omega * ae;
        }
        a0[s] = t0;
        set_site_vec(avec, s, tv);
        set_site_vec(adot, s, td);
      }

  // Spectral x parts.
  std::vector<complexd> xa0 = a0;
  tr.apply_x(xa0, i);
  std::array<std::vector<complexd>, 3> xavec = avec;
  for (auto& comp : xavec) tr.apply_x(comp, i);

  std::vector<FourVec> chi(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    FourVec v;
    v.t = xa0[s] + scorr[s] * a0[s] +
          adot[i][s] / (mass * omegas[s]);
    v.r = site_vec(xavec, s) + vcorr[s] * site_vec(avec, s);
    chi[s] = v;
  }
  return chi;
}

//==============================================================================
// Helicity, spin and angular momentum on the lattice
//==============================================================================

double helicity_two_path_residual(const GridField& g) {
  g.validate();
  // Coefficient route through the full mode machinery.
  const DiscreteModeField modes = grid_to_modes(g, 0.0);
  const DiscreteModeField hmodes = apply_helicity(modes);
  const WaveFunctionSet wf = to_wavefunction(hmodes, g.x0_ref, g.params);
  if (wf.entries.size() != g.lat.sites())
    throw std::logic_error("lattice/mode bookkeeping mismatch");

  double num = 0.0;
  double den = 0.0;
  std::size_t s = 0;
  for (int ix = 0; ix < g.lat.n; ++ix)
    for (int iy = 0; iy < g.lat.n; ++iy)
      for (int iz = 0; iz < g.lat.n; ++iz, ++s) {
        const Vec3 khat = g.lat.k_at(ix, iy, iz).normalized();
        for (int eps : kChiralities) {
          const int slot = chirality_slot(eps);
          const Vec3c f = site_vec(g.f[slot], s);
          // Spectral curl route: (khat . S) f = i khat x f.
          const Vec3c curl = kI * real_cross(khat, f);
          num += (wf.entries[s].f[slot] - curl).squaredNorm();
          den += f.squaredNorm();
        }
      }
  return std::sqrt(num / den);
}

GridField grid_apply_spin(const GridField& g, int i) {
  check_axis(i);
  const Mat3 s = spin_matrix(i);
  GridField out = g;
  for (int sector = 0; sector < 2; ++sector)
    for (std::size_t j = 0; j < g.lat.sites(); ++j)
      set_site_vec(out.f[sector], j, s * site_vec(g.f[sector], j));
  return out;
}

GridField grid_apply_orbital(const GridField& g, int i) {
  check_axis(i);
  g.validate();
  const LatticeTransform tr(g.lat);
  GridField out = g;
  for (auto& sector : out.f)
    for (auto& comp : sector)
      std::fill(comp.begin(), comp.end(), complexd(0.0, 0.0));
  // L_i = eps_{ijm} x_j k_m   (the j and m axes always differ from each other,
  // so operator ordering is immaterial on the lattice as well).
  const int j1 = (i + 1) % 3, m1 = (i + 2) % 3;
  const struct {
    int j, m;
    double sign;
  } terms[2] = {{j1, m1, 1.0}, {m1, j1, -1.0}};
  for (const auto& t : terms)
    for (int sector = 0; sector < 2; ++sector)
      for (int comp = 0; comp < 3; ++comp) {
        std::vector<complexd> tmp = g.f[sector][comp];
        std::size_t s = 0;
        for (int ix = 0; ix < g.lat.n; ++ix)
          for (int iy = 0; iy < g.lat.n; ++iy)
            for (int iz = 0; iz < g.lat.n; ++iz, ++s)
              tmp[s] *= g.lat.k_at(ix, iy, iz)[t.m];
        tr.apply_x(tmp, t.j);
        for (s = 0; s < tmp.size(); ++s)
          out.f[sector][comp][s] += t.sign * tmp[s];
      }
  return out;
}

GridField grid_apply_angular_momentum(const GridField& g, int i) {
  GridField out = grid_apply_orbital(g, i);
  const GridField sp = grid_apply_spin(g, i);
  for (int sector = 0; sector < 2; ++sector)
    for (int comp = 0; comp < 3; ++comp)
      for (std::size_t s = 0; s < out.f[sector][comp].size(); ++s)
        out.f[sector][comp][s] += sp.f[sector][comp][s];
  return out;
}

complexd grid_expectation(
    const GridField& g,
    const std::function<GridField(const GridField&)>& op) {
  return grid_overlap(g, op(g)) / grid_norm_sq(g);
}

//==============================================================================
// Velocity identity
//==============================================================================

namespace {

//! Evolve-conjugated position X(delta) = e^{i h delta} x_i e^{-i h delta}.
GridField conjugated_position(const GridField& g, int i, double delta) {
  const GridField fwd = grid_evolve(g, delta);
  const GridField xf = apply_position(fwd, i, PositionMethod::WaveFunction);
  return grid_evolve(xf, -delta);
}

GridField lin_comb(double ca, const GridField& a, double cb,
                   const GridField& b) {
  GridField out = a;
  for (int sector = 0; sector < 2; ++sector)
    for (int comp = 0; comp < 3; ++comp)
      for (std::size_t s = 0; s < out.f[sector][comp].size(); ++s)
        out.f[sector][comp][s] =
            ca * a.f[sector][comp][s] + cb * b.f[sector][comp][s];
  return out;
}

//! Central difference in the conjugation parameter: i[h, x_i] + O(delta^2).
GridField commutator_estimate(const GridField& g, int i, double delta) {
  const GridField p = conjugated_position(g, i, delta);
  const GridField m = conjugated_position(g, i, -delta);
  return lin_comb(0.5 / delta, p, -0.5 / delta, m);
}

}  // namespace

VelocityCheckResult velocity_check(const GridField& g, double delta) {
  g.validate();
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  VelocityCheckResult res;
  const double nsq = grid_norm_sq(g);

  // Exact spectral mean of the velocity (k/omega) C.
  std::size_t s = 0;
  for (int ix = 0; ix < g.lat.n; ++ix)
    for (int iy = 0; iy < g.lat.n; ++iy)
      for (int iz = 0; iz < g.lat.n; ++iz, ++s) {
        const Vec3 k = g.lat.k_at(ix, iy, iz);
        const double om = omega_of(k, g.cfg);
        for (int eps : kChiralities) {
          const double w =
              site_vec(g.f[chirality_slot(eps)], s).squaredNorm();
          res.mean_spectral += (static_cast<double>(eps) * w / om) * k;
        }
      }
  res.mean_spectral /= nsq;

  for (int i = 0; i < 3; ++i) {
    // Richardson step extrapolation of the conjugation derivative.
    const GridField kc = commutator_estimate(g, i, delta);
    const GridField kh = commutator_estimate(g, i, 0.5 * delta);
    const GridField rich = lin_comb(4.0 / 3.0, kh, -1.0 / 3.0, kc);
    // Target (k_i / omega) C f.
    GridField target = g;
    std::size_t t = 0;
    for (int ix = 0; ix < g.lat.n; ++ix)
      for (int iy = 0; iy < g.lat.n; ++iy)
        for (int iz = 0; iz < g.lat.n; ++iz, ++t) {
          const Vec3 k = g.lat.k_at(ix, iy, iz);
          const double om = omega_of(k, g.cfg);
          for (int eps : kChiralities)
            for (int comp = 0; comp < 3; ++comp)
              target.f[chirality_slot(eps)][comp][t] *=
                  static_cast<double>(eps) * k[i] / om;
        }
    const GridField diff = lin_comb(1.0, rich, -1.0, target);
    res.operator_residual = std::max(
        res.operator_residual, std::sqrt(grid_norm_sq(diff) / nsq));
    res.mean_commutator[i] = grid_overlap(g, rich).real() / nsq;
  }
  return res;
}

}  // namespace proca
