//! \file test_observables.cpp
//! \brief Mode-wise operator actions and the lattice realization of position,
//!        spin, angular momentum and the velocity identity.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "proca/inner_products.hpp"
#include "proca/observables.hpp"

using namespace proca;

namespace {

const PhysicsConfig kCfg{1.0, 1.0, 1.0};

DiscreteModeField random_field(unsigned seed) {
  DiscreteModeField f;
  f.cfg = kCfg;
  f.modes.resize(2);
  f.modes[0].k = Vec3(0.4, -0.2, 0.9);
  f.modes[1].k = Vec3(-1.1, 0.3, 0.5);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& m : f.modes)
    for (auto& c : m.c) c = complexd(u(rng), u(rng));
  return f;
}

double field_diff(const DiscreteModeField& a, const DiscreteModeField& b) {
  double worst = 0.0;
  for (std::size_t j = 0; j < a.modes.size(); ++j)
    for (int s = 0; s < 6; ++s)
      worst = std::max(worst, std::abs(a.modes[j].c[s] - b.modes[j].c[s]));
  return worst;
}

double grid_diff(const GridField& a, const GridField& b) {
  double worst = 0.0;
  for (int sector = 0; sector < 2; ++sector)
    for (int comp = 0; comp < 3; ++comp)
      for (std::size_t s = 0; s < a.f[sector][comp].size(); ++s)
        worst = std::max(worst,
                         std::abs(a.f[sector][comp][s] - b.f[sector][comp][s]));
  return worst;
}

//! Reference packet used by the position / angular-momentum checks.
GridField reference_packet(int eps, int h, const Vec3& xbar) {
  const Vec3 kbar(0, 0, 1.5);
  LatticeSpec lat;
  lat.n = 32;
  lat.dk = 0.09;
  lat.k0 = kbar;
  return gaussian_packet(kCfg, lat, eps, h, kbar, 0.14, xbar);
}

//! Expectation of a Hermitian grid operator.
double expect(const GridField& g, const GridField& og) {
  return grid_overlap(g, og).real() / grid_norm_sq(g);
}

}  // namespace

TEST_CASE("momentum and helicity act on coefficients", "[observables]") {
  const DiscreteModeField f = random_field(3);
  for (int i = 0; i < 3; ++i) {
    const DiscreteModeField g = apply_momentum(f, i);
    for (std::size_t j = 0; j < f.modes.size(); ++j)
      for (int s = 0; s < 6; ++s)
        CHECK(std::abs(g.modes[j].c[s] - f.modes[j].k[i] * f.modes[j].c[s]) <
              1e-15);
  }
  const DiscreteModeField h = apply_helicity(f);
  for (std::size_t j = 0; j < f.modes.size(); ++j)
    for (int eps : kChiralities)
      for (int hh : kHelicities)
        CHECK(std::abs(h.coeff(j, eps, hh) -
                       double(hh) * f.coeff(j, eps, hh)) < 1e-15);
}

TEST_CASE("spin along the momentum axis is helicity", "[observables]") {
  const Vec3 k(0, 0, 1.2);
  for (int eps : kChiralities)
    for (int h : kHelicities) {
      const DiscreteModeField f =
          single_mode_field(kCfg, k, eps, h, complexd(0.8, -0.3));
      const DiscreteModeField sf = apply_spin(f, 2);
      DiscreteModeField expected = f;
      for (auto& c : expected.modes[0].c) c *= double(h);
      CHECK(field_diff(sf, expected) < 1e-12);
    }
}

TEST_CASE("spin is Hermitian and evolves consistently", "[observables]") {
  const DiscreteModeField f = random_field(7);
  const DiscreteModeField g = random_field(8);
  for (int i = 0; i < 3; ++i) {
    const complexd fg =
        inner_product(InnerProductKind::Canonical, f, apply_spin(g, i), 0.0);
    const complexd gf =
        inner_product(InnerProductKind::Canonical, g, apply_spin(f, i), 0.0);
    CHECK(std::abs(fg - std::conj(gf)) < 1e-12);
  }
  // k parallel to z: S_3 commutes with the evolution.
  const DiscreteModeField fz =
      single_mode_field(kCfg, Vec3(0, 0, 0.9), +1, +1, complexd(1.0, 0.2));
  DiscreteModeField mixed = fz;
  mixed.coeff(0, -1, 0) = complexd(0.3, 0.6);
  const double dt = 0.83;
  CHECK(field_diff(apply_spin(evolve(mixed, dt), 2),
                   evolve(apply_spin(mixed, 2), dt)) < 1e-12);
}

TEST_CASE("position requires the lattice realization", "[observables]") {
  const DiscreteModeField f = random_field(9);
  CHECK_THROWS_AS(apply_position(f, 0), RepresentationError);
  CHECK_THROWS_AS(apply_angular_momentum(f, 2), RepresentationError);
}

TEST_CASE("lattice geometry", "[observables]") {
  LatticeSpec lat;
  lat.n = 4;
  lat.dk = 0.5;
  CHECK(lat.sites() == 64);
  CHECK(lat.k_axis(0, 0) == Catch::Approx(-0.75));
  CHECK(lat.k_axis(0, 3) == Catch::Approx(0.75));
  lat.k0 = Vec3(0.3, -0.2, 0.1);
  CHECK(lat.k_axis(1, 2) == Catch::Approx(-0.2 + 0.25));
  CHECK(lat.dx() == Catch::Approx(2.0 * kPi / 2.0));
  CHECK(lat.x_axis(2) == 0.0);
  CHECK_NOTHROW(lat.validate());
  lat.n = 5;
  CHECK_THROWS_AS(lat.validate(), std::invalid_argument);
  lat.n = 4;
  lat.dk = 0.0;
  CHECK_THROWS_AS(lat.validate(), std::invalid_argument);
}

TEST_CASE("lattice transform against the direct sum", "[observables]") {
  LatticeSpec lat;
  lat.n = 4;
  lat.dk = 0.5;
  lat.k0 = Vec3(0.3, -0.2, 0.1);
  const LatticeTransform tr(lat);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<complexd> a(lat.sites());
  for (auto& v : a) v = complexd(u(rng), u(rng));

  // Direct evaluation of g(x_m) = sum_n ghat(k_n) e^{i k_n . x_m}.
  std::vector<complexd> direct(lat.sites(), complexd{});
  for (int mx = 0; mx < 4; ++mx)
    for (int my = 0; my < 4; ++my)
      for (int mz = 0; mz < 4; ++mz) {
        const Vec3 x(lat.x_axis(mx), lat.x_axis(my), lat.x_axis(mz));
        complexd s{};
        for (int jx = 0; jx < 4; ++jx)
          for (int jy = 0; jy < 4; ++jy)
            for (int jz = 0; jz < 4; ++jz)
              s += a[lat.index(jx, jy, jz)] *
                   std::exp(kI * lat.k_at(jx, jy, jz).dot(x));
        direct[lat.index(mx, my, mz)] = s;
      }

  std::vector<complexd> fft = a;
  tr.to_position(fft);
  double worst = 0.0;
  for (std::size_t s = 0; s < fft.size(); ++s)
    worst = std::max(worst, std::abs(fft[s] - direct[s]));
  CHECK(worst < 1e-12);

  // Round trip.
  tr.to_momentum(fft);
  for (std::size_t s = 0; s < fft.size(); ++s)
    worst = std::max(worst, std::abs(fft[s] - a[s]));
  CHECK(worst < 1e-12);

  // apply_x against multiply-in-position-space through the direct sums.
  for (int axis = 0; axis < 3; ++axis) {
    std::vector<complexd> xa = a;
    tr.apply_x(xa, axis);
    std::vector<complexd> ref = direct;
    for (int mx = 0; mx < 4; ++mx)
      for (int my = 0; my < 4; ++my)
        for (int mz = 0; mz < 4; ++mz) {
          const int m = axis == 0 ? mx : (axis == 1 ? my : mz);
          ref[lat.index(mx, my, mz)] *= lat.x_axis(m);
        }
    // Inverse direct transform of ref.
    for (int jx = 0; jx < 4; ++jx)
      for (int jy = 0; jy < 4; ++jy)
        for (int jz = 0; jz < 4; ++jz) {
          complexd s{};
          for (int mx = 0; mx < 4; ++mx)
            for (int my = 0; my < 4; ++my)
              for (int mz = 0; mz < 4; ++mz) {
                const Vec3 x(lat.x_axis(mx), lat.x_axis(my), lat.x_axis(mz));
                s += ref[lat.index(mx, my, mz)] *
                     std::exp(-kI * lat.k_at(jx, jy, jz).dot(x));
              }
          const std::size_t idx = lat.index(jx, jy, jz);
          worst = std::max(worst,
                           std::abs(xa[idx] - s / double(lat.sites())));
        }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("gaussian packets are normalized and centered", "[observables]") {
  const Vec3 xbar(1.5, -1.0, 2.0);
  const GridField g = reference_packet(+1, +1, xbar);
  CHECK_NOTHROW(g.validate());
  CHECK(grid_norm_sq(g) == Catch::Approx(1.0).epsilon(1e-12));
  const Vec3 xmean = grid_position_expectation(g);
  CHECK((xmean - xbar).norm() < 1e-6);
  // Spectral momentum mean sits at the packet center.
  double ksum = 0.0;
  for (int sector = 0; sector < 2; ++sector)
    for (int comp = 0; comp < 3; ++comp)
      for (int ix = 0; ix < g.lat.n; ++ix)
        for (int iy = 0; iy < g.lat.n; ++iy)
          for (int iz = 0; iz < g.lat.n; ++iz)
            ksum += g.lat.k_axis(2, iz) *
                    std::norm(g.f[sector][comp][g.lat.index(ix, iy, iz)]);
  CHECK(ksum == Catch::Approx(1.5).margin(1e-10));
}

TEST_CASE("grid evolution and charge involution", "[observables]") {
  const GridField g = reference_packet(+1, +1, Vec3::Zero());
  const GridField e = grid_evolve(g, 0.9);
  CHECK(grid_norm_sq(e) == Catch::Approx(grid_norm_sq(g)).epsilon(1e-12));
  CHECK(grid_diff(grid_evolve(e, -0.9), g) < 1e-12);
  // Definite chirality packets are charge eigenstates.
  const GridField cg = grid_apply_charge(g);
  CHECK(grid_diff(cg, g) == 0.0);
  GridField minus = reference_packet(-1, 0, Vec3::Zero());
  GridField cminus = grid_apply_charge(minus);
  for (auto& comp : minus.f[chirality_slot(-1)])
    for (auto& v : comp) v = -v;
  CHECK(grid_diff(cminus, minus) == 0.0);
  CHECK(grid_diff(grid_apply_charge(grid_apply_charge(g)), g) == 0.0);
}

TEST_CASE("grid to modes preserves the inner product", "[observables]") {
  LatticeSpec lat;
  lat.n = 8;
  lat.dk = 0.3;
  lat.k0 = Vec3(0, 0, 1.5);
  const GridField g =
      gaussian_packet(kCfg, lat, +1, +1, Vec3(0, 0, 1.5), 0.14, Vec3::Zero());
  const DiscreteModeField modes = grid_to_modes(g);
  CHECK(modes.modes.size() == lat.sites());
  CHECK(std::abs(inner_product_modesum(modes, modes).real() -
                 grid_norm_sq(g)) < 1e-10);
  // Cutoff drops negligible sites but keeps the norm.
  const DiscreteModeField few = grid_to_modes(g, 1e-6);
  CHECK(few.modes.size() < lat.sites());
  CHECK(std::abs(inner_product_modesum(few, few).real() -
                 grid_norm_sq(g)) < 1e-8);
}

TEST_CASE("position routes agree", "[observables]") {
  const Vec3 xbar(1.5, -1.0, 2.0);
  const GridField g = reference_packet(+1, +1, xbar);
  for (int axis : {0, 2}) {
    const GridField wf = apply_position(g, axis, PositionMethod::WaveFunction);
    const GridField cov = apply_position(g, axis, PositionMethod::Covariant);
    double num = 0.0;
    for (int sector = 0; sector < 2; ++sector)
      for (int comp = 0; comp < 3; ++comp)
        for (std::size_t s = 0; s < wf.f[sector][comp].size(); ++s)
          num = std::max(num, std::abs(wf.f[sector][comp][s] -
                                       cov.f[sector][comp][s]));
    CHECK(num < 1e-6);
    CHECK(expect(g, wf) == Catch::Approx(xbar[axis]).margin(1e-6));
  }
}

TEST_CASE("position components commute", "[observables]") {
  // Use a two-sector superposition so the check is not trivially diagonal.
  GridField g = reference_packet(+1, +1, Vec3(1.5, -1.0, 2.0));
  const GridField other = reference_packet(-1, +1, Vec3(-1.5, 1.0, -2.0));
  for (int sector = 0; sector < 2; ++sector)
    for (int comp = 0; comp < 3; ++comp)
      for (std::size_t s = 0; s < g.f[sector][comp].size(); ++s)
        g.f[sector][comp][s] += other.f[sector][comp][s];
  const GridField xy = apply_position(apply_position(g, 0,
                                                     PositionMethod::WaveFunction),
                                      2, PositionMethod::WaveFunction);
  const GridField yx = apply_position(apply_position(g, 2,
                                                     PositionMethod::WaveFunction),
                                      0, PositionMethod::WaveFunction);
  CHECK(grid_diff(xy, yx) < 1e-10);
  // And with the chirality involution.
  const GridField xc = apply_position(grid_apply_charge(g), 1,
                                      PositionMethod::WaveFunction);
  const GridField cx = grid_apply_charge(
      apply_position(g, 1, PositionMethod::WaveFunction));
  CHECK(grid_diff(xc, cx) < 1e-12);
}

TEST_CASE("helicity two-path residual", "[observables]") {
  const GridField g = reference_packet(+1, +1, Vec3(0.4, 0.0, -0.3));
  CHECK(helicity_two_path_residual(g) < 1e-10);
}

TEST_CASE("angular momentum additivity and algebra", "[observables]") {
  const GridField g = reference_packet(+1, +1, Vec3(1.5, -1.0, 2.0));
  // M = L + S site-wise.
  for (int i = 0; i < 3; ++i) {
    const GridField m = grid_apply_angular_momentum(g, i);
    const GridField l = grid_apply_orbital(g, i);
    const GridField s = grid_apply_spin(g, i);
    GridField ls = l;
    for (int sector = 0; sector < 2; ++sector)
      for (int comp = 0; comp < 3; ++comp)
        for (std::size_t site = 0; site < ls.f[sector][comp].size(); ++site)
          ls.f[sector][comp][site] += s.f[sector][comp][site];
    CHECK(grid_diff(m, ls) < 1e-12);
  }
  // su(2): <[M_1, M_2]> = i <M_3>.
  const GridField m2 = grid_apply_angular_momentum(g, 1);
  const GridField m1 = grid_apply_angular_momentum(g, 0);
  const complexd comm = grid_overlap(g, grid_apply_angular_momentum(m2, 0)) -
                        grid_overlap(g, grid_apply_angular_momentum(m1, 1));
  const complexd m3 = grid_overlap(g, grid_apply_angular_momentum(g, 2));
  CHECK(std::abs(comm - kI * m3) < 1e-8);
  // Spin projection of a transverse packet along its axis is close to h.
  CHECK(expect(g, grid_apply_spin(g, 2)) == Catch::Approx(1.0).margin(0.05));
  // Longitudinal packets carry no orbital vortex.
  const GridField g0 = reference_packet(+1, 0, Vec3::Zero());
  CHECK(std::abs(expect(g0, grid_apply_orbital(g0, 2))) < 1e-10);
}

TEST_CASE("velocity identity", "[observables]") {
  const Vec3 kbar(0, 0, 0.5);
  LatticeSpec lat;
  lat.n = 32;
  lat.dk = 0.004;
  lat.k0 = kbar;
  const GridField g = gaussian_packet(kCfg, lat, +1, +1, kbar, 0.0075,
                                      Vec3::Zero());
  const VelocityCheckResult res = velocity_check(g);
  const double vz = 0.5 / omega_of(kbar, kCfg);
  CHECK(std::abs(res.mean_spectral.z() - vz) < 1e-4);
  CHECK((res.mean_commutator - res.mean_spectral).norm() < 1e-6);
  CHECK(res.operator_residual < 1e-6);
}
