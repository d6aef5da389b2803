//! \file test_inner_products.cpp
//! \brief The conserved inner-product family: route agreement, Hermiticity,
//!        definiteness and sector decompositions.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "proca/inner_products.hpp"

using namespace proca;

namespace {

const PhysicsConfig kCfg{1.0, 1.0, 1.0};

DiscreteModeField random_field(unsigned seed, Normalization norm =
                                                  Normalization::Unit) {
  DiscreteModeField f;
  f.cfg = kCfg;
  f.norm = norm;
  f.modes.resize(3);
  f.modes[0].k = Vec3(0.4, -0.2, 0.9);
  f.modes[1].k = Vec3(-1.1, 0.3, 0.5);
  f.modes[2].k = Vec3(0.0, 0.8, -0.6);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& m : f.modes)
    for (auto& c : m.c) c = complexd(u(rng), u(rng));
  return f;
}

MetricParams sample_params() {
  MetricParams p;
  p.al(+1, +1) = complexd(0.9, 0.4);
  p.al(+1, -1) = complexd(1.2, -0.3);
  p.al(+1, 0) = complexd(0.7, 0.2);
  p.al(-1, +1) = complexd(1.1, 0.6);
  p.al(-1, -1) = complexd(0.8, -0.5);
  p.al(-1, 0) = complexd(1.3, 0.1);
  return p;
}

DiscreteModeField scaled(DiscreteModeField f, complexd s) {
  for (auto& m : f.modes)
    for (auto& c : m.c) c *= s;
  return f;
}

}  // namespace

TEST_CASE("single mode closed values", "[inner_products]") {
  const Vec3 k(0, 0, 1);
  const double om = std::sqrt(2.0);
  const complexd c(0.6, -0.8);  // |c|^2 = 1
  for (int eps : kChiralities)
    for (int h : kHelicities) {
      const DiscreteModeField f = single_mode_field(kCfg, k, eps, h, c);
      const complexd ms = inner_product_modesum(f, f);
      CHECK(std::abs(ms - om) < 1e-13);
      const complexd can = inner_product(InnerProductKind::Canonical, f, f, 0.0);
      CHECK(std::abs(can - om) < 1e-12);
      const complexd s3 = inner_product(InnerProductKind::Sigma3, f, f, 0.0);
      CHECK(std::abs(s3 - double(eps) * om) < 1e-12);
    }
}

TEST_CASE("relativistic normalization cancels the weights", "[inner_products]") {
  const MetricParams p = sample_params();
  for (int eps : kChiralities) {
    DiscreteModeField f = single_mode_field(kCfg, Vec3(0.3, -0.4, 1.2), eps, -1,
                                            complexd(1.0, 0.0),
                                            Normalization::Relativistic);
    f.norm_params = p;
    const double om = omega_of(f.modes[0].k, kCfg);
    // (kappa/M) a omega N^2 = 2 omega regardless of the weight.
    CHECK(std::abs(inner_product_modesum(f, f, p) - 2.0 * om) < 1e-13);
  }
}

TEST_CASE("all canonical routes agree", "[inner_products]") {
  const DiscreteModeField A = random_field(11);
  const DiscreteModeField B = random_field(22);
  const double x0 = 0.7;
  const complexd pos = inner_product(InnerProductKind::Canonical, A, B, x0);
  const complexd six = inner_product_six_component(A, B, x0);
  const complexd ms = inner_product_modesum(A, B);
  const complexd gen =
      inner_product(InnerProductKind::General, A, B, x0, MetricParams());
  CHECK(std::abs(pos - six) < 1e-12);
  CHECK(std::abs(pos - ms) < 1e-12);
  CHECK(std::abs(pos - gen) < 1e-12);
}

TEST_CASE("sigma3 routes and sector split agree", "[inner_products]") {
  const DiscreteModeField A = random_field(31);
  const DiscreteModeField B = random_field(42);
  const double x0 = 1.9;
  const complexd s3 = inner_product(InnerProductKind::Sigma3, A, B, x0);
  CHECK(std::abs(s3 - inner_product_sigma3_six(A, B, x0)) < 1e-12);
  const complexd split = inner_product_sigma3_sector(A, B, x0, +1) +
                         inner_product_sigma3_sector(A, B, x0, -1);
  CHECK(std::abs(s3 - split) < 1e-12);
}

TEST_CASE("general product equals its sigma3 decomposition", "[inner_products]") {
  const DiscreteModeField A = random_field(5);
  const DiscreteModeField B = random_field(6);
  const MetricParams p = sample_params();
  const double x0 = 0.23;
  const complexd gen = inner_product(InnerProductKind::General, A, B, x0, p);
  const complexd dec = decompose_as_sigma3(A, B, x0, p);
  CHECK(std::abs(gen - dec) < 1e-12);
  // And the mode-sum closed form with the same weights.
  CHECK(std::abs(gen - inner_product_modesum(A, B, p)) < 1e-12);
}

TEST_CASE("hermiticity", "[inner_products]") {
  const DiscreteModeField A = random_field(101);
  const DiscreteModeField B = random_field(102);
  const MetricParams p = sample_params();
  const double x0 = 0.4;
  for (auto kind : {InnerProductKind::Sigma3, InnerProductKind::Canonical,
                    InnerProductKind::General}) {
    const complexd ab = inner_product(kind, A, B, x0, p);
    const complexd ba = inner_product(kind, B, A, x0, p);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-12);
  }
}

TEST_CASE("sesquilinearity", "[inner_products]") {
  const DiscreteModeField A = random_field(7);
  const DiscreteModeField B = random_field(8);
  const complexd s(0.6, 1.1);
  const double x0 = 0.0;
  const complexd base = inner_product(InnerProductKind::Canonical, A, B, x0);
  CHECK(std::abs(inner_product(InnerProductKind::Canonical, scaled(A, s), B,
                               x0) -
                 std::conj(s) * base) < 1e-12);
  CHECK(std::abs(inner_product(InnerProductKind::Canonical, A, scaled(B, s),
                               x0) -
                 s * base) < 1e-12);
}

TEST_CASE("time invariance", "[inner_products]") {
  const DiscreteModeField A = random_field(55);
  const DiscreteModeField B = random_field(66);
  const MetricParams p = sample_params();
  for (auto kind : {InnerProductKind::Sigma3, InnerProductKind::Canonical,
                    InnerProductKind::General}) {
    const complexd v0 = inner_product(kind, A, B, 0.0, p);
    const complexd v1 = inner_product(kind, A, B, 2.31, p);
    const complexd v2 =
        inner_product(kind, evolve(A, -1.4), evolve(B, -1.4), 0.0, p);
    CHECK(std::abs(v0 - v1) < 1e-12);
    CHECK(std::abs(v0 - v2) < 1e-12);
  }
}

TEST_CASE("definiteness by sector", "[inner_products]") {
  const Vec3 k(0.5, 0.1, -0.7);
  const DiscreteModeField plus =
      single_mode_field(kCfg, k, +1, 0, complexd(1.0, 0.4));
  const DiscreteModeField minus =
      single_mode_field(kCfg, k, -1, +1, complexd(0.3, -1.1));
  CHECK(inner_product(InnerProductKind::Canonical, plus, plus, 0.0).real() >
        0.0);
  CHECK(inner_product(InnerProductKind::Canonical, minus, minus, 0.0).real() >
        0.0);
  CHECK(inner_product(InnerProductKind::Sigma3, plus, plus, 0.0).real() > 0.0);
  CHECK(inner_product(InnerProductKind::Sigma3, minus, minus, 0.0).real() <
        0.0);
}

TEST_CASE("gram matrices", "[inner_products]") {
  std::vector<DiscreteModeField> fields = {random_field(1), random_field(2),
                                           random_field(3)};
  const auto g = gram_matrix(InnerProductKind::Canonical, fields, 0.9);
  CHECK((g - g.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
  // Mixed-sector Sigma3 Gram is indefinite.
  const Vec3 k(0.2, 0.9, 0.4);
  std::vector<DiscreteModeField> mixed = {
      single_mode_field(kCfg, k, +1, +1, complexd(1.0, 0.0)),
      single_mode_field(kCfg, k, -1, +1, complexd(1.0, 0.0))};
  const auto gs = gram_matrix(InnerProductKind::Sigma3, mixed, 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ei(gs);
  CHECK(ei.eigenvalues().minCoeff() < 0.0);
  CHECK(ei.eigenvalues().maxCoeff() > 0.0);
}

TEST_CASE("mismatched mode sets pair only common momenta", "[inner_products]") {
  const DiscreteModeField A = random_field(12);
  DiscreteModeField B = random_field(13);
  B.modes.erase(B.modes.begin());  // drop the first momentum
  const complexd full = inner_product_modesum(A, B);
  complexd manual{};
  for (std::size_t j = 1; j < A.modes.size(); ++j) {
    const double om = omega_of(A.modes[j].k, kCfg);
    for (int s = 0; s < 6; ++s)
      manual += om * std::conj(A.modes[j].c[s]) * B.modes[j - 1].c[s];
  }
  CHECK(std::abs(full - manual) < 1e-13);
  CHECK(std::abs(inner_product(InnerProductKind::Canonical, A, B, 0.3) - full) <
        1e-12);
}

TEST_CASE("different physics configs are rejected", "[inner_products]") {
  const DiscreteModeField A = random_field(21);
  DiscreteModeField B = random_field(22);
  B.cfg.gamma = 1.5;
  CHECK_THROWS_AS(inner_product(InnerProductKind::Canonical, A, B, 0.0),
                  RepresentationError);
}
