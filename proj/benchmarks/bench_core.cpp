//! \file bench_core.cpp
//! \brief Micro-benchmarks for the per-momentum algebra, inner products,
//!        special functions and lattice transforms.

#include <benchmark/benchmark.h>

#include <random>

#include "proca/inner_products.hpp"
#include "proca/localized.hpp"
#include "proca/observables.hpp"
#include "proca/relativity.hpp"
#include "proca/specfun.hpp"

namespace {

using namespace proca;

const PhysicsConfig kCfg{1.0, 1.0, 1.0};

DiscreteModeField make_field(std::size_t n_modes) {
  DiscreteModeField f;
  f.cfg = kCfg;
  f.modes.resize(n_modes);
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto& m : f.modes) {
    m.k = Vec3(u(rng), u(rng), u(rng)) * 2.0;
    if (m.k.norm() < 0.1) m.k = Vec3(0.5, 0.0, 0.0);
    for (auto& c : m.c) c = complexd(u(rng), u(rng));
  }
  return f;
}

MetricParams bench_params() {
  MetricParams p;
  p.al(+1, +1) = complexd(0.9, 0.4);
  p.al(-1, 0) = complexd(1.3, 0.1);
  return p;
}

void BM_ModeMatrices(benchmark::State& state) {
  const Vec3 k(0.7, -0.4, 1.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(mode_matrices(k, kCfg));
}
BENCHMARK(BM_ModeMatrices);

void BM_GeneralMetric(benchmark::State& state) {
  const ModeMatrixSet mm = mode_matrices(Vec3(0.7, -0.4, 1.1), kCfg);
  const MetricParams p = bench_params();
  for (auto _ : state)
    benchmark::DoNotOptimize(general_metric(mm, p));
}
BENCHMARK(BM_GeneralMetric);

void BM_CaseSpinOperator(benchmark::State& state) {
  const ModeMatrixSet mm = mode_matrices(Vec3(0.7, -0.4, 1.1), kCfg);
  for (auto _ : state)
    benchmark::DoNotOptimize(case_spin_operator(mm));
}
BENCHMARK(BM_CaseSpinOperator);

void BM_InnerProductPositionSpace(benchmark::State& state) {
  const DiscreteModeField f = make_field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        inner_product(InnerProductKind::Canonical, f, f, 0.0));
}
BENCHMARK(BM_InnerProductPositionSpace)->Arg(8)->Arg(64);

void BM_InnerProductModeSum(benchmark::State& state) {
  const DiscreteModeField f = make_field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(inner_product_modesum(f, f));
}
BENCHMARK(BM_InnerProductModeSum)->Arg(8)->Arg(64);

void BM_BoostField(benchmark::State& state) {
  const DiscreteModeField f = make_field(32);
  const Vec3 beta(0.1, -0.05, 0.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(boost_field(f, beta));
}
BENCHMARK(BM_BoostField);

void BM_BesselK(benchmark::State& state) {
  double nu = 0.25;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_k(nu, 1.7));
    nu = nu == 0.25 ? 0.75 : 0.25;
  }
}
BENCHMARK(BM_BesselK);

void BM_Hyp1F2(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(hyp1f2(0.5, 1.25, 1.5, 1.0));
}
BENCHMARK(BM_Hyp1F2);

void BM_LocalizedClosed(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(localized_integrals_closed(kCfg, 1.0));
}
BENCHMARK(BM_LocalizedClosed);

void BM_LocalizedQuadrature(benchmark::State& state) {
  QuadratureSpec spec;
  spec.mass = kCfg.mass;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        localized_integrals_quadrature(kCfg, 1.0, +1, 0.0, spec));
}
BENCHMARK(BM_LocalizedQuadrature);

void BM_LatticeTransform(benchmark::State& state) {
  LatticeSpec lat;
  lat.n = static_cast<int>(state.range(0));
  lat.dk = 0.1;
  const LatticeTransform tr(lat);
  std::vector<complexd> a(lat.sites(), complexd(0.3, -0.2));
  for (auto _ : state) {
    tr.to_position(a);
    tr.to_momentum(a);
    benchmark::DoNotOptimize(a.data());
  }
}
BENCHMARK(BM_LatticeTransform)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
