//! \file test_specfun.cpp
//! \brief Oracle tests for Gamma, modified Bessel K, 1F2 and the regulated
//!        radial quadrature.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>

#include "proca/specfun.hpp"

using namespace proca;
using Catch::Matchers::WithinRel;

TEST_CASE("gamma function reference values", "[specfun]") {
  CHECK_THAT(gamma_fn(0.25), WithinRel(3.6256099082219083, 1e-13));
  CHECK_THAT(gamma_fn(0.75), WithinRel(1.2254167024651776, 1e-13));
  CHECK_THAT(gamma_fn(1.0 / 3.0), WithinRel(2.6789385347077476, 1e-13));
  CHECK_THAT(gamma_fn(4.7), WithinRel(15.431411600047432, 1e-13));
  CHECK_THAT(gamma_fn(1.0), WithinRel(1.0, 1e-14));
  CHECK_THAT(gamma_fn(5.0), WithinRel(24.0, 1e-13));
}

TEST_CASE("bessel K reference values", "[specfun]") {
  CHECK_THAT(bessel_k(0.25, 0.001), WithinRel(11.756476271934459, 1e-10));
  CHECK_THAT(bessel_k(0.25, 0.5), WithinRel(0.96031632493188602, 1e-10));
  CHECK_THAT(bessel_k(0.25, 10.0), WithinRel(1.7833184439806392e-5, 1e-10));
  CHECK_THAT(bessel_k(0.75, 2.0), WithinRel(0.12790297862917903, 1e-10));
  CHECK_THAT(bessel_k(1.25, 1.0), WithinRel(0.73114518792021139, 1e-10));
  CHECK_THAT(bessel_k(1.75, 5.0), WithinRel(0.0048781505085241236, 1e-10));
  CHECK_THAT(bessel_k(1.75, 50.0), WithinRel(3.5151553317156923e-23, 1e-10));
}

TEST_CASE("bessel K symmetry and recurrences", "[specfun]") {
  // K_{-nu} = K_nu.
  CHECK_THAT(bessel_k(-0.75, 1.3), WithinRel(bessel_k(0.75, 1.3), 1e-14));
  for (const double z : {0.05, 0.7, 3.0, 12.0}) {
    // K_{5/4} = K_{3/4} + K_{1/4} / (2z).
    CHECK_THAT(bessel_k(1.25, z),
               WithinRel(bessel_k(0.75, z) + bessel_k(0.25, z) / (2.0 * z),
                         1e-11));
    // K_{7/4} = (3 / (2z)) K_{3/4} + K_{1/4}.
    CHECK_THAT(bessel_k(1.75, z),
               WithinRel(1.5 / z * bessel_k(0.75, z) + bessel_k(0.25, z),
                         1e-11));
    // Half-integer closed form.
    CHECK_THAT(bessel_k(0.5, z),
               WithinRel(std::sqrt(kPi / (2.0 * z)) * std::exp(-z), 1e-13));
  }
  CHECK_THROWS_AS(bessel_k(0.25, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(bessel_k(0.25, -1.0), std::invalid_argument);
}

TEST_CASE("1F2 reference values", "[specfun]") {
  CHECK_THAT(hyp1f2(0.5, 1.25, 1.5, 1.0),
             WithinRel(1.3049499985812509, 1e-12));
  CHECK_THAT(hyp1f2(0.25, 0.75, 1.25, 4.0),
             WithinRel(3.0245842086081042, 1e-12));
  CHECK_THAT(hyp1f2(-0.25, 0.25, 0.75, 2.0),
             WithinRel(-2.7743161274953353, 1e-12));
  CHECK_THAT(hyp1f2(0.5, 1.5, 1.75, 6.25),
             WithinRel(3.4234500337620667, 1e-12));
  CHECK_THAT(hyp1f2(0.5, 1.25, 1.5, 0.0), WithinRel(1.0, 1e-15));
  CHECK_THROWS_AS(hyp1f2(0.5, -1.0, 1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hyp1f2(0.5, 1.5, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("adaptive Gauss-Kronrod quadrature", "[specfun]") {
  const auto sin_f = [](double x) { return complexd(std::sin(x), 0.0); };
  CHECK_THAT(integrate_gk(sin_f, 0.0, kPi, 1e-14, 1e-13, 2000).real(),
             WithinRel(2.0, 1e-12));
  // Oscillatory with many periods.
  const auto osc = [](double x) {
    return complexd(std::cos(7.0 * x) * std::exp(-x / 10.0), 0.0);
  };
  const double exact =
      (std::exp(-kPi * 2.0) * (0.1 * 1.0) - 0.1) /
      (49.0 + 0.01) * -1.0;  // int_0^{20 pi} cos(7x) e^{-x/10} dx
  const double val =
      integrate_gk(osc, 0.0, 20.0 * kPi, 1e-14, 1e-12, 4000).real();
  CHECK_THAT(val, WithinRel(exact, 1e-10));
  // An unresolvable integrand within the subdivision budget must throw.
  const auto fast = [](double x) { return complexd(std::sin(1e4 * x), 0.0); };
  CHECK_THROWS_AS(integrate_gk(fast, 0.0, 1.0, 1e-14, 1e-13, 16),
                  ConvergenceError);
}

TEST_CASE("regulated radial integral: absolutely convergent case", "[specfun]") {
  QuadratureSpec spec;  // default ladder: extrapolation error ~1e-5
  spec.mass = 1.0;
  // f = e^{-k}: the regulator e^{-delta omega} -> 1 leaves int_0^inf = 1.
  const auto f = [](double k) { return complexd(std::exp(-k), 0.0); };
  const RegulatedIntegral r = regulated_radial_integral(f, spec);
  CHECK_THAT(r.value.real(), WithinRel(1.0, 5e-4));
  CHECK(std::abs(r.value.imag()) < 1e-12);
  CHECK(r.per_delta.size() == spec.regulator_deltas.size());
  // The fine ladder tightens the extrapolation considerably.
  const RegulatedIntegral rf =
      regulated_radial_integral(f, QuadratureSpec::fine(1.0));
  CHECK_THAT(rf.value.real(), WithinRel(1.0, 1e-5));
}

TEST_CASE("regulated radial integral: Abel-summable case", "[specfun]") {
  // f = sin(k): Abel sum of int_0^inf sin(k) dk is 1.
  const auto f = [](double k) { return complexd(std::sin(k), 0.0); };
  const RegulatedIntegral r =
      regulated_radial_integral(f, QuadratureSpec::fine(1.0));
  CHECK_THAT(r.value.real(), WithinRel(1.0, 1e-5));
}

TEST_CASE("quadrature spec validation", "[specfun]") {
  QuadratureSpec spec;
  spec.regulator_deltas = {0.1, 0.2};  // not decreasing
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.regulator_deltas = {};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.regulator_deltas = {0.2, 0.1};
  spec.mass = -1.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  const QuadratureSpec fine = QuadratureSpec::fine(2.0);
  CHECK_NOTHROW(fine.validate());
  CHECK(fine.mass == 2.0);
}
