#include "proca/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include <fmt/format.h>

namespace proca {

//==============================================================================
// Gamma (Lanczos, g = 7, 9 coefficients)
//==============================================================================

double gamma_fn(double x) {
  if (!(x > 0.0))
    throw std::invalid_argument("gamma_fn: argument must be positive");
  static constexpr double g = 7.0;
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  const double z = x - 1.0;
  double a = c[0];
  for (int i = 1; i < 9; ++i) a += c[i] / (z + i);
  const double t = z + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

//==============================================================================
// Adaptive Gauss-Kronrod (G7, K15)
//==============================================================================

namespace {

// Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights embedded
// at the odd Kronrod positions.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  complexd integral{};
  double error = 0.0;
};

PanelResult gk15(const std::function<complexd(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  complexd resk{}, resg{};
  for (int j = 0; j < 8; ++j) {
    if (j == 7) {
      const complexd fc = f(c);
      resk += kWgk[7] * fc;
      resg += kWg[3] * fc;
    } else {
      const complexd fl = f(c - h * kXgk[j]);
      const complexd fr = f(c + h * kXgk[j]);
      resk += kWgk[j] * (fl + fr);
      if (j % 2 == 1) resg += kWg[j / 2] * (fl + fr);
    }
  }
  PanelResult out;
  out.integral = resk * h;
  const double diff = std::abs(resk - resg) * std::abs(h);
  // Standard QUADPACK-style error sharpening.
  out.error = diff;
  return out;
}

struct Panel {
  double a, b;
  complexd integral;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

complexd integrate_gk(const std::function<complexd(double)>& f, double a,
                      double b, double abs_tol, double rel_tol,
                      int max_subdivisions) {
  // Seed with panels short enough that moderate oscillations (wavelength of
  // order one) are already resolved; refine adaptively afterwards.
  const double span = b - a;
  const int n0 = std::clamp(static_cast<int>(span / 0.5) + 1, 1,
                            std::max(1, max_subdivisions / 2));
  std::priority_queue<Panel> panels;
  complexd total{};
  double total_err = 0.0;
  double total_mag = 0.0;  // sum of |panel| values: conditioning of the sum
  const double h0 = span / n0;
  for (int i = 0; i < n0; ++i) {
    const double pa = a + i * h0, pb = (i + 1 == n0) ? b : a + (i + 1) * h0;
    const PanelResult r = gk15(f, pa, pb);
    panels.push({pa, pb, r.integral, r.error});
    total += r.integral;
    total_err += r.error;
    total_mag += std::abs(r.integral);
  }
  int used = n0;
  // A cancelling sum of panels cannot be more accurate than eps * sum |panel|;
  // below that floor further subdivision only shuffles roundoff.
  const auto tolerance = [&] {
    return std::max({abs_tol, rel_tol * std::abs(total), 8e-15 * total_mag});
  };
  while (total_err > tolerance()) {
    if (used >= max_subdivisions)
      throw ConvergenceError(fmt::format(
          "integrate_gk: error {:.3e} above tolerance (abs {:.3e}, rel {:.3e},"
          " |I| {:.3e}) after {} subdivisions on [{:.6g}, {:.6g}]",
          total_err, abs_tol, rel_tol, std::abs(total), used, a, b));
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const PanelResult rl = gk15(f, worst.a, mid);
    const PanelResult rr = gk15(f, mid, worst.b);
    total += rl.integral + rr.integral - worst.integral;
    total_err += rl.error + rr.error - worst.error;
    total_mag +=
        std::abs(rl.integral) + std::abs(rr.integral) - std::abs(worst.integral);
    panels.push({worst.a, mid, rl.integral, rl.error});
    panels.push({mid, worst.b, rr.integral, rr.error});
    ++used;
  }
  return total;
}

//==============================================================================
// Bessel K
//==============================================================================

double bessel_k(double nu, double z) {
  if (!(z > 0.0)) throw std::invalid_argument("bessel_k: z must be positive");
  nu = std::abs(nu);  // K_{-nu} = K_nu
  // e^{-z cosh t} relative to the e^{-z} scale of K_nu: truncate where
  // z (cosh T - 1) > 55.
  const double T = std::acosh(1.0 + 55.0 / z);
  const auto integrand = [nu, z](double t) -> complexd {
    return std::exp(-z * std::cosh(t)) * std::cosh(nu * t);
  };
  const complexd val = integrate_gk(integrand, 0.0, T, 0.0, 1e-13, 4000);
  return val.real();
}

//==============================================================================
// 1F2
//==============================================================================

double hyp1f2(double a, double b1, double b2, double z) {
  const auto bad = [](double b) {
    return b <= 0.0 && b == std::floor(b);
  };
  if (bad(b1) || bad(b2))
    throw std::invalid_argument(
        "hyp1f2: lower parameters must not be non-positive integers");
  double term = 1.0, sum = 1.0;
  for (int n = 0; n < 600; ++n) {
    term *= (a + n) / ((b1 + n) * (b2 + n)) * z / (n + 1.0);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && n > 2) return sum;
  }
  throw ConvergenceError(fmt::format(
      "hyp1f2({}, {}, {}; {}) did not converge in 600 terms", a, b1, b2, z));
}

//==============================================================================
// Regulated radial integral
//==============================================================================

void QuadratureSpec::validate() const {
  if (max_subdivisions < 1)
    throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >=1");
  if (!(mass > 0.0))
    throw std::invalid_argument("QuadratureSpec: mass must be positive");
  if (regulator_deltas.empty())
    throw std::invalid_argument("QuadratureSpec: regulator ladder is empty");
  for (std::size_t i = 0; i < regulator_deltas.size(); ++i) {
    if (!(regulator_deltas[i] > 0.0))
      throw std::invalid_argument("QuadratureSpec: deltas must be positive");
    if (i > 0 && !(regulator_deltas[i] < regulator_deltas[i - 1]))
      throw std::invalid_argument(
          "QuadratureSpec: deltas must be strictly decreasing");
  }
}

QuadratureSpec QuadratureSpec::fine(double mass) {
  QuadratureSpec s;
  s.mass = mass;
  s.regulator_deltas.clear();
  // Geometric ladder 0.05 .. 0.003125 (in units of 1/M): deep enough for the
  // Neville limit, shallow enough that the damped tails stay integrable to
  // machine accuracy.
  for (int j = 0; j < 5; ++j)
    s.regulator_deltas.push_back(0.05 / (mass * (1 << j)));
  return s;
}

RegulatedIntegral regulated_radial_integral(
    const std::function<complexd(double)>& f, const QuadratureSpec& spec) {
  spec.validate();
  const double M = spec.mass;
  RegulatedIntegral out;
  for (double delta : spec.regulator_deltas) {
    // Beyond k_max the regulator alone is < e^{-45}; truncation negligible.
    const double k_max = 45.0 / delta;
    const auto damped = [&](double k) -> complexd {
      const double w = std::sqrt(k * k + M * M);
      return f(k) * std::exp(-delta * w);
    };
    try {
      out.per_delta.push_back(integrate_gk(damped, 0.0, k_max, spec.abs_tol,
                                           spec.rel_tol,
                                           spec.max_subdivisions));
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(
          fmt::format("regulated_radial_integral: quadrature at delta={:.6g} "
                      "failed: {}",
                      delta, e.what()));
    }
  }
  // Neville polynomial extrapolation in delta to delta = 0.
  const std::size_t n = out.per_delta.size();
  std::vector<complexd> t = out.per_delta;
  std::vector<double> d(spec.regulator_deltas);
  complexd prev_diag = t[0];
  double prev_step = std::numeric_limits<double>::infinity();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double x0 = d[i], x1 = d[i + level];
      t[i] = (x0 * t[i + 1] - x1 * t[i]) / (x0 - x1);
    }
    const double step = std::abs(t[0] - prev_diag);
    // Diverging tableau => the regulator limit does not exist numerically.
    if (level > 1 && step > 8.0 * prev_step &&
        step > 100.0 * std::max(spec.abs_tol,
                                spec.rel_tol * std::abs(t[0]))) {
      std::string diag = "regulated_radial_integral: extrapolation diverging;"
                         " per-delta values:";
      for (std::size_t j = 0; j < n; ++j)
        diag += fmt::format(" ({:.4g}: {:.10g}{:+.10g}i)", d[j],
                            out.per_delta[j].real(), out.per_delta[j].imag());
      throw ConvergenceError(diag);
    }
    prev_step = step;
    prev_diag = t[0];
    out.error_estimate = step;
  }
  out.value = t[0];
  return out;
}

}  // namespace proca
