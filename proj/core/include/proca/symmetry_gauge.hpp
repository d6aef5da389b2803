//! \file symmetry_gauge.hpp
//! \brief Discrete symmetries (PT, C) and the abelian gauge structure of the
//!        inner-product family.
//!
//! Sign conventions: the natural bank P = Sigma_3, T = complex conjugation
//! composed with time reflection, C = H / omega. On solutions:
//!   [PT A](x0) = (-A^0(-x0)*, A(-x0)*),
//!   [C A](x0)  = i D^{-1/2} Adot(x0)   (the chirality sign per mode).
//! The family gauge transformation multiplies the (eps,h) coefficient by
//! e^{-i eps a_{eps,h} theta}; its generator is -i (theta_{+,0} C + theta_{-,0}).

#pragma once

#include "proca/fields.hpp"

namespace proca {

//==============================================================================
// Discrete symmetries
//==============================================================================

//! Charge-like conjugation: coefficient map c_{eps,h} -> eps c_{eps,h}.
DiscreteModeField apply_charge(const DiscreteModeField& f);

//! Combined PT map (antilinear): conjugate coefficients with momentum
//! reflection k -> -k, re-expanded in the polarization basis at -k.
//! Chirality is preserved.
DiscreteModeField apply_pt(const DiscreteModeField& f);

//! Build a PT-invariant field from arbitrary seed coefficients:
//! returns (A + PT A)/ ... normalized so that PT fp = fp exactly.
DiscreteModeField pt_symmetrize(const DiscreteModeField& f);

//==============================================================================
// Gauge transformations of the family
//==============================================================================

//! Finite gauge transform: c_{eps,h} -> e^{-i eps a_{eps,h} theta} c_{eps,h}
//! with a = |alpha|^2 from params.
DiscreteModeField gauge_transform(const DiscreteModeField& f,
                                  const MetricParams& params, double theta);

//! The six phases of the one-parameter group element, canonical slot order:
//! diag(e^{-i a_{+,h} theta} ; e^{+i a_{-,h} theta}).
std::array<complexd, 6> gauge_group_element(const MetricParams& params,
                                            double theta);

//! Exact weight for the gauge-group classifier: either a reduced rational
//! num/den or an explicitly tagged irrational.
struct GaugeWeight {
  bool rational = true;
  long long num = 1;
  long long den = 1;
  static GaugeWeight exact(long long num, long long den);
  static GaugeWeight irrational();
};

//! Classification of the closure of the one-parameter gauge group.
struct GaugeGroupInfo {
  bool compact = false;  //!< true: isomorphic to U(1); false: line group
  double period = 0.0;   //!< smallest positive period (compact case)
  long long period_num = 0;  //!< period = 2 pi period_num / period_den
  long long period_den = 1;
};

//! Classify from the six exact weights (canonical slot order). Throws on a
//! zero denominator.
GaugeGroupInfo classify_gauge_group(const std::array<GaugeWeight, 6>& w);

//! Residual of the generator identity at one momentum: compares the finite
//! transform's derivative at theta = 0 against -i(Theta_{+,0} C + Theta_{-,0})
//! acting mode-wise; returns the residual for step theta (expected O(theta^2)).
double gauge_generator_residual(const DiscreteModeField& f,
                                const MetricParams& params, double theta);

}  // namespace proca
