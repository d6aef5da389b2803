//! \file relativity.hpp
//! \brief Lorentz boosts, conserved currents and probability density/current.
//!
//! Boost convention: the active boost with velocity beta maps the four-momentum
//! p = (eps omega, k) to p' = Lambda p (chirality preserved for |beta| < 1)
//! and re-expands the boosted amplitude in the polarization basis at k'.
//! Discrete (unit-weight Kronecker) mode coefficients rescale by
//! sqrt(omega/omega') so that every family inner product is invariant.

#pragma once

#include "proca/fields.hpp"

namespace proca {

//==============================================================================
// Boosts
//==============================================================================

//! Exact finite boost of a mode field. Throws RepresentationError if two
//! boosted momenta collide.
DiscreteModeField boost_field(const DiscreteModeField& f, const Vec3& beta);

//! First-order (infinitesimal) boost of Cauchy data at time x0:
//!   A^0 -> A^0 - beta.A,  A -> A - beta A^0,  E -> E + beta x (curl A),
//! with momenta shifted to k' = k - eps omega beta. The result is exact to
//! O(beta); comparing with boost_field exhibits the O(beta^2) residual.
DiscreteModeField boost_field_first_order(const DiscreteModeField& f,
                                          const Vec3& beta);

//==============================================================================
// Currents
//==============================================================================

//! Conserved current of the canonical product,
//!   J^mu = (i kappa / 2M) { A*_nu F_c^{nu mu} - F^{nu mu *} A_{c nu} },
//! with A_c = i D^{-1/2} Adot and F^{nu mu} = d^nu A^mu - d^mu A^nu.
FourVec current_canonical(const DiscreteModeField& f, double x0,
                          const Vec3& x);

//! Indefinite Sigma3-current  J^mu = i g { A*_nu F^{nu mu} - F^{nu mu *} A_nu }
//! with g = kappa/(2M).
FourVec current_sigma3(const DiscreteModeField& f, double x0, const Vec3& x);

//! Time component of the family current,
//!   J^0_a = (kappa/2M) { A* . Th+ D^{-1/2} Edot - E* . Th+ D^{-1/2} Adot
//!            - i [ A* . Th- E - E* . Th- A ] }.
complexd current_j0_general(const DiscreteModeField& f, double x0,
                            const Vec3& x, const MetricParams& params);

//! Exact divergence d_mu J^mu of the canonical current at (x0, x), computed by
//! analytic mode differentiation (phases only; no finite differences).
complexd current_divergence(const DiscreteModeField& f, double x0,
                            const Vec3& x);

//! Spatial integral of J^0_a (closed mode sum; equals the norm).
complexd integral_j0_general(const DiscreteModeField& f,
                             const MetricParams& params);

//==============================================================================
// Probability density and current
//==============================================================================

//! Pointwise probability density of the canonical product,
//!   rho = (kappa/2M) { |U A|^2 + |U A_c|^2 }.
double probability_density(const DiscreteModeField& f, double x0,
                           const Vec3& x);

//! Family version (general weights).
double probability_density_general(const DiscreteModeField& f, double x0,
                                   const Vec3& x, const MetricParams& params);

//! Spatial integral of the family probability density (closed mode sum).
double integral_probability_general(const DiscreteModeField& f,
                                    const MetricParams& params);

//! Probability current (canonical):
//!   calJ^mu = (kappa/2M) Re{ (U A)* (D^{-1} d^mu U Adot)
//!                            + (U A_c)* (D^{-1} d^mu U A_c-dot) } + Ups^mu,
//! Ups^0 = 0 and Ups^i the advective correction with
//! W = D^{-1/2} (sqrt(D)+M)^{-1} U. Satisfies calJ^0 = rho but is not
//! conserved.
FourVec probability_current(const DiscreteModeField& f, double x0,
                            const Vec3& x);

//! Divergence d_mu calJ^mu by analytic mode differentiation; nonzero in
//! general (the current is not covariantly conserved).
double probability_current_divergence(const DiscreteModeField& f, double x0,
                                      const Vec3& x);

}  // namespace proca
