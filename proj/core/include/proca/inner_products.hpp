//! \file inner_products.hpp
//! \brief The five-parameter family of conserved inner products.
//!
//! Three evaluation styles are provided and must agree:
//!  - the indefinite Sigma3 product
//!      ((A,A'))_S3 = i g [ <E,A'> - <A,E'> ],   g = kappa / (2M),
//!  - the canonical positive product
//!      ((A,A')) = (kappa/2M) [ <A, D^{-1/2} Edot'> - <E, D^{-1/2} Adot'> ],
//!  - the general product with weight operators Theta_{+,0}, Theta_{-,0}
//!      ((A,A'))_a = (kappa/2M) [ <A, Th+ D^{-1/2} Edot'> - <E, Th+ D^{-1/2} Adot'>
//!                    - i ( <A, Th- E'> - <E, Th- A'> ) ],
//! where <.,.> is the spatial L^2 product (conjugation on the first slot) and
//! E = -Adot - grad A^0. For mode expansions each product reduces to the
//! closed mode sum (kappa/M) sum_j sum_{eps,h} a_{eps,h} omega_j N N'
//! c*_{eps,h} c'_{eps,h}; evaluation is carried out in the position-space form
//! (per-mode matrix action) so the reduction is a testable identity rather
//! than an assumption.

#pragma once

#include "proca/fields.hpp"

namespace proca {

enum class InnerProductKind {
  Sigma3,     //!< indefinite chirality-weighted product
  Canonical,  //!< positive product of the canonical metric
  General,    //!< five-parameter family member
};

//! Position-space evaluation of the chosen product at common time x0.
//! `params` is used by General (ignored by the other kinds).
complexd inner_product(InnerProductKind kind, const DiscreteModeField& A,
                       const DiscreteModeField& B, double x0,
                       const MetricParams& params = MetricParams::identity());

//! Six-component route for the canonical product:
//!   ((A,B)) = (kappa / 4 gamma M) <Psi_A, eta_+ Psi_B>.
complexd inner_product_six_component(const DiscreteModeField& A,
                                     const DiscreteModeField& B, double x0);

//! Six-component route for the Sigma3 product:
//!   ((A,B))_S3 = (g / 2 gamma) <Psi_A, Sigma_3 Psi_B>, g = kappa/(2M).
complexd inner_product_sigma3_six(const DiscreteModeField& A,
                                  const DiscreteModeField& B, double x0);

//! Direct mode-sum evaluation (time-independent closed form).
complexd inner_product_modesum(const DiscreteModeField& A,
                               const DiscreteModeField& B,
                               const MetricParams& params =
                                   MetricParams::identity());

//! Sigma3 product restricted to one chirality sector.
complexd inner_product_sigma3_sector(const DiscreteModeField& A,
                                     const DiscreteModeField& B, double x0,
                                     int eps);

//! General product as a weighted combination of Sigma3 products of the
//! (chirality, helicity) sector restrictions:
//!   ((A,B))_a = sum_{eps,h} eps a_{eps,h} ((A_{eps,h}, B_{eps,h}))_S3.
complexd decompose_as_sigma3(const DiscreteModeField& A,
                             const DiscreteModeField& B, double x0,
                             const MetricParams& params);

//! Gram matrix of a set of fields under the chosen product.
Eigen::MatrixXcd gram_matrix(InnerProductKind kind,
                             const std::vector<DiscreteModeField>& fields,
                             double x0,
                             const MetricParams& params =
                                 MetricParams::identity());

}  // namespace proca
