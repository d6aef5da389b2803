//! \file transforms.hpp
//! \brief Foldy-type transforms between solutions and L^2 wave functions.
//!
//! The wave function of a solution A relative to the inner-product family
//! member with weights a = |alpha|^2 is, per mode and chirality,
//!   f_eps(k) = sqrt(kappa/M) [ U_{eps,+} A_eps(x0_ref, k) ]   (3 Cartesian
//! components), where A_eps is the chirality-eps part of the spatial spectral
//! amplitude at the reference time. The map is unitary onto (sum of) L^2:
//!   sum_eps sum_k |f_eps(k)|^2 = ((A,A))_a,
//! and free evolution acts as the diagonal phase e^{-i eps omega dt}.

#pragma once

#include "proca/fields.hpp"

namespace proca {

//==============================================================================
// WaveFunctionSet
//==============================================================================

//! \brief Wave-function data of a solution on its discrete mode set.
struct WaveFunctionSet {
  PhysicsConfig cfg;
  MetricParams params;   //!< family member the map was taken in
  double x0_ref = 0.0;   //!< reference time of the transform
  struct Entry {
    Vec3 k = Vec3::Zero();
    //! f[chirality_slot(eps)]: the three Cartesian components; the spin
    //! labels (s^1, s^2, s^3) = (+1, -1, 0) tag the components in order.
    std::array<Vec3c, 2> f{Vec3c::Zero(), Vec3c::Zero()};
  };
  std::vector<Entry> entries;

  //! Squared L^2 norm  sum_eps sum_k |f_eps(k)|^2.
  double norm_sq() const {
    double s = 0.0;
    for (const auto& e : entries)
      for (const auto& v : e.f) s += v.squaredNorm();
    return s;
  }
};

//! Forward transform at reference time x0_ref.
WaveFunctionSet to_wavefunction(const DiscreteModeField& A, double x0_ref,
                                const MetricParams& params =
                                    MetricParams::identity());

//! Inverse transform: reconstruct the mode expansion from wave-function data.
DiscreteModeField from_wavefunction(const WaveFunctionSet& w,
                                    Normalization norm = Normalization::Unit,
                                    const MetricParams& norm_params =
                                        MetricParams::identity());

//! Reconstructed time component A^0(x0_ref) at mode j (closed form from the
//! inverse map); used to cross-check against the mode expansion.
complexd wavefunction_time_component(const WaveFunctionSet& w, std::size_t j);

//! Free wave-function evolution: the diagonal phase e^{-i eps omega dt}.
WaveFunctionSet evolve_wavefunction(const WaveFunctionSet& w, double dt);

//==============================================================================
// Maps between family members
//==============================================================================

//! Represent the same abstract state in the family member with the given
//! parameters: coefficients rescale as c -> c / alpha_{eps,h}.
DiscreteModeField map_between_products(const DiscreteModeField& A,
                                       const MetricParams& target);

}  // namespace proca
