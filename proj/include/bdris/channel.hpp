#pragma once

#include <vector>

#include "bdris/linalg.hpp"
#include "bdris/rng.hpp"
#include "bdris/scenario.hpp"

namespace bdris {

/// True and estimated channels for one trial. Direct vectors are length M,
/// the BS-RIS matrix is D x M, RIS-user vectors are length D.
/// training_reflection is the surface state during uplink pilots: a valid
/// reflection matrix in reflective mode, the zero matrix in absorption mode.
struct ChannelSet {
  std::vector<CVec> direct;        // h_u
  CMat bs_ris;                     // G
  std::vector<CVec> ris_user;      // g_u
  std::vector<CVec> est_direct;    // h_u estimates at the BS
  CMat est_bs_ris;                 // G estimate at the attacker
  std::vector<CVec> est_ris_user;  // g_u estimates at the attacker
  CMat training_reflection;
};

/// Draws the true channels: i.i.d. circularly-symmetric complex Gaussian
/// entries with per-entry variance d^{-eta} of the corresponding link.
/// Estimates are left empty.
ChannelSet sample_channels(const Scenario& sc, RngStream& rng);

/// Fills the estimate fields. The BS-side direct estimate blends the pilot
/// observation (direct path plus, in reflective mode, the path through
/// theta_train) with a Gaussian error vector; the attacker-side estimates of
/// its own links blend truth with Gaussian errors. Error entries are scaled
/// to the per-entry variance of the link they corrupt, so each error factor
/// is the fraction of channel power replaced by noise.
void estimate_channels(ChannelSet& ch, const Scenario& sc, RngStream& rng,
                       const CMat& theta_train);

}  // namespace bdris
