#pragma once

#include <vector>

#include "bdris/channel.hpp"
#include "bdris/linalg.hpp"

namespace bdris {

/// Unit-norm precoders plus the power split. alpha_common + U * alpha_private
/// equals 1; the private coefficient is uniform across users.
struct PrecoderSet {
  CVec common;
  std::vector<CVec> privates;
  double alpha_common = 0.0;
  double alpha_private = 0.0;
};

struct RateReport {
  double common_rate = 0.0;                // min over users, bits/s/Hz
  std::vector<double> private_rates;       // per user
  double sum_rate = 0.0;
  std::vector<double> common_sinr;         // linear, per user
  std::vector<double> private_sinr;
};

/// Composite downlink channel seen by a user, as a column vector:
/// direct + (reflected path through theta)^H applied to the RIS links.
/// Passing an empty theta (or zero-size g) returns the direct channel.
CVec effective_channel(const CVec& direct, const CMat& bs_ris, const CVec& ris_user,
                       const CMat& theta);

/// True composite channels of all users under a given surface state.
std::vector<CVec> true_effective_channels(const ChannelSet& ch, const CMat& theta);

/// Regularized zero-forcing columns, each normalized to unit l2 norm.
/// Regularization is noise_mw / power_mw.
std::vector<CVec> private_precoders(const std::vector<CVec>& est_direct,
                                    double power_mw, double noise_mw);

/// Weighted matched filter for the multicast stream; weights 1/||h||^2 give
/// weak users priority. Unit norm. Throws std::domain_error on a zero channel.
CVec common_precoder(const std::vector<CVec>& est_direct);

/// Residual interference power left by imperfect cancellation of the common
/// stream: sic_error * |eff^H w_c|^2 * P * alpha_common.
double sic_residual(const CVec& eff, const CVec& common, double power_mw,
                    double alpha_common, double sic_error);

/// Rates from the SINR model: the common stream is decoded first with all
/// privates as interference and its rate is set by the weakest user; private
/// streams see the other privates, the cancellation residual and noise.
RateReport evaluate_rates(const std::vector<CVec>& eff, const PrecoderSet& pre,
                          double power_mw, double noise_mw, double sic_error);

/// Index of the user with the best private performance indicator
/// (signal over leakage + cancellation residual + noise). Ties break low.
int select_reference_user(const std::vector<CVec>& est_direct, const CVec& common,
                          const std::vector<CVec>& privates, double power_mw,
                          double noise_mw, double sic_error);

struct PowerAllocation {
  double alpha_common = 1.0;
  double alpha_private = 0.0;
  double eta = 0.0;       // chosen scaling factor
  double eta_max = 0.0;   // feasibility bound (alpha_common = 0 there)
  double surrogate = 0.0; // estimated-channel sum rate at the chosen point
};

/// Line search over the private-power scaling factor on a uniform grid of
/// grid_size points spanning [0, eta_max]; the surrogate objective is the
/// sum rate evaluated on the estimated channels. Ties prefer the smaller
/// scaling (more power on the common stream).
PowerAllocation allocate_power(const std::vector<CVec>& est_direct, const CVec& common,
                               const std::vector<CVec>& privates, double power_mw,
                               double noise_mw, double sic_error, int grid_size = 128);

/// Baseline without rate splitting: the same regularized zero-forcing
/// privates under uniform power 1/U, no common stream, no cancellation.
RateReport sdma_rates(const std::vector<CVec>& eff, const std::vector<CVec>& privates,
                      double power_mw, double noise_mw);

}  // namespace bdris
