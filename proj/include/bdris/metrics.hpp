#pragma once

#include <vector>

#include "bdris/transceiver.hpp"

namespace bdris {

/// Attack impact for one channel realization: per-user rate loss and the
/// fraction of baseline performance retained.
struct RobustnessReport {
  std::vector<double> per_user_degradation;
  double total_degradation = 0.0;  // sum over users
  double robustness_index = 1.0;   // clamped to [0, 1]
};

/// Per-user loss between the safe and attacked reports, with the common rate
/// shared uniformly: (safe_p - attacked_p) + (safe_c - attacked_c)/U.
/// Throws std::invalid_argument on user-count mismatch.
std::vector<double> rate_degradation(const RateReport& safe,
                                     const RateReport& attacked);

/// Mean over users of the retained fraction 1 - loss/baseline, clamped to
/// [0, 1]. Throws std::domain_error when some user's safe total rate is zero
/// (undefined baseline).
double robustness_index(const RateReport& safe, const RateReport& attacked);

RobustnessReport robustness_report(const RateReport& safe,
                                   const RateReport& attacked);

}  // namespace bdris
