#include "bdris/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdris {

std::vector<double> rate_degradation(const RateReport& safe,
                                     const RateReport& attacked) {
  const size_t users = safe.private_rates.size();
  if (attacked.private_rates.size() != users)
    throw std::invalid_argument("rate_degradation: user counts differ");
  const double common_share = (safe.common_rate - attacked.common_rate) / users;
  std::vector<double> delta(users);
  for (size_t u = 0; u < users; ++u)
    delta[u] = safe.private_rates[u] - attacked.private_rates[u] + common_share;
  return delta;
}

double robustness_index(const RateReport& safe, const RateReport& attacked) {
  const std::vector<double> delta = rate_degradation(safe, attacked);
  const size_t users = delta.size();
  double acc = 0.0;
  for (size_t u = 0; u < users; ++u) {
    const double baseline = safe.common_rate / users + safe.private_rates[u];
    if (!(baseline > 0.0))
      throw std::domain_error("robustness_index: zero safe baseline for a user");
    acc += 1.0 - delta[u] / baseline;
  }
  return std::clamp(acc / users, 0.0, 1.0);
}

RobustnessReport robustness_report(const RateReport& safe,
                                   const RateReport& attacked) {
  RobustnessReport rep;
  rep.per_user_degradation = rate_degradation(safe, attacked);
  rep.total_degradation = 0.0;
  for (double d : rep.per_user_degradation) rep.total_degradation += d;
  rep.robustness_index = robustness_index(safe, attacked);
  return rep;
}

}  // namespace bdris
