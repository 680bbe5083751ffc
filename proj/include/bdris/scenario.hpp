#pragma once

#include <string>
#include <vector>

namespace bdris {

enum class UplinkMode { absorb, reflect };

/// Physical and protocol parameters of one deployment: geometry, array and
/// surface dimensions, estimation/cancellation error factors and power
/// levels. Angles are degrees, distances meters, powers dBm.
struct Scenario {
  int num_antennas = 32;
  int num_elements = 200;
  int group_size = 5;
  int num_users = 3;
  std::vector<double> user_distances{30.0, 50.0, 60.0};
  std::vector<double> user_azimuths{25.0, 15.0, 10.0};
  double ris_distance = 40.0;
  double ris_azimuth = 5.0;
  double pathloss_exponent = 3.0;
  double csi_error_bs_user = 0.3;
  double csi_error_bs_ris = 0.3;
  double csi_error_ris_user = 0.3;
  double sic_error = 0.0;
  double noise_power_dbm = -60.0;
  double transmit_power_dbm = 30.0;
  UplinkMode uplink_mode = UplinkMode::reflect;
  std::vector<double> adversary_weights;  // empty -> uniform 1/U

  double noise_power_mw() const;
  double transmit_power_mw() const;

  /// Uniform 1/U when adversary_weights is empty, the explicit list otherwise.
  std::vector<double> effective_adversary_weights() const;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// RIS-to-user distance from the law of cosines on (d_ris, d_u) with the
/// azimuth separation between the RIS and user directions.
double ris_user_distance(const Scenario& sc, int user);

/// Per-entry fading variances d^{-eta} for the three links.
double direct_link_variance(const Scenario& sc, int user);
double bs_ris_link_variance(const Scenario& sc);
double ris_user_link_variance(const Scenario& sc, int user);

}  // namespace bdris
