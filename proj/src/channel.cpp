#include "bdris/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace bdris {

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double Scenario::noise_power_mw() const { return dbm_to_mw(noise_power_dbm); }
double Scenario::transmit_power_mw() const { return dbm_to_mw(transmit_power_dbm); }

std::vector<double> Scenario::effective_adversary_weights() const {
  if (!adversary_weights.empty()) return adversary_weights;
  return std::vector<double>(num_users, 1.0 / num_users);
}

void Scenario::validate() const {
  if (num_antennas < 1) throw std::invalid_argument("num_antennas must be >= 1");
  if (num_elements < 1) throw std::invalid_argument("num_elements must be >= 1");
  if (num_users < 1) throw std::invalid_argument("num_users must be >= 1");
  if (num_antennas < num_users)
    throw std::invalid_argument("M >= U violated: num_antennas = " +
                                std::to_string(num_antennas) + ", num_users = " +
                                std::to_string(num_users));
  if (group_size < 1 || num_elements % group_size != 0)
    throw std::invalid_argument("D divisible by D_g violated: num_elements = " +
                                std::to_string(num_elements) + ", group_size = " +
                                std::to_string(group_size));
  if (user_distances.size() != size_t(num_users))
    throw std::invalid_argument("user_distances must list one distance per user");
  if (user_azimuths.size() != size_t(num_users))
    throw std::invalid_argument("user_azimuths must list one azimuth per user");
  for (double d : user_distances)
    if (!(d > 0.0)) throw std::invalid_argument("user distances must be positive");
  if (!(ris_distance > 0.0)) throw std::invalid_argument("ris_distance must be positive");
  for (double e : {csi_error_bs_user, csi_error_bs_ris, csi_error_ris_user})
    if (e < 0.0 || e > 1.0)
      throw std::invalid_argument("CSI error factors must lie in [0, 1]");
  if (sic_error < 0.0 || sic_error > 1.0)
    throw std::invalid_argument("sic_error must lie in [0, 1]");
  if (!adversary_weights.empty()) {
    if (adversary_weights.size() != size_t(num_users))
      throw std::invalid_argument("adversary_weights must list one weight per user");
    double sum = 0.0;
    for (double w : adversary_weights) {
      if (!(w > 0.0)) throw std::invalid_argument("adversary_weights must be positive");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("adversary_weights must sum to 1");
  }
}

double ris_user_distance(const Scenario& sc, int user) {
  constexpr double deg = 3.14159265358979323846 / 180.0;
  const double du = sc.user_distances.at(user);
  const double dr = sc.ris_distance;
  const double sep = (sc.ris_azimuth - sc.user_azimuths.at(user)) * deg;
  const double sq = dr * dr + du * du - 2.0 * dr * du * std::cos(sep);
  return std::sqrt(std::max(0.0, sq));
}

double direct_link_variance(const Scenario& sc, int user) {
  return std::pow(sc.user_distances.at(user), -sc.pathloss_exponent);
}

double bs_ris_link_variance(const Scenario& sc) {
  return std::pow(sc.ris_distance, -sc.pathloss_exponent);
}

double ris_user_link_variance(const Scenario& sc, int user) {
  return std::pow(ris_user_distance(sc, user), -sc.pathloss_exponent);
}

namespace {

CVec gaussian_vector(RngStream& rng, Eigen::Index n, double variance) {
  const double scale = std::sqrt(variance);
  CVec v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = scale * rng.next_cgauss();
  return v;
}

CMat gaussian_matrix(RngStream& rng, Eigen::Index rows, Eigen::Index cols,
                     double variance) {
  const double scale = std::sqrt(variance);
  CMat m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = scale * rng.next_cgauss();
  return m;
}

}  // namespace

ChannelSet sample_channels(const Scenario& sc, RngStream& rng) {
  const Eigen::Index m = sc.num_antennas, d = sc.num_elements;
  ChannelSet ch;
  ch.direct.reserve(sc.num_users);
  for (int u = 0; u < sc.num_users; ++u)
    ch.direct.push_back(gaussian_vector(rng, m, direct_link_variance(sc, u)));
  ch.bs_ris = gaussian_matrix(rng, d, m, bs_ris_link_variance(sc));
  ch.ris_user.reserve(sc.num_users);
  for (int u = 0; u < sc.num_users; ++u)
    ch.ris_user.push_back(gaussian_vector(rng, d, ris_user_link_variance(sc, u)));
  ch.training_reflection = CMat::Zero(d, d);
  return ch;
}

void estimate_channels(ChannelSet& ch, const Scenario& sc, RngStream& rng,
                       const CMat& theta_train) {
  const Eigen::Index m = sc.num_antennas, d = sc.num_elements;
  const bool reflective = sc.uplink_mode == UplinkMode::reflect;
  ch.training_reflection = reflective ? theta_train : CMat::Zero(d, d);

  const double var_g = bs_ris_link_variance(sc);

  ch.est_direct.clear();
  ch.est_direct.reserve(sc.num_users);
  for (int u = 0; u < sc.num_users; ++u) {
    // The pilot observation is the composite the downlink actually sees
    // (reciprocity), i.e. the same form effective_channel() evaluates.
    CVec observed = ch.direct[u];
    double observed_var = direct_link_variance(sc, u);
    if (reflective) {
      observed +=
          ch.bs_ris.adjoint() * (ch.training_reflection.adjoint() * ch.ris_user[u]);
      observed_var += var_g * double(d) * ris_user_link_variance(sc, u);
    }
    // The raw error draw always happens so that the stream stays aligned
    // when the error factor is swept; eps = 0 returns the observation exactly.
    CVec err = gaussian_vector(rng, m, observed_var);
    const double eps = sc.csi_error_bs_user;
    if (eps == 0.0)
      ch.est_direct.push_back(std::move(observed));
    else
      ch.est_direct.push_back(std::sqrt(1.0 - eps) * observed + std::sqrt(eps) * err);
  }

  {
    CMat err = gaussian_matrix(rng, d, m, var_g);
    const double eps_g = sc.csi_error_bs_ris;
    if (eps_g == 0.0)
      ch.est_bs_ris = ch.bs_ris;
    else
      ch.est_bs_ris = std::sqrt(1.0 - eps_g) * ch.bs_ris + std::sqrt(eps_g) * err;
  }

  const double eps_u = sc.csi_error_ris_user;
  ch.est_ris_user.clear();
  ch.est_ris_user.reserve(sc.num_users);
  for (int u = 0; u < sc.num_users; ++u) {
    CVec err = gaussian_vector(rng, d, ris_user_link_variance(sc, u));
    if (eps_u == 0.0)
      ch.est_ris_user.push_back(ch.ris_user[u]);
    else
      ch.est_ris_user.push_back(std::sqrt(1.0 - eps_u) * ch.ris_user[u] +
                                std::sqrt(eps_u) * err);
  }
}

}  // namespace bdris
