#include "bdris/transceiver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bdris {

namespace {

double log2_1p(double x) { return std::log2(1.0 + x); }

// |eff_u^H w|^2 for every (user, precoder) pair, precomputed once per
// evaluation: gains(u, 0) is the common stream, gains(u, 1 + i) private i.
RMat stream_gains(const std::vector<CVec>& eff, const CVec& common,
                  const std::vector<CVec>& privates) {
  const int users = int(eff.size());
  RMat gains(users, 1 + privates.size());
  for (int u = 0; u < users; ++u) {
    gains(u, 0) = std::norm(Complex(eff[u].adjoint() * common));
    for (size_t i = 0; i < privates.size(); ++i)
      gains(u, 1 + i) = std::norm(Complex(eff[u].adjoint() * privates[i]));
  }
  return gains;
}

RateReport rates_from_gains(const RMat& gains, double alpha_common,
                            double alpha_private, double power_mw, double noise_mw,
                            double sic_error) {
  const int users = gains.rows();
  RateReport report;
  report.common_sinr.resize(users);
  report.private_sinr.resize(users);
  report.private_rates.resize(users);

  double weakest_common = std::numeric_limits<double>::infinity();
  for (int u = 0; u < users; ++u) {
    double private_total = 0.0;
    for (int i = 0; i < users; ++i) private_total += gains(u, 1 + i) * alpha_private;
    const double common_power = gains(u, 0) * alpha_common * power_mw;
    report.common_sinr[u] = common_power / (private_total * power_mw + noise_mw);
    weakest_common = std::min(weakest_common, report.common_sinr[u]);

    const double leakage =
        (private_total - gains(u, 1 + u) * alpha_private) * power_mw;
    const double residual = sic_error * common_power;
    report.private_sinr[u] = gains(u, 1 + u) * alpha_private * power_mw /
                             (leakage + residual + noise_mw);
    report.private_rates[u] = log2_1p(report.private_sinr[u]);
  }
  report.common_rate = log2_1p(weakest_common);  // exactly 0 when alpha_common = 0
  report.sum_rate = report.common_rate;
  for (double r : report.private_rates) report.sum_rate += r;
  return report;
}

}  // namespace

CVec effective_channel(const CVec& direct, const CMat& bs_ris, const CVec& ris_user,
                       const CMat& theta) {
  if (theta.size() == 0 || ris_user.size() == 0) return direct;
  if (bs_ris.rows() != theta.rows() || theta.cols() != ris_user.size() ||
      bs_ris.cols() != direct.size())
    throw std::invalid_argument("effective_channel: dimension mismatch");
  return direct + bs_ris.adjoint() * (theta.adjoint() * ris_user);
}

std::vector<CVec> true_effective_channels(const ChannelSet& ch, const CMat& theta) {
  std::vector<CVec> eff;
  eff.reserve(ch.direct.size());
  for (size_t u = 0; u < ch.direct.size(); ++u)
    eff.push_back(effective_channel(ch.direct[u], ch.bs_ris, ch.ris_user[u], theta));
  return eff;
}

std::vector<CVec> private_precoders(const std::vector<CVec>& est_direct,
                                    double power_mw, double noise_mw) {
  const int users = int(est_direct.size());
  if (users == 0) throw std::invalid_argument("private_precoders: no users");
  const Eigen::Index m = est_direct[0].size();
  CMat h(m, users);
  for (int u = 0; u < users; ++u) h.col(u) = est_direct[u];

  const double reg = noise_mw / power_mw;
  CMat gram = h.adjoint() * h + reg * CMat::Identity(users, users);
  CMat w = h * gram.inverse();

  std::vector<CVec> out;
  out.reserve(users);
  for (int u = 0; u < users; ++u) {
    const double norm = w.col(u).norm();
    if (norm == 0.0)
      throw std::domain_error("private_precoders: zero precoding column");
    out.push_back(w.col(u) / norm);
  }
  return out;
}

CVec common_precoder(const std::vector<CVec>& est_direct) {
  if (est_direct.empty()) throw std::invalid_argument("common_precoder: no users");
  CVec sum = CVec::Zero(est_direct[0].size());
  for (const CVec& h : est_direct) {
    const double power = h.squaredNorm();
    if (power == 0.0) throw std::domain_error("common_precoder: zero channel");
    sum += h / power;
  }
  const double norm = sum.norm();
  if (norm == 0.0) throw std::domain_error("common_precoder: degenerate weighting");
  return sum / norm;
}

double sic_residual(const CVec& eff, const CVec& common, double power_mw,
                    double alpha_common, double sic_error) {
  return sic_error * std::norm(Complex(eff.adjoint() * common)) * power_mw *
         alpha_common;
}

RateReport evaluate_rates(const std::vector<CVec>& eff, const PrecoderSet& pre,
                          double power_mw, double noise_mw, double sic_error) {
  return rates_from_gains(stream_gains(eff, pre.common, pre.privates),
                          pre.alpha_common, pre.alpha_private, power_mw, noise_mw,
                          sic_error);
}

int select_reference_user(const std::vector<CVec>& est_direct, const CVec& common,
                          const std::vector<CVec>& privates, double power_mw,
                          double noise_mw, double sic_error) {
  const RMat gains = stream_gains(est_direct, common, privates);
  const int users = gains.rows();
  int best = 0;
  double best_value = -1.0;
  for (int u = 0; u < users; ++u) {
    double leakage = 0.0;
    for (int i = 0; i < users; ++i)
      if (i != u) leakage += gains(u, 1 + i) * power_mw;
    const double value = gains(u, 1 + u) * power_mw /
                         (leakage + sic_error * gains(u, 0) * power_mw + noise_mw);
    if (value > best_value) {
      best_value = value;
      best = u;
    }
  }
  return best;
}

PowerAllocation allocate_power(const std::vector<CVec>& est_direct, const CVec& common,
                               const std::vector<CVec>& privates, double power_mw,
                               double noise_mw, double sic_error, int grid_size) {
  if (grid_size < 2) throw std::invalid_argument("allocate_power: grid too small");
  const int users = int(est_direct.size());
  const RMat gains = stream_gains(est_direct, common, privates);
  const int ref = select_reference_user(est_direct, common, privates, power_mw,
                                        noise_mw, sic_error);

  double leakage = 0.0;
  for (int i = 0; i < users; ++i)
    if (i != ref) leakage += gains(ref, 1 + i) * power_mw;
  const double common_at_ref = gains(ref, 0) * power_mw;
  const double floor = sic_error * common_at_ref + noise_mw;   // effective noise
  const double spread = leakage + sic_error * users * common_at_ref;

  PowerAllocation best;
  best.eta_max = spread / (users * floor);
  if (!(best.eta_max > 0.0) || !std::isfinite(best.eta_max)) {
    // No inter-user leakage to balance: private streams take everything.
    best.alpha_common = 0.0;
    best.alpha_private = 1.0 / users;
    best.eta = best.eta_max = 0.0;
    best.surrogate = rates_from_gains(gains, 0.0, 1.0 / users, power_mw, noise_mw,
                                      sic_error).sum_rate;
    return best;
  }

  best.surrogate = -1.0;
  for (int k = 0; k < grid_size; ++k) {
    const double eta = best.eta_max * k / (grid_size - 1);
    const double alpha_p = eta * floor / spread;
    const double alpha_c = 1.0 - users * alpha_p;
    const double value =
        rates_from_gains(gains, alpha_c, alpha_p, power_mw, noise_mw, sic_error)
            .sum_rate;
    if (value > best.surrogate) {
      best.surrogate = value;
      best.eta = eta;
      best.alpha_private = alpha_p;
      best.alpha_common = alpha_c;
    }
  }
  return best;
}

RateReport sdma_rates(const std::vector<CVec>& eff, const std::vector<CVec>& privates,
                      double power_mw, double noise_mw) {
  PrecoderSet pre;
  pre.privates = privates;
  pre.common = CVec::Zero(privates.at(0).size());
  pre.common(0) = 1.0;  // unused at zero common power
  pre.alpha_common = 0.0;
  pre.alpha_private = 1.0 / double(privates.size());
  return evaluate_rates(eff, pre, power_mw, noise_mw, 0.0);
}

}  // namespace bdris
