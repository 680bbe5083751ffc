#include "bdris/sim.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bdris/channel.hpp"

namespace bdris {

void ExperimentSpec::validate() const {
  scenario.validate();
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (power_grid_size < 2) throw std::invalid_argument("power_grid_size must be >= 2");
  if (sweep_axis != SweepAxis::none) {
    if (sweep_values.empty())
      throw std::invalid_argument("sweep axis set but no sweep values given");
    for (size_t i = 1; i < sweep_values.size(); ++i)
      if (sweep_values[i] < sweep_values[i - 1])
        throw std::invalid_argument("sweep values must be sorted ascending");
  }
  if (architecture == Architecture::group)
    (void)make_group_sizes(architecture, scenario.num_elements, scenario.group_size);
}

Scenario scenario_at(const Scenario& base, SweepAxis axis, double value) {
  Scenario sc = base;
  switch (axis) {
    case SweepAxis::none:
      break;
    case SweepAxis::transmit_power_dbm:
      sc.transmit_power_dbm = value;
      break;
    case SweepAxis::num_elements:
      sc.num_elements = int(std::llround(value));
      break;
    case SweepAxis::group_size:
      sc.group_size = int(std::llround(value));
      break;
    case SweepAxis::csi_error:
      sc.csi_error_bs_user = value;
      sc.csi_error_bs_ris = value;
      sc.csi_error_ris_user = value;
      break;
    case SweepAxis::sic_error:
      sc.sic_error = value;
      break;
  }
  return sc;
}

namespace {

TrialResult run_trial_on(const ExperimentSpec& spec, const Scenario& sc,
                         int trial_index) {
  const int d = sc.num_elements;
  const double power = sc.transmit_power_mw();
  const double noise = sc.noise_power_mw();

  auto rng_channel = RngStream::derive(spec.seed, trial_index, "channel");
  auto rng_train = RngStream::derive(spec.seed, trial_index, "train");
  auto rng_estimate = RngStream::derive(spec.seed, trial_index, "estimate");
  auto rng_attack = RngStream::derive(spec.seed, trial_index, "attack");

  ChannelSet ch = sample_channels(sc, rng_channel);

  CMat theta_train = CMat::Zero(d, d);
  if (sc.uplink_mode == UplinkMode::reflect)
    theta_train =
        random_reflection(spec.architecture, d, sc.group_size, rng_train).theta;
  estimate_channels(ch, sc, rng_estimate, theta_train);

  // Precoders come from the training-phase estimates only.
  PrecoderSet pre;
  pre.privates = private_precoders(ch.est_direct, power, noise);
  if (spec.scheme == Scheme::rsma) {
    pre.common = common_precoder(ch.est_direct);
  } else {
    pre.common = CVec::Zero(sc.num_antennas);
    pre.common(0) = 1.0;
    pre.alpha_common = 0.0;
    pre.alpha_private = 1.0 / sc.num_users;
  }

  CMat theta_data = ch.training_reflection;
  switch (spec.attack) {
    case AttackKind::none:
      break;
    case AttackKind::random:
      theta_data =
          random_reflection(spec.architecture, d, sc.group_size, rng_attack).theta;
      break;
    case AttackKind::aligned:
      theta_data = aligned_attack(spec.architecture, ch.est_bs_ris, ch.est_ris_user,
                                  sc.group_size, sc.effective_adversary_weights())
                       .theta;
      break;
  }

  const double xi = spec.scheme == Scheme::rsma ? sc.sic_error : 0.0;
  if (spec.scheme == Scheme::rsma) {
    // The power split balances private-stream leakage against the effective
    // noise floor on the true direct channels: the interference the corrupted
    // precoders actually cause, observable at the receivers, without any
    // knowledge of the surface itself.
    const PowerAllocation pa =
        allocate_power(ch.direct, pre.common, pre.privates, power, noise, xi,
                       spec.power_grid_size);
    pre.alpha_common = pa.alpha_common;
    pre.alpha_private = pa.alpha_private;
  }

  const CMat theta_safe = spec.safe_mode == SafeMode::static_ris
                              ? ch.training_reflection
                              : CMat::Zero(d, d);
  TrialResult result;
  result.safe =
      evaluate_rates(true_effective_channels(ch, theta_safe), pre, power, noise, xi);
  result.attacked =
      evaluate_rates(true_effective_channels(ch, theta_data), pre, power, noise, xi);
  result.metrics = robustness_report(result.safe, result.attacked);
  return result;
}

int thread_budget() {
  if (const char* env = std::getenv("SIM_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return int(parsed);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

SweepRow aggregate(const ExperimentSpec& spec, const Scenario& sc, double value,
                   const std::vector<TrialResult>& results) {
  SweepRow row;
  row.sweep_axis = to_string(spec.sweep_axis);
  row.sweep_value = value;
  row.scheme = spec.scheme;
  row.attack = spec.attack;
  row.architecture = spec.architecture;
  row.mode = sc.uplink_mode;
  row.trials = int(results.size());
  row.seed = spec.seed;
  row.mean_private_rates.assign(sc.num_users, 0.0);
  for (const TrialResult& t : results) {
    row.mean_sum_rate += t.attacked.sum_rate;
    row.mean_common_rate += t.attacked.common_rate;
    for (int u = 0; u < sc.num_users; ++u)
      row.mean_private_rates[u] += t.attacked.private_rates[u];
    row.mean_degradation += t.metrics.total_degradation;
    row.mean_robustness += t.metrics.robustness_index;
  }
  const double inv = 1.0 / double(results.size());
  row.mean_sum_rate *= inv;
  row.mean_common_rate *= inv;
  for (double& r : row.mean_private_rates) r *= inv;
  row.mean_degradation *= inv;
  row.mean_robustness *= inv;
  return row;
}

}  // namespace

TrialResult run_trial(const ExperimentSpec& spec, int trial_index) {
  Scenario sc = spec.scenario;
  sc.validate();
  return run_trial_on(spec, sc, trial_index);
}

std::vector<SweepRow> run_sweep(const ExperimentSpec& spec) {
  spec.validate();
  std::vector<double> values = spec.sweep_values;
  if (spec.sweep_axis == SweepAxis::none) values = {0.0};

  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  const int workers = std::min(thread_budget(), spec.trials);

  for (double value : values) {
    const Scenario sc = scenario_at(spec.scenario, spec.sweep_axis, value);
    sc.validate();
    std::vector<TrialResult> results(spec.trials);
    if (workers <= 1) {
      for (int t = 0; t < spec.trials; ++t) results[t] = run_trial_on(spec, sc, t);
    } else {
      std::atomic<int> next{0};
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (int t = next.fetch_add(1); t < spec.trials; t = next.fetch_add(1))
            results[t] = run_trial_on(spec, sc, t);
        });
      for (auto& th : pool) th.join();
    }
    rows.push_back(aggregate(spec, sc, value, results));
  }
  return rows;
}

std::string to_string(Scheme s) { return s == Scheme::rsma ? "rsma" : "sdma"; }

std::string to_string(AttackKind a) {
  switch (a) {
    case AttackKind::none: return "none";
    case AttackKind::random: return "random";
    case AttackKind::aligned: return "aligned";
  }
  return "?";
}

std::string to_string(Architecture a) {
  switch (a) {
    case Architecture::single: return "single";
    case Architecture::group: return "group";
    case Architecture::fully: return "fully";
  }
  return "?";
}

std::string to_string(UplinkMode m) {
  return m == UplinkMode::absorb ? "absorb" : "reflect";
}

std::string to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::none: return "none";
    case SweepAxis::transmit_power_dbm: return "transmit_power_dbm";
    case SweepAxis::num_elements: return "num_elements";
    case SweepAxis::group_size: return "group_size";
    case SweepAxis::csi_error: return "csi_error";
    case SweepAxis::sic_error: return "sic_error";
  }
  return "?";
}

namespace {

std::string format_g9(double x) {
  std::ostringstream os;
  os.precision(9);
  os << x;
  return os.str();
}

}  // namespace

std::string csv_header(int num_users) {
  std::string head =
      "sweep_axis,sweep_value,scheme,attack,arch,mode,trials,seed,"
      "mean_sum_rate,mean_common_rate";
  for (int u = 1; u <= num_users; ++u)
    head += ",mean_private_rate_" + std::to_string(u);
  head += ",mean_degradation,mean_robustness";
  return head;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  if (rows.empty()) return;
  out << csv_header(int(rows.front().mean_private_rates.size())) << '\n';
  for (const SweepRow& row : rows) {
    out << row.sweep_axis << ',' << format_g9(row.sweep_value) << ','
        << to_string(row.scheme) << ',' << to_string(row.attack) << ','
        << to_string(row.architecture) << ',' << to_string(row.mode) << ','
        << row.trials << ',' << row.seed << ',' << format_g9(row.mean_sum_rate)
        << ',' << format_g9(row.mean_common_rate);
    for (double r : row.mean_private_rates) out << ',' << format_g9(r);
    out << ',' << format_g9(row.mean_degradation) << ','
        << format_g9(row.mean_robustness) << '\n';
  }
}

}  // namespace bdris
