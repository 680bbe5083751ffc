#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bdris/attack.hpp"
#include "bdris/metrics.hpp"
#include "bdris/scenario.hpp"
#include "bdris/transceiver.hpp"

namespace bdris {

enum class Scheme { rsma, sdma };
enum class AttackKind { none, random, aligned };

/// What "no attack" means for the paired baseline: the surface frozen in its
/// training state, or removed entirely.
enum class SafeMode { static_ris, no_ris };

enum class SweepAxis {
  none,
  transmit_power_dbm,
  num_elements,
  group_size,
  csi_error,   // sets all three error factors together
  sic_error,
};

struct ExperimentSpec {
  Scenario scenario;
  Scheme scheme = Scheme::rsma;
  AttackKind attack = AttackKind::aligned;
  Architecture architecture = Architecture::fully;
  SafeMode safe_mode = SafeMode::static_ris;
  int trials = 1000;
  std::uint64_t seed = 1;
  SweepAxis sweep_axis = SweepAxis::none;
  std::vector<double> sweep_values;
  int power_grid_size = 128;

  void validate() const;
};

/// Paired outcome of one channel realization: the same base-station design
/// evaluated in the safe environment and under the attacked surface state.
struct TrialResult {
  RateReport safe;
  RateReport attacked;
  RobustnessReport metrics;
};

/// Aggregated means over the trials of one sweep point. Rate columns
/// describe the attacked (operational) system; degradation and robustness
/// compare it to the paired safe baseline.
struct SweepRow {
  std::string sweep_axis;
  double sweep_value = 0.0;
  Scheme scheme = Scheme::rsma;
  AttackKind attack = AttackKind::none;
  Architecture architecture = Architecture::fully;
  UplinkMode mode = UplinkMode::reflect;
  int trials = 0;
  std::uint64_t seed = 0;
  double mean_sum_rate = 0.0;
  double mean_common_rate = 0.0;
  std::vector<double> mean_private_rates;
  double mean_degradation = 0.0;
  double mean_robustness = 0.0;
};

/// Runs one realization. All randomness is drawn from streams derived from
/// (seed, trial_index, purpose), so the call is deterministic and trials are
/// independent of execution order.
TrialResult run_trial(const ExperimentSpec& spec, int trial_index);

/// Applies one sweep value to a copy of the scenario.
Scenario scenario_at(const Scenario& base, SweepAxis axis, double value);

/// Runs trials for every sweep value (the whole spec once when no axis is
/// set) and aggregates means in trial order. Parallelism is controlled by
/// the SIM_THREADS environment variable (unset or 0 = all cores) and does
/// not change the results.
std::vector<SweepRow> run_sweep(const ExperimentSpec& spec);

std::string csv_header(int num_users);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

std::string to_string(Scheme s);
std::string to_string(AttackKind a);
std::string to_string(Architecture a);
std::string to_string(UplinkMode m);
std::string to_string(SweepAxis a);

}  // namespace bdris
