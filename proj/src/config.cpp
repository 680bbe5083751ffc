#include "bdris/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bdris {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& text) {
  size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters");
  return value;
}

long parse_integer(const std::string& text) {
  size_t used = 0;
  const long value = std::stol(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters");
  return value;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_number(trim(item)));
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Scheme parse_scheme(const std::string& text) {
  if (text == "rsma") return Scheme::rsma;
  if (text == "sdma") return Scheme::sdma;
  throw std::invalid_argument("scheme must be rsma or sdma, got '" + text + "'");
}

AttackKind parse_attack(const std::string& text) {
  if (text == "none") return AttackKind::none;
  if (text == "random") return AttackKind::random;
  if (text == "aligned") return AttackKind::aligned;
  throw std::invalid_argument("attack must be none, random or aligned, got '" + text +
                              "'");
}

Architecture parse_architecture(const std::string& text) {
  if (text == "single") return Architecture::single;
  if (text == "group") return Architecture::group;
  if (text == "fully") return Architecture::fully;
  throw std::invalid_argument("arch must be single, group or fully, got '" + text +
                              "'");
}

UplinkMode parse_uplink_mode(const std::string& text) {
  if (text == "absorb") return UplinkMode::absorb;
  if (text == "reflect") return UplinkMode::reflect;
  throw std::invalid_argument("mode must be absorb or reflect, got '" + text + "'");
}

SafeMode parse_safe_mode(const std::string& text) {
  if (text == "static-ris") return SafeMode::static_ris;
  if (text == "no-ris") return SafeMode::no_ris;
  throw std::invalid_argument("safe-mode must be static-ris or no-ris, got '" + text +
                              "'");
}

SweepAxis parse_sweep_axis(const std::string& text) {
  if (text == "transmit_power_dbm") return SweepAxis::transmit_power_dbm;
  if (text == "num_elements") return SweepAxis::num_elements;
  if (text == "group_size") return SweepAxis::group_size;
  if (text == "csi_error") return SweepAxis::csi_error;
  if (text == "sic_error") return SweepAxis::sic_error;
  throw std::invalid_argument(
      "sweep axis must be one of transmit_power_dbm, num_elements, group_size, "
      "csi_error, sic_error; got '" +
      text + "'");
}

ExperimentSpec parse_config(std::istream& in, const std::string& name) {
  ExperimentSpec spec;
  Scenario& sc = spec.scenario;

  using Setter = std::function<void(const std::string&)>;
  const std::map<std::string, Setter> setters{
      {"num_antennas", [&](const std::string& v) { sc.num_antennas = int(parse_integer(v)); }},
      {"num_elements", [&](const std::string& v) { sc.num_elements = int(parse_integer(v)); }},
      {"group_size", [&](const std::string& v) { sc.group_size = int(parse_integer(v)); }},
      {"num_users", [&](const std::string& v) { sc.num_users = int(parse_integer(v)); }},
      {"user_distances", [&](const std::string& v) { sc.user_distances = parse_list(v); }},
      {"user_azimuths", [&](const std::string& v) { sc.user_azimuths = parse_list(v); }},
      {"ris_distance", [&](const std::string& v) { sc.ris_distance = parse_number(v); }},
      {"ris_azimuth", [&](const std::string& v) { sc.ris_azimuth = parse_number(v); }},
      {"pathloss_exponent", [&](const std::string& v) { sc.pathloss_exponent = parse_number(v); }},
      {"csi_error_bs_user", [&](const std::string& v) { sc.csi_error_bs_user = parse_number(v); }},
      {"csi_error_bs_ris", [&](const std::string& v) { sc.csi_error_bs_ris = parse_number(v); }},
      {"csi_error_ris_user", [&](const std::string& v) { sc.csi_error_ris_user = parse_number(v); }},
      {"sic_error", [&](const std::string& v) { sc.sic_error = parse_number(v); }},
      {"noise_power_dbm", [&](const std::string& v) { sc.noise_power_dbm = parse_number(v); }},
      {"transmit_power_dbm", [&](const std::string& v) { sc.transmit_power_dbm = parse_number(v); }},
      {"uplink_mode", [&](const std::string& v) { sc.uplink_mode = parse_uplink_mode(v); }},
      {"adversary_weights", [&](const std::string& v) { sc.adversary_weights = parse_list(v); }},
      {"scheme", [&](const std::string& v) { spec.scheme = parse_scheme(v); }},
      {"attack", [&](const std::string& v) { spec.attack = parse_attack(v); }},
      {"architecture", [&](const std::string& v) { spec.architecture = parse_architecture(v); }},
      {"safe_mode", [&](const std::string& v) { spec.safe_mode = parse_safe_mode(v); }},
      {"trials", [&](const std::string& v) { spec.trials = int(parse_integer(v)); }},
      {"seed", [&](const std::string& v) { spec.seed = std::uint64_t(parse_integer(v)); }},
      {"sweep_axis", [&](const std::string& v) { spec.sweep_axis = parse_sweep_axis(v); }},
      {"sweep_values", [&](const std::string& v) { spec.sweep_values = parse_list(v); }},
      {"power_grid_size", [&](const std::string& v) { spec.power_grid_size = int(parse_integer(v)); }},
  };

  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(name, number, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(name, number, "missing key");
    if (value.empty()) fail(name, number, "missing value for '" + key + "'");

    const auto it = setters.find(key);
    if (it == setters.end()) fail(name, number, "unknown key '" + key + "'");
    try {
      it->second(value);
    } catch (const std::exception& e) {
      fail(name, number, "bad value for '" + key + "': " + e.what());
    }
  }

  try {
    spec.validate();
  } catch (const std::exception& e) {
    throw std::runtime_error(name + ": " + e.what());
  }
  return spec;
}

ExperimentSpec parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

}  // namespace bdris
