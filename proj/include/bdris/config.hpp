#pragma once

#include <iosfwd>
#include <string>

#include "bdris/sim.hpp"

namespace bdris {

/// Parses a plain key = value document into a full experiment description.
/// One assignment per line, '#' starts a comment, lists are comma separated.
/// Unknown keys and invariant violations are reported with their line
/// number via std::runtime_error. Missing keys keep the built-in defaults.
ExperimentSpec parse_config(std::istream& in, const std::string& name = "<config>");
ExperimentSpec parse_config_file(const std::string& path);

Scheme parse_scheme(const std::string& text);
AttackKind parse_attack(const std::string& text);
Architecture parse_architecture(const std::string& text);
UplinkMode parse_uplink_mode(const std::string& text);
SafeMode parse_safe_mode(const std::string& text);
SweepAxis parse_sweep_axis(const std::string& text);

}  // namespace bdris
