#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "owc/coexistence.hpp"
#include "owc/room.hpp"

namespace owc {

/// Full simulation configuration. Defaults reproduce the reference room,
/// transmitter layout and receiver bandwidths; any subset of keys may be
/// overridden from a scenario file.
struct ScenarioConfig {
  Room room;
  DiscretizationPolicy discretization;

  // Per-source transmit optical power [W].
  double micro_power_w = 2.0;
  double pico_power_w = 1.2;
  double atto_power_w = 1.5;

  // Illumination: per-LD flux, or calibration against a target minimum.
  bool illum_calibrate = true;
  double illum_flux_lm = 0.0;  // used when illum_calibrate is false
  double illum_target_min_lux = 306.4;
  bool illum_include_reflections = false;

  NoiseParams micro_noise{30e6, 2e-12, 10e-6};
  NoiseParams pico_noise{1e9, 2e-12, 10e-6};
  NoiseParams atto_noise{5e9, 2e-12, 10e-6};

  double grid_step_m = 0.25;
  Combining combining = Combining::sc;
  SystemId serving = SystemId::micro;
  std::vector<SystemId> interfering;

  int reflection_max_order = 2;
  bool intra_system_interference = false;
  double spectral_efficiency = 1.0;  // bit/s/Hz
  double target_ber = 1e-9;
  std::string output_dir = "out";

  bool operator==(const ScenarioConfig&) const = default;

  void validate() const;  // throws ScenarioError naming key and constraint

  LayoutConfig layout_config(double flux_lm_per_ld) const;
  const NoiseParams& noise_for(SystemId id) const;
};

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse a scenario file: one `key = value` per line, `#` comments, unknown
/// keys rejected. Absent keys keep their defaults; an empty file is the
/// default scenario. Throws ScenarioError with line/key diagnostics.
ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig parse_scenario(std::istream& is, const std::string& origin = "<stream>");

/// Write every key explicitly; parse_scenario(save) round-trips exactly.
void save_scenario(const ScenarioConfig& config, std::ostream& os);
std::string scenario_to_string(const ScenarioConfig& config);

SystemId parse_system_id(const std::string& name);      // micro|pico|atto
std::vector<SystemId> parse_system_list(const std::string& csv);  // "", "none", "a,b"
std::string system_list_to_string(const std::vector<SystemId>& systems);

}  // namespace owc
