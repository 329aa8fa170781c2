#include "owc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace owc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& where) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ScenarioError(where + ": not a number: '" + v + "'");
  }
  if (used != v.size()) throw ScenarioError(where + ": not a number: '" + v + "'");
  return out;
}

bool parse_bool(const std::string& v, const std::string& where) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw ScenarioError(where + ": expected true or false, got '" + v + "'");
}

std::string fmt_double(double v) {
  // shortest representation that parses back to the same double
  char buf[40];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

using Setter = std::function<void(ScenarioConfig&, const std::string& value, const std::string& where)>;
using Getter = std::function<std::string(const ScenarioConfig&)>;

struct KeySpec {
  Setter set;
  Getter get;
};

KeySpec double_key(double ScenarioConfig::*field) {
  return {[field](ScenarioConfig& c, const std::string& v, const std::string& w) {
            c.*field = parse_double(v, w);
          },
          [field](const ScenarioConfig& c) { return fmt_double(c.*field); }};
}

KeySpec bool_key(bool ScenarioConfig::*field) {
  return {[field](ScenarioConfig& c, const std::string& v, const std::string& w) {
            c.*field = parse_bool(v, w);
          },
          [field](const ScenarioConfig& c) { return (c.*field) ? "true" : "false"; }};
}

// Ordered key table; save_scenario emits in this order.
const std::vector<std::pair<std::string, KeySpec>>& key_table() {
  static const std::vector<std::pair<std::string, KeySpec>> table = [] {
    std::vector<std::pair<std::string, KeySpec>> t;
    auto nd = [](std::function<double*(ScenarioConfig&)> ref) {
      return KeySpec{[ref](ScenarioConfig& c, const std::string& v, const std::string& w) {
                       *ref(c) = parse_double(v, w);
                     },
                     [ref](const ScenarioConfig& c) {
                       return fmt_double(*ref(const_cast<ScenarioConfig&>(c)));
                     }};
    };

    t.emplace_back("room.width_x", nd([](ScenarioConfig& c) { return &c.room.width_x; }));
    t.emplace_back("room.length_y", nd([](ScenarioConfig& c) { return &c.room.length_y; }));
    t.emplace_back("room.height_z", nd([](ScenarioConfig& c) { return &c.room.height_z; }));
    t.emplace_back("room.reflectivity_ceiling",
                   nd([](ScenarioConfig& c) { return &c.room.reflectivity_ceiling; }));
    t.emplace_back("room.reflectivity_walls",
                   nd([](ScenarioConfig& c) { return &c.room.reflectivity_walls; }));
    t.emplace_back("room.reflectivity_floor",
                   nd([](ScenarioConfig& c) { return &c.room.reflectivity_floor; }));
    t.emplace_back("room.comm_floor_z", nd([](ScenarioConfig& c) { return &c.room.comm_floor_z; }));
    t.emplace_back("discretization.first_order_element",
                   nd([](ScenarioConfig& c) { return &c.discretization.first_order_element; }));
    t.emplace_back("discretization.second_order_element",
                   nd([](ScenarioConfig& c) { return &c.discretization.second_order_element; }));
    t.emplace_back("micro.power_w", double_key(&ScenarioConfig::micro_power_w));
    t.emplace_back("pico.power_w", double_key(&ScenarioConfig::pico_power_w));
    t.emplace_back("atto.power_w", double_key(&ScenarioConfig::atto_power_w));
    t.emplace_back(
        "illumination.flux_lm",
        KeySpec{[](ScenarioConfig& c, const std::string& v, const std::string& w) {
                  if (v == "calibrate") {
                    c.illum_calibrate = true;
                    c.illum_flux_lm = 0.0;
                  } else {
                    c.illum_calibrate = false;
                    c.illum_flux_lm = parse_double(v, w);
                  }
                },
                [](const ScenarioConfig& c) {
                  return c.illum_calibrate ? std::string("calibrate") : fmt_double(c.illum_flux_lm);
                }});
    t.emplace_back("illumination.target_min_lux",
                   double_key(&ScenarioConfig::illum_target_min_lux));
    t.emplace_back("illumination.include_reflections",
                   bool_key(&ScenarioConfig::illum_include_reflections));
    t.emplace_back("micro.bandwidth_hz",
                   nd([](ScenarioConfig& c) { return &c.micro_noise.bandwidth_hz; }));
    t.emplace_back("micro.preamp_density_a_sqrthz",
                   nd([](ScenarioConfig& c) { return &c.micro_noise.preamp_density_a_sqrthz; }));
    t.emplace_back("micro.background_current_a",
                   nd([](ScenarioConfig& c) { return &c.micro_noise.background_current_a; }));
    t.emplace_back("pico.bandwidth_hz",
                   nd([](ScenarioConfig& c) { return &c.pico_noise.bandwidth_hz; }));
    t.emplace_back("pico.preamp_density_a_sqrthz",
                   nd([](ScenarioConfig& c) { return &c.pico_noise.preamp_density_a_sqrthz; }));
    t.emplace_back("pico.background_current_a",
                   nd([](ScenarioConfig& c) { return &c.pico_noise.background_current_a; }));
    t.emplace_back("atto.bandwidth_hz",
                   nd([](ScenarioConfig& c) { return &c.atto_noise.bandwidth_hz; }));
    t.emplace_back("atto.preamp_density_a_sqrthz",
                   nd([](ScenarioConfig& c) { return &c.atto_noise.preamp_density_a_sqrthz; }));
    t.emplace_back("atto.background_current_a",
                   nd([](ScenarioConfig& c) { return &c.atto_noise.background_current_a; }));
    t.emplace_back("grid.step_m", double_key(&ScenarioConfig::grid_step_m));
    t.emplace_back("combining",
                   KeySpec{[](ScenarioConfig& c, const std::string& v, const std::string& w) {
                             if (v == "sc")
                               c.combining = Combining::sc;
                             else if (v == "mrc")
                               c.combining = Combining::mrc;
                             else
                               throw ScenarioError(w + ": expected sc or mrc, got '" + v + "'");
                           },
                           [](const ScenarioConfig& c) { return to_string(c.combining); }});
    t.emplace_back("serving",
                   KeySpec{[](ScenarioConfig& c, const std::string& v, const std::string& w) {
                             try {
                               c.serving = parse_system_id(v);
                             } catch (const std::exception& e) {
                               throw ScenarioError(w + ": " + e.what());
                             }
                           },
                           [](const ScenarioConfig& c) { return to_string(c.serving); }});
    t.emplace_back("interfering",
                   KeySpec{[](ScenarioConfig& c, const std::string& v, const std::string& w) {
                             try {
                               c.interfering = parse_system_list(v);
                             } catch (const std::exception& e) {
                               throw ScenarioError(w + ": " + e.what());
                             }
                           },
                           [](const ScenarioConfig& c) {
                             return system_list_to_string(c.interfering);
                           }});
    t.emplace_back(
        "reflections.max_order",
        KeySpec{[](ScenarioConfig& c, const std::string& v, const std::string& w) {
                  const double d = parse_double(v, w);
                  if (d != 0.0 && d != 1.0 && d != 2.0)
                    throw ScenarioError(w + ": must be 0, 1 or 2");
                  c.reflection_max_order = static_cast<int>(d);
                },
                [](const ScenarioConfig& c) { return std::to_string(c.reflection_max_order); }});
    t.emplace_back("interference.include_intra_system",
                   bool_key(&ScenarioConfig::intra_system_interference));
    t.emplace_back("modulation.spectral_efficiency",
                   double_key(&ScenarioConfig::spectral_efficiency));
    t.emplace_back("ber.target", double_key(&ScenarioConfig::target_ber));
    t.emplace_back("output.dir",
                   KeySpec{[](ScenarioConfig& c, const std::string& v, const std::string&) {
                             c.output_dir = v;
                           },
                           [](const ScenarioConfig& c) { return c.output_dir; }});
    return t;
  }();
  return table;
}

}  // namespace

SystemId parse_system_id(const std::string& name) {
  if (name == "micro") return SystemId::micro;
  if (name == "pico") return SystemId::pico;
  if (name == "atto") return SystemId::atto;
  throw ScenarioError("unknown system '" + name + "' (expected micro, pico or atto)");
}

std::vector<SystemId> parse_system_list(const std::string& csv) {
  std::vector<SystemId> out;
  if (csv.empty() || csv == "none") return out;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_system_id(trim(tok)));
  return out;
}

std::string system_list_to_string(const std::vector<SystemId>& systems) {
  if (systems.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    if (i) out += ',';
    out += to_string(systems[i]);
  }
  return out;
}

ScenarioConfig parse_scenario(std::istream& is, const std::string& origin) {
  ScenarioConfig config;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioError(where + ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto& table = key_table();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&key](const auto& kv) { return kv.first == key; });
    if (it == table.end()) throw ScenarioError(where + ": unknown key '" + key + "'");
    if (!seen.insert(key).second)
      throw ScenarioError(where + ": duplicate key '" + key + "'");
    it->second.set(config, value, where + ": key '" + key + "'");
  }
  config.validate();
  return config;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ScenarioError("cannot open scenario file: " + path);
  return parse_scenario(is, path);
}

void save_scenario(const ScenarioConfig& config, std::ostream& os) {
  for (const auto& [key, spec] : key_table()) os << key << " = " << spec.get(config) << '\n';
}

std::string scenario_to_string(const ScenarioConfig& config) {
  std::ostringstream os;
  save_scenario(config, os);
  return os.str();
}

void ScenarioConfig::validate() const {
  auto require = [](bool ok, const std::string& key, const std::string& constraint) {
    if (!ok) throw ScenarioError("key '" + key + "': " + constraint);
  };
  require(room.width_x > 0, "room.width_x", "must be positive");
  require(room.length_y > 0, "room.length_y", "must be positive");
  require(room.height_z > 0, "room.height_z", "must be positive");
  require(room.reflectivity_ceiling >= 0 && room.reflectivity_ceiling <= 1,
          "room.reflectivity_ceiling", "must be in [0, 1]");
  require(room.reflectivity_walls >= 0 && room.reflectivity_walls <= 1,
          "room.reflectivity_walls", "must be in [0, 1]");
  require(room.reflectivity_floor >= 0 && room.reflectivity_floor <= 1,
          "room.reflectivity_floor", "must be in [0, 1]");
  require(room.comm_floor_z >= 0 && room.comm_floor_z < room.height_z, "room.comm_floor_z",
          "must satisfy 0 <= cf < room.height_z");
  const double min_dim = std::min({room.width_x, room.length_y, room.height_z});
  require(discretization.first_order_element > 0, "discretization.first_order_element",
          "must be positive");
  require(discretization.first_order_element <= min_dim, "discretization.first_order_element",
          "must not exceed the smallest room dimension");
  require(discretization.second_order_element >= discretization.first_order_element,
          "discretization.second_order_element", "must be >= the first-order element");
  require(discretization.second_order_element <= min_dim, "discretization.second_order_element",
          "must not exceed the smallest room dimension");
  require(micro_power_w >= 0, "micro.power_w", "must be non-negative");
  require(pico_power_w >= 0, "pico.power_w", "must be non-negative");
  require(atto_power_w >= 0, "atto.power_w", "must be non-negative");
  require(illum_calibrate || illum_flux_lm >= 0, "illumination.flux_lm", "must be non-negative");
  require(illum_target_min_lux > 0, "illumination.target_min_lux", "must be positive");
  const struct { const char* name; const NoiseParams* p; } noise_keys[] = {
      {"micro", &micro_noise}, {"pico", &pico_noise}, {"atto", &atto_noise}};
  for (const auto& [name, p] : noise_keys) {
    require(p->bandwidth_hz > 0, std::string(name) + ".bandwidth_hz", "must be positive");
    require(p->preamp_density_a_sqrthz >= 0, std::string(name) + ".preamp_density_a_sqrthz",
            "must be non-negative");
    require(p->background_current_a >= 0, std::string(name) + ".background_current_a",
            "must be non-negative");
  }
  require(grid_step_m > 0, "grid.step_m", "must be positive");
  require(grid_step_m <= std::min(room.width_x, room.length_y), "grid.step_m",
          "must not exceed the floor dimensions");
  require(reflection_max_order >= 0 && reflection_max_order <= 2, "reflections.max_order",
          "must be 0, 1 or 2");
  require(spectral_efficiency > 0, "modulation.spectral_efficiency", "must be positive");
  require(target_ber > 0 && target_ber < 0.5, "ber.target", "must be in (0, 0.5)");
  require(!output_dir.empty(), "output.dir", "must not be empty");
  for (SystemId id : interfering)
    require(id != serving, "interfering", "serving system cannot interfere with itself");
  for (std::size_t i = 0; i < interfering.size(); ++i)
    for (std::size_t j = i + 1; j < interfering.size(); ++j)
      require(interfering[i] != interfering[j], "interfering", "duplicate system");
}

LayoutConfig ScenarioConfig::layout_config(double flux_lm_per_ld) const {
  return {room, micro_power_w, pico_power_w, atto_power_w, 0.0, flux_lm_per_ld};
}

const NoiseParams& ScenarioConfig::noise_for(SystemId id) const {
  switch (id) {
    case SystemId::micro: return micro_noise;
    case SystemId::pico: return pico_noise;
    case SystemId::atto: return atto_noise;
    default: throw std::invalid_argument("no noise parameters for this system");
  }
}

}  // namespace owc
