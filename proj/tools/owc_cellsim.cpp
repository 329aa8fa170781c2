// owc-cellsim: indoor optical wireless co-existence simulator.
//
// Computes SNR/SINR/combining-gain maps for the Micro (IR), Pico and Atto
// (VLC) cell systems and illuminance compliance maps, writing CSV grids and
// plain-text summaries.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "owc/coexistence.hpp"
#include "owc/photometry.hpp"
#include "owc/scenario.hpp"

namespace fs = std::filesystem;
using namespace owc;

namespace {

struct CliOptions {
  std::string config_path;
  std::string serving;
  std::string interfering;
  std::string combining;
  double grid_step = 0.0;
  std::string out_dir;
  double calibrate_target = 0.0;  // illumination --calibrate
};

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

ScenarioConfig effective_config(const CliOptions& opt) {
  ScenarioConfig config;
  if (!opt.config_path.empty()) config = load_scenario(opt.config_path);
  if (!opt.serving.empty()) config.serving = parse_system_id(opt.serving);
  if (!opt.interfering.empty()) config.interfering = parse_system_list(opt.interfering);
  if (!opt.combining.empty()) {
    if (opt.combining == "sc")
      config.combining = Combining::sc;
    else if (opt.combining == "mrc")
      config.combining = Combining::mrc;
    else
      throw ScenarioError("--combining: expected sc or mrc, got '" + opt.combining + "'");
  }
  if (opt.grid_step > 0.0) config.grid_step_m = opt.grid_step;
  if (!opt.out_dir.empty()) config.output_dir = opt.out_dir;
  if (opt.calibrate_target > 0.0) {
    config.illum_calibrate = true;
    config.illum_target_min_lux = opt.calibrate_target;
  }
  config.validate();
  return config;
}

double resolve_flux(const ScenarioConfig& config, const SystemLayout& layout,
                    bool announce = false) {
  if (!config.illum_calibrate) return config.illum_flux_lm;
  const double flux =
      calibrate_flux(layout, config.room, config.illum_target_min_lux, config.grid_step_m,
                     config.illum_include_reflections, config.discretization.first_order_element);
  if (announce)
    std::cout << "calibrated flux: " << fmt9(flux) << " lm per LD (target min "
              << fmt9(config.illum_target_min_lux) << " lx)\n";
  return flux;
}

CoexistenceEngine make_engine(const ScenarioConfig& config) {
  const SystemLayout layout = build_paper_layout(config.layout_config(0.0));
  return CoexistenceEngine(config.room, config.discretization, layout, config.micro_noise,
                           config.pico_noise, config.atto_noise, config.reflection_max_order,
                           config.intra_system_interference);
}

double sinr_db_threshold(const ScenarioConfig& config) {
  const double x = inverse_q(config.target_ber);
  return to_db(x * x);
}

struct OutputWriter {
  fs::path dir;
  std::ofstream summary;

  explicit OutputWriter(const std::string& out_dir) : dir(out_dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + out_dir);
    summary.open(dir / "summary.txt", std::ios::binary);
    if (!summary) throw std::runtime_error("cannot write: " + (dir / "summary.txt").string());
  }

  void emit(const ScalarGrid& grid, const std::string& name, double threshold) {
    const fs::path path = dir / (name + ".csv");
    write_csv_file(grid, path.string());
    std::cout << "wrote " << path.string() << '\n';
    write_summary(grid, summarize(grid, threshold), name, summary);
    summary << '\n';
  }
};

std::string scenario_tag(const CoexistenceScenario& sc) {
  std::string tag = to_string(sc.serving);
  if (!sc.interfering.empty()) {
    tag += "_vs";
    for (SystemId id : sc.interfering) tag += std::string("_") + to_string(id);
  }
  return tag;
}

int cmd_illumination(const ScenarioConfig& config) {
  const SystemLayout layout = build_paper_layout(config.layout_config(1.0));
  const double flux = resolve_flux(config, layout, /*announce=*/true);
  const SystemLayout lit = build_paper_layout(config.layout_config(flux));
  const IlluminanceMap map = illuminance_map(
      config.room, lit.illumination, config.grid_step_m, config.illum_include_reflections,
      config.discretization.first_order_element);
  OutputWriter out(config.output_dir);
  out.summary << "scenario: illumination, flux " << fmt9(flux) << " lm per LD\n\n";
  out.emit(map.grid, "illumination", 300.0);
  return 0;
}

int cmd_map(const ScenarioConfig& config, bool want_interference) {
  if (want_interference && config.interfering.empty())
    throw ScenarioError("this command needs --interfering (or the config key)");
  const CoexistenceScenario scenario{config.serving,
                                     want_interference ? config.interfering
                                                       : std::vector<SystemId>{}};
  const CoexistenceEngine engine = make_engine(config);
  const CoexistenceEngine::MapPair pair = engine.sweep(scenario, config.grid_step_m);

  OutputWriter out(config.output_dir);
  const std::string kind = scenario.interfering.empty() ? "snr" : "sinr";
  const ScalarGrid& grid = config.combining == Combining::sc ? pair.sc : pair.mrc;
  out.emit(grid, kind + "_" + scenario_tag(scenario) + "_" + to_string(config.combining),
           sinr_db_threshold(config));
  return 0;
}

int cmd_gain(const ScenarioConfig& config) {
  const CoexistenceScenario scenario{config.serving, config.interfering};
  const CoexistenceEngine engine = make_engine(config);
  OutputWriter out(config.output_dir);
  out.emit(engine.gain_map(scenario, config.grid_step_m),
           std::string("gain_") + (scenario.interfering.empty() ? "snr" : "sinr") + "_" +
               scenario_tag(scenario),
           3.0);
  return 0;
}

int cmd_report(const ScenarioConfig& config) {
  const SystemLayout layout = build_paper_layout(config.layout_config(1.0));
  const double flux = resolve_flux(config, layout, /*announce=*/true);
  const SystemLayout lit = build_paper_layout(config.layout_config(flux));

  OutputWriter out(config.output_dir);
  out.summary << "scenario: full report, flux " << fmt9(flux) << " lm per LD\n\n";

  const IlluminanceMap lux = illuminance_map(
      config.room, lit.illumination, config.grid_step_m, config.illum_include_reflections,
      config.discretization.first_order_element);
  out.emit(lux.grid, "illumination", 300.0);

  const SystemId all[] = {SystemId::micro, SystemId::pico, SystemId::atto};
  std::vector<CoexistenceScenario> scenarios;
  for (SystemId serving : all) {
    scenarios.push_back({serving, {}});
    std::vector<SystemId> others;
    for (SystemId id : all)
      if (id != serving) others.push_back(id);
    scenarios.push_back({serving, {others[0]}});
    scenarios.push_back({serving, {others[1]}});
    scenarios.push_back({serving, others});
  }

  const CoexistenceEngine engine = make_engine(config);
  const std::vector<CoexistenceEngine::MapPair> maps =
      engine.sweep_scenarios(scenarios, config.grid_step_m);

  const double thr = sinr_db_threshold(config);
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const std::string tag = scenario_tag(scenarios[i]);
    const std::string kind = scenarios[i].interfering.empty() ? "snr" : "sinr";
    out.emit(maps[i].sc, kind + "_" + tag + "_sc", thr);
    out.emit(maps[i].mrc, kind + "_" + tag + "_mrc", thr);
    out.emit(CoexistenceEngine::gain_from(maps[i]), "gain_" + kind + "_" + tag, 3.0);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"indoor optical wireless co-existence simulator"};
  app.require_subcommand(1);

  CliOptions opt;
  auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path, "scenario file");
    cmd->add_option("--grid-step", opt.grid_step, "evaluation grid step [m]");
    cmd->add_option("--out", opt.out_dir, "output directory");
  };
  auto add_scenario = [&opt](CLI::App* cmd) {
    cmd->add_option("--serving", opt.serving, "serving system: micro|pico|atto");
    cmd->add_option("--interfering", opt.interfering, "interfering systems, comma separated");
    cmd->add_option("--combining", opt.combining, "sc|mrc");
  };

  CLI::App* illumination = app.add_subcommand("illumination", "illuminance map and compliance");
  add_common(illumination);
  illumination->add_option("--calibrate", opt.calibrate_target,
                           "calibrate per-LD flux to this minimum lux");

  CLI::App* snr = app.add_subcommand("snr", "SNR map of the serving system");
  add_common(snr);
  add_scenario(snr);

  CLI::App* sinr = app.add_subcommand("sinr", "SINR map under interference");
  add_common(sinr);
  add_scenario(sinr);

  CLI::App* gain = app.add_subcommand("gain", "MRC-SC combining gain map");
  add_common(gain);
  add_scenario(gain);

  CLI::App* report = app.add_subcommand("report", "all maps in one run");
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "E_USAGE: " << e.what() << '\n';
    return 2;
  }

  try {
    const ScenarioConfig config = effective_config(opt);
    if (illumination->parsed()) return cmd_illumination(config);
    if (snr->parsed()) return cmd_map(config, /*want_interference=*/false);
    if (sinr->parsed()) return cmd_map(config, /*want_interference=*/true);
    if (gain->parsed()) return cmd_gain(config);
    if (report->parsed()) return cmd_report(config);
    std::cerr << "E_USAGE: no command\n";
    return 2;
  } catch (const ScenarioError& e) {
    std::cerr << "E_CONFIG: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "E_CONFIG: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "E_IO: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "E_INTERNAL: " << e.what() << '\n';
    return 1;
  }
}
