#include "owc/coexistence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "owc/parallel.hpp"

namespace owc {

const char* to_string(Combining c) { return c == Combining::sc ? "sc" : "mrc"; }

double to_db(double linear) { return 10.0 * std::log10(std::max(linear, 1e-30)); }

CoexistenceEngine::CoexistenceEngine(const Room& room, const DiscretizationPolicy& policy,
                                     const SystemLayout& layout, const NoiseParams& micro_noise,
                                     const NoiseParams& pico_noise, const NoiseParams& atto_noise,
                                     int max_reflection_order, bool intra_system_interference)
    : room_(room), intra_interference_(intra_system_interference) {
  std::vector<LambertianSource> sources = layout.comm_sources();

  CellSystem micro{SystemId::micro, {}, micro_noise};
  CellSystem pico{SystemId::pico, {}, pico_noise};
  CellSystem atto{SystemId::atto, {}, atto_noise};
  for (std::size_t i = 0; i < sources.size(); ++i) {
    switch (sources[i].system_id) {
      case SystemId::micro: micro.source_indices.push_back(i); break;
      case SystemId::pico: pico.source_indices.push_back(i); break;
      case SystemId::atto: atto.source_indices.push_back(i); break;
      case SystemId::illumination:
        throw std::invalid_argument("illumination sources are not communication sources");
    }
  }
  systems_ = {std::move(micro), std::move(pico), std::move(atto)};
  scene_ = std::make_shared<SceneEngine>(room, policy, std::move(sources), max_reflection_order);
}

const CellSystem& CoexistenceEngine::system(SystemId id) const {
  for (const CellSystem& s : systems_)
    if (s.id == id) return s;
  throw std::invalid_argument("not a cell system");
}

CoexistenceEngine::PointPowers CoexistenceEngine::point_powers(const Vec3& pos) const {
  const AngleDiversityReceiver adr = make_adr(pos);
  PointPowers p;
  for (std::size_t k = 0; k < kAdrBranchCount; ++k) {
    const std::vector<PathBudget> budgets = scene_->received_all(adr.branches[k].aperture);
    p.total[k].resize(budgets.size());
    for (std::size_t s = 0; s < budgets.size(); ++s) p.total[k][s] = budgets[s].total;
  }
  return p;
}

ServingChoice CoexistenceEngine::pick_serving(const CellSystem& sys,
                                              const PointPowers& powers) const {
  ServingChoice choice;
  double best = -1.0;
  for (std::size_t local = 0; local < sys.source_indices.size(); ++local) {
    const std::size_t s = sys.source_indices[local];
    double sum = 0.0;
    for (std::size_t k = 0; k < kAdrBranchCount; ++k) sum += powers.total[k][s];
    if (sum > best) {
      best = sum;
      choice.index_in_system = local;
    }
  }
  choice.zero_power = best <= 0.0;
  return choice;
}

void CoexistenceEngine::validate(const CoexistenceScenario& scenario) const {
  if (scenario.serving == SystemId::illumination)
    throw std::invalid_argument("serving system must be micro, pico or atto");
  for (std::size_t i = 0; i < scenario.interfering.size(); ++i) {
    if (scenario.interfering[i] == scenario.serving)
      throw std::invalid_argument("a system cannot interfere with itself");
    if (scenario.interfering[i] == SystemId::illumination)
      throw std::invalid_argument("interfering system must be micro, pico or atto");
    for (std::size_t j = i + 1; j < scenario.interfering.size(); ++j)
      if (scenario.interfering[i] == scenario.interfering[j])
        throw std::invalid_argument("duplicate interfering system");
  }
}

AdrEvaluation CoexistenceEngine::assemble(const CoexistenceScenario& scenario,
                                          const PointPowers& powers,
                                          const ServingChoice& serving) const {
  const CellSystem& sys = system(scenario.serving);
  const std::size_t serving_idx = sys.source_indices[serving.index_in_system];

  AdrEvaluation eval;
  std::vector<double> snrs, sinrs;
  for (std::size_t k = 0; k < kAdrBranchCount; ++k) {
    BranchMetrics m;
    m.signal = OokSignal::from_average_power(powers.total[k][serving_idx]);
    for (SystemId id : scenario.interfering) {
      double group = 0.0;
      for (std::size_t s : system(id).source_indices) group += powers.total[k][s];
      m.interferers.push_back(OokSignal::from_average_power(group));
    }
    if (intra_interference_) {
      double group = 0.0;
      for (std::size_t s : sys.source_indices)
        if (s != serving_idx) group += powers.total[k][s];
      m.interferers.push_back(OokSignal::from_average_power(group));
    }
    m.sigma_total = noise_sigma(m.signal.p1, sys.noise, kAdrResponsivity);
    m.snr = branch_sinr(m.signal, {}, m.sigma_total, kAdrResponsivity);
    m.sinr = branch_sinr(m.signal, m.interferers, m.sigma_total, kAdrResponsivity);
    snrs.push_back(m.snr);
    sinrs.push_back(m.sinr);
    eval.branches.push_back(std::move(m));
  }
  eval.sc_snr = combine_sc(snrs);
  eval.mrc_snr = combine_mrc(snrs);
  eval.sc_sinr = combine_sc(sinrs);
  eval.mrc_sinr = combine_mrc(sinrs);
  return eval;
}

ServingChoice CoexistenceEngine::serving_source(SystemId id, const Vec3& rx_pos) const {
  return pick_serving(system(id), point_powers(rx_pos));
}

AdrEvaluation CoexistenceEngine::evaluate_at(const CoexistenceScenario& scenario,
                                             const Vec3& pos) const {
  validate(scenario);
  const PointPowers powers = point_powers(pos);
  return assemble(scenario, powers, pick_serving(system(scenario.serving), powers));
}

std::vector<CoexistenceEngine::MapPair> CoexistenceEngine::sweep_scenarios(
    std::span<const CoexistenceScenario> scenarios, double grid_step) const {
  for (const CoexistenceScenario& sc : scenarios) validate(sc);
  const std::vector<Vec3> points = cf_grid(room_, grid_step);
  const std::size_t nx = grid_cells(room_.width_x, grid_step);
  const std::size_t ny = grid_cells(room_.length_y, grid_step);

  std::vector<MapPair> maps(scenarios.size());
  for (std::size_t m = 0; m < scenarios.size(); ++m) {
    const char* q = scenarios[m].interfering.empty() ? "snr_db" : "sinr_db";
    for (ScalarGrid* g : {&maps[m].sc, &maps[m].mrc}) {
      g->nx = nx;
      g->ny = ny;
      g->step = grid_step;
      g->quantity = q;
      g->values.assign(points.size(), 0.0);
    }
  }

  parallel_for(points.size(), [&](std::size_t i) {
    const PointPowers powers = point_powers(points[i]);
    for (std::size_t m = 0; m < scenarios.size(); ++m) {
      const ServingChoice serving = pick_serving(system(scenarios[m].serving), powers);
      const AdrEvaluation eval = assemble(scenarios[m], powers, serving);
      maps[m].sc.values[i] = to_db(eval.sc_sinr);
      maps[m].mrc.values[i] = to_db(eval.mrc_sinr);
    }
  });
  return maps;
}

CoexistenceEngine::MapPair CoexistenceEngine::sweep(const CoexistenceScenario& scenario,
                                                    double grid_step) const {
  return sweep_scenarios({&scenario, 1}, grid_step)[0];
}

ScalarGrid CoexistenceEngine::sweep_map(const CoexistenceScenario& scenario, double grid_step,
                                        Combining combining) const {
  MapPair pair = sweep(scenario, grid_step);
  return combining == Combining::sc ? std::move(pair.sc) : std::move(pair.mrc);
}

ScalarGrid CoexistenceEngine::gain_from(const MapPair& maps) {
  ScalarGrid g = maps.sc;
  g.quantity = "gain_db";
  for (std::size_t i = 0; i < g.values.size(); ++i)
    g.values[i] = maps.mrc.values[i] - maps.sc.values[i];
  return g;
}

ScalarGrid CoexistenceEngine::gain_map(const CoexistenceScenario& scenario,
                                       double grid_step) const {
  return gain_from(sweep(scenario, grid_step));
}

std::vector<std::size_t> CoexistenceEngine::serving_map(SystemId id, double grid_step) const {
  const CellSystem& sys = system(id);
  const std::vector<Vec3> points = cf_grid(room_, grid_step);
  std::vector<std::size_t> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    out[i] = pick_serving(sys, point_powers(points[i])).index_in_system;
  });
  return out;
}

}  // namespace owc
