#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "owc/grid.hpp"
#include "owc/receiver.hpp"

namespace owc {

enum class Combining { sc, mrc };

const char* to_string(Combining c);

/// One cell system: its sources (as indices into the scene source list) and
/// its receiver noise configuration.
struct CellSystem {
  SystemId id = SystemId::micro;
  std::vector<std::size_t> source_indices;
  NoiseParams noise;
};

/// A serving system plus the set of systems interfering with it.
struct CoexistenceScenario {
  SystemId serving = SystemId::micro;
  std::vector<SystemId> interfering;  // empty set yields the SNR map
};

struct ServingChoice {
  std::size_t index_in_system = 0;
  bool zero_power = false;  // no source delivered any power; index 0 returned
};

/// Sweep orchestration over the communication floor.
///
/// Per grid point the received power of every source at every ADR branch is
/// computed once and shared across scenarios, serving-source selection and
/// combining, so multi-map reports cost one propagation pass. Grid points
/// are independent work items; values never depend on the thread count.
class CoexistenceEngine {
 public:
  CoexistenceEngine(const Room& room, const DiscretizationPolicy& policy,
                    const SystemLayout& layout, const NoiseParams& micro_noise,
                    const NoiseParams& pico_noise, const NoiseParams& atto_noise,
                    int max_reflection_order, bool intra_system_interference);

  const CellSystem& system(SystemId id) const;
  const SceneEngine& scene() const { return *scene_; }
  const Room& room() const { return room_; }

  /// Strongest source of a system at a position: highest total received
  /// power summed over the 7 ADR branches, ties broken by lowest index.
  ServingChoice serving_source(SystemId id, const Vec3& rx_pos) const;

  /// Full single-point evaluation under a scenario.
  AdrEvaluation evaluate_at(const CoexistenceScenario& scenario, const Vec3& pos) const;

  struct MapPair {
    ScalarGrid sc, mrc;
  };

  /// One sweep computing every requested scenario from the shared per-point
  /// power matrix.
  std::vector<MapPair> sweep_scenarios(std::span<const CoexistenceScenario> scenarios,
                                       double grid_step) const;

  MapPair sweep(const CoexistenceScenario& scenario, double grid_step) const;
  ScalarGrid sweep_map(const CoexistenceScenario& scenario, double grid_step,
                       Combining combining) const;

  /// Pointwise MRC(dB) - SC(dB).
  ScalarGrid gain_map(const CoexistenceScenario& scenario, double grid_step) const;
  static ScalarGrid gain_from(const MapPair& maps);

  /// Serving-source index (within the system) per grid point.
  std::vector<std::size_t> serving_map(SystemId id, double grid_step) const;

 private:
  struct PointPowers {
    std::array<std::vector<double>, kAdrBranchCount> total;  // [branch][source]
  };
  PointPowers point_powers(const Vec3& pos) const;
  ServingChoice pick_serving(const CellSystem& sys, const PointPowers& powers) const;
  AdrEvaluation assemble(const CoexistenceScenario& scenario, const PointPowers& powers,
                         const ServingChoice& serving) const;
  void validate(const CoexistenceScenario& scenario) const;

  Room room_;
  std::shared_ptr<const SceneEngine> scene_;
  std::array<CellSystem, 3> systems_;  // micro, pico, atto
  bool intra_interference_ = false;
};

/// Grid value used for SNR/SINR maps: 10*log10 clamped at -300 dB so grids
/// stay finite when a point receives nothing.
double to_db(double linear);

}  // namespace owc
