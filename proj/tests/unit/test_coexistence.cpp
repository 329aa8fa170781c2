#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "owc/coexistence.hpp"
#include "owc/grid.hpp"

using namespace owc;

namespace {

SystemLayout test_layout() {
  LayoutConfig cfg;
  cfg.micro_power_w = 2.0;
  cfg.pico_power_w = 1.2;
  cfg.atto_power_w = 1.5;
  return build_paper_layout(cfg);
}

CoexistenceEngine make_test_engine(int order, DiscretizationPolicy policy = {0.2, 0.5}) {
  return CoexistenceEngine(Room{}, policy, test_layout(), {30e6, 2e-12, 10e-6},
                           {1e9, 2e-12, 10e-6}, {5e9, 2e-12, 10e-6}, order, false);
}

// LOS-only engine shared across test cases.
const CoexistenceEngine& los_engine() {
  static const CoexistenceEngine engine = make_test_engine(0);
  return engine;
}

}  // namespace

TEST_CASE("serving_source for the micro system is its single transmitter") {
  for (const Vec3& p : {Vec3{0.3, 0.3, 1}, Vec3{2, 4, 1}, Vec3{3.7, 7.7, 1}}) {
    const ServingChoice c = los_engine().serving_source(SystemId::micro, p);
    CHECK(c.index_in_system == 0);
    CHECK_FALSE(c.zero_power);
  }
}

TEST_CASE("serving_source picks the strongest pico unit") {
  // Under unit (1,1,3) the local down branch must win; cross-check the
  // argmax against per-unit LOS power summed over the ADR branches.
  const ServingChoice c = los_engine().serving_source(SystemId::pico, {1, 1, 1});
  CHECK(c.index_in_system == 0);

  const AngleDiversityReceiver adr = make_adr({1, 1, 1});
  const SystemLayout layout = test_layout();
  std::size_t best = 0;
  double best_power = -1.0;
  for (std::size_t u = 0; u < layout.pico.size(); ++u) {
    double sum = 0.0;
    for (const ReceiverBranch& b : adr.branches)
      sum += los_gain(layout.pico[u], b.aperture) * layout.pico[u].optical_power_w;
    if (sum > best_power) {
      best_power = sum;
      best = u;
    }
  }
  CHECK(best == c.index_in_system);
}

TEST_CASE("pico serving regions are the nearest-unit rectangles") {
  const auto serving = los_engine().serving_map(SystemId::pico, 1.0);
  const auto points = cf_grid(Room{}, 1.0);
  const SystemLayout layout = test_layout();
  REQUIRE(serving.size() == points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::size_t nearest = 0;
    double best = 1e30;
    for (std::size_t u = 0; u < layout.pico.size(); ++u) {
      const double dx = points[i].x - layout.pico[u].position.x;
      const double dy = points[i].y - layout.pico[u].position.y;
      if (dx * dx + dy * dy < best) {
        best = dx * dx + dy * dy;
        nearest = u;
      }
    }
    CHECK(serving[i] == nearest);
  }
}

TEST_CASE("serving_source flags an all-dark layout") {
  LayoutConfig cfg;
  cfg.micro_power_w = cfg.pico_power_w = cfg.atto_power_w = 0.0;
  const CoexistenceEngine dark(Room{}, {0.2, 0.5}, build_paper_layout(cfg),
                               {30e6, 2e-12, 10e-6}, {1e9, 2e-12, 10e-6},
                               {5e9, 2e-12, 10e-6}, 0, false);
  const ServingChoice c = dark.serving_source(SystemId::pico, {2, 4, 1});
  CHECK(c.index_in_system == 0);
  CHECK(c.zero_power);
}

TEST_CASE("exact power ties resolve to the lowest source index") {
  // Two co-located identical sources produce bitwise-equal powers.
  LambertianSource a;
  a.position = {1, 1, 3};
  a.orientation = {0, 0, -1};
  a.order_n = 2.0;
  a.optical_power_w = 1.0;
  a.system_id = SystemId::pico;
  SystemLayout layout;
  layout.micro = a;
  layout.micro.system_id = SystemId::micro;
  layout.pico = {a, a};
  const CoexistenceEngine engine(Room{}, {0.2, 0.5}, layout, {30e6, 2e-12, 10e-6},
                                 {1e9, 2e-12, 10e-6}, {5e9, 2e-12, 10e-6}, 0, false);
  CHECK(engine.serving_source(SystemId::pico, {1.4, 1.2, 1}).index_in_system == 0);
}

TEST_CASE("interference can only lower the map values") {
  const CoexistenceScenario snr{SystemId::pico, {}};
  const CoexistenceScenario one{SystemId::pico, {SystemId::micro}};
  const CoexistenceScenario both{SystemId::pico, {SystemId::micro, SystemId::atto}};
  const CoexistenceScenario scenarios[] = {snr, one, both};
  const auto maps = los_engine().sweep_scenarios(scenarios, 1.0);
  REQUIRE(maps.size() == 3);
  CHECK(maps[0].sc.quantity == "snr_db");
  CHECK(maps[1].sc.quantity == "sinr_db");
  for (std::size_t i = 0; i < maps[0].sc.values.size(); ++i) {
    CHECK(maps[1].sc.values[i] <= maps[0].sc.values[i]);
    CHECK(maps[2].sc.values[i] <= maps[1].sc.values[i]);
    CHECK(maps[1].mrc.values[i] <= maps[0].mrc.values[i]);
    CHECK(maps[2].mrc.values[i] <= maps[1].mrc.values[i]);
  }
}

TEST_CASE("micro SNR map is symmetric across the room width") {
  const ScalarGrid map = los_engine().sweep_map({SystemId::micro, {}}, 1.0, Combining::sc);
  for (std::size_t j = 0; j < map.ny; ++j)
    for (std::size_t i = 0; i < map.nx; ++i)
      CHECK(map.at(i, j) == doctest::Approx(map.at(map.nx - 1 - i, j)).epsilon(1e-9));
}

TEST_CASE("combining gain is bounded by the branch count") {
  const CoexistenceEngine::MapPair pair = los_engine().sweep({SystemId::micro, {}}, 1.0);
  const ScalarGrid gain = CoexistenceEngine::gain_from(pair);
  CHECK(gain.quantity == "gain_db");
  for (double v : gain.values) {
    CHECK(v >= -1e-12);
    CHECK(v <= 10.0 * std::log10(7.0) + 1e-9);
  }
  // centre point: single dominant branch, so no combining gain (LOS only)
  const std::size_t centre = (gain.ny / 2) * gain.nx + gain.nx / 2;
  CHECK(gain.values[centre] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("micro combining gain grows toward the room side") {
  // Full-budget engine, coarser elements to keep the test quick.
  const CoexistenceEngine engine = make_test_engine(2, {0.1, 0.4});
  const CoexistenceScenario snr{SystemId::micro, {}};
  const AdrEvaluation centre = engine.evaluate_at(snr, {2, 4, 1});
  const AdrEvaluation side = engine.evaluate_at(snr, {0.25, 4, 1});
  const double gain_centre = 10 * std::log10(centre.mrc_snr / centre.sc_snr);
  const double gain_side = 10 * std::log10(side.mrc_snr / side.sc_snr);
  CHECK(gain_centre <= gain_side);
}

TEST_CASE("evaluate_at agrees with evaluate_adr") {
  const CoexistenceEngine engine = make_test_engine(1, {0.25, 0.5});
  const Vec3 pos{1.4, 2.9, 1.0};
  const CoexistenceScenario scenario{SystemId::atto, {SystemId::micro, SystemId::pico}};
  const AdrEvaluation via_engine = engine.evaluate_at(scenario, pos);

  const ServingChoice serving = engine.serving_source(SystemId::atto, pos);
  const std::size_t serving_idx[] = {
      engine.system(SystemId::atto).source_indices[serving.index_in_system]};
  const std::vector<std::vector<std::size_t>> groups{
      engine.system(SystemId::micro).source_indices,
      engine.system(SystemId::pico).source_indices};
  const AdrEvaluation direct = evaluate_adr(make_adr(pos), serving_idx, groups, engine.scene(),
                                            engine.system(SystemId::atto).noise);
  CHECK(via_engine.sc_sinr == direct.sc_sinr);
  CHECK(via_engine.mrc_sinr == direct.mrc_sinr);
  CHECK(via_engine.sc_snr == direct.sc_snr);
  CHECK(via_engine.mrc_snr == direct.mrc_snr);
}

TEST_CASE("intra-system interference lowers the SINR") {
  const CoexistenceEngine base = make_test_engine(0);
  const CoexistenceEngine intra(Room{}, {0.2, 0.5}, test_layout(), {30e6, 2e-12, 10e-6},
                                {1e9, 2e-12, 10e-6}, {5e9, 2e-12, 10e-6}, 0, true);
  const CoexistenceScenario scenario{SystemId::pico, {}};
  const AdrEvaluation clean = base.evaluate_at(scenario, {1.6, 2.2, 1});
  const AdrEvaluation loaded = intra.evaluate_at(scenario, {1.6, 2.2, 1});
  CHECK(loaded.sc_sinr < clean.sc_sinr);
  CHECK(loaded.sc_snr == clean.sc_snr);
}

TEST_CASE("scenario validation rejects self/duplicate interference") {
  CHECK_THROWS_AS(los_engine().evaluate_at({SystemId::micro, {SystemId::micro}}, {1, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      los_engine().evaluate_at({SystemId::micro, {SystemId::pico, SystemId::pico}}, {1, 1, 1}),
      std::invalid_argument);
}

TEST_CASE("sweeps are identical under different thread counts") {
  const CoexistenceScenario scenario{SystemId::atto, {SystemId::pico}};
  setenv("OWC_THREADS", "1", 1);
  const ScalarGrid a = los_engine().sweep_map(scenario, 0.5, Combining::mrc);
  setenv("OWC_THREADS", "5", 1);
  const ScalarGrid b = los_engine().sweep_map(scenario, 0.5, Combining::mrc);
  unsetenv("OWC_THREADS");
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("summarize on a constant and a ramp grid") {
  ScalarGrid g;
  g.nx = 4;
  g.ny = 2;
  g.step = 0.5;
  g.quantity = "snr_db";
  g.values.assign(8, 3.5);
  GridSummary s = summarize(g, 10.0);
  CHECK(s.min == 3.5);
  CHECK(s.max == 3.5);
  CHECK(s.mean == doctest::Approx(3.5));
  CHECK(s.coverage == 0.0);
  s = summarize(g, 1.0);
  CHECK(s.coverage == 1.0);

  for (std::size_t i = 0; i < 8; ++i) g.values[i] = static_cast<double>(i);
  s = summarize(g, 4.0);
  CHECK(s.min == 0.0);
  CHECK(s.max == 7.0);
  CHECK(s.argmax_ix == 3);
  CHECK(s.argmax_iy == 1);
  CHECK(s.coverage == doctest::Approx(0.5));
}

TEST_CASE("grid csv round trip") {
  ScalarGrid g;
  g.nx = 3;
  g.ny = 2;
  g.step = 0.25;
  g.quantity = "sinr_db";
  g.values = {1.5, -2.25, 3.125, 4.0625, -300.0, 17.123456789};
  std::ostringstream os;
  write_csv(g, os);
  const std::string text = os.str();
  CHECK(text.substr(0, 20) == "nx,ny,step,quantity\n");
  CHECK(text.find("3,2,0.25,sinr_db\n") != std::string::npos);

  std::istringstream is(text);
  const ScalarGrid back = read_csv(is);
  CHECK(back.nx == g.nx);
  CHECK(back.ny == g.ny);
  CHECK(back.step == g.step);
  CHECK(back.quantity == g.quantity);
  for (std::size_t i = 0; i < g.values.size(); ++i)
    CHECK(back.values[i] == doctest::Approx(g.values[i]).epsilon(1e-9));
}
