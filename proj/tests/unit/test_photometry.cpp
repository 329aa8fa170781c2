#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "owc/photometry.hpp"

using namespace owc;

namespace {

SystemLayout lit_layout(double flux) {
  LayoutConfig cfg;
  cfg.illum_flux_lm = flux;
  return build_paper_layout(cfg);
}

}  // namespace

TEST_CASE("illuminance of a single LD straight below") {
  LambertianSource ld;
  ld.position = {0, 0, 1};
  ld.orientation = {0, 0, -1};
  ld.order_n = 1.0;
  ld.luminous_flux_lm = 1.0;
  const LambertianSource sources[] = {ld};
  CHECK(illuminance_at({0, 0, 0}, sources) ==
        doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-12));
}

TEST_CASE("no illuminance outside the forward hemisphere") {
  LambertianSource ld;
  ld.position = {0, 0, 1};
  ld.orientation = {0, 0, 1};  // points at the ceiling
  ld.order_n = 1.0;
  ld.luminous_flux_lm = 100.0;
  const LambertianSource sources[] = {ld};
  CHECK(illuminance_at({0.5, 0.5, 0}, sources) == 0.0);
}

TEST_CASE("illuminance is exactly linear in flux") {
  const SystemLayout base = lit_layout(1.0);
  const SystemLayout scaled = lit_layout(137.25);
  const Vec3 p{0.6, 2.4, 1.0};
  const double e1 = illuminance_at(p, base.illumination);
  const double e2 = illuminance_at(p, scaled.illumination);
  CHECK(e2 == doctest::Approx(137.25 * e1).epsilon(1e-12));
}

TEST_CASE("illuminance map is symmetric in both room axes") {
  Room room;
  const IlluminanceMap map = illuminance_map(room, lit_layout(500.0).illumination, 0.5);
  for (std::size_t j = 0; j < map.grid.ny; ++j)
    for (std::size_t i = 0; i < map.grid.nx; ++i) {
      const double v = map.grid.at(i, j);
      CHECK(v == doctest::Approx(map.grid.at(map.grid.nx - 1 - i, j)).epsilon(1e-9));
      CHECK(v == doctest::Approx(map.grid.at(i, map.grid.ny - 1 - j)).epsilon(1e-9));
      CHECK(v >= 0.0);
    }
  CHECK(map.min_lux <= map.max_lux);
}

TEST_CASE("calibrate_flux is exact by linearity") {
  Room room;
  const SystemLayout layout = lit_layout(1.0);
  const double flux = calibrate_flux(layout, room, 306.4);
  const double flux2 = calibrate_flux(layout, room, 612.8);
  CHECK(flux2 == doctest::Approx(2.0 * flux).epsilon(1e-12));

  const SystemLayout lit = lit_layout(flux);
  const IlluminanceMap map = illuminance_map(room, lit.illumination, 0.25);
  CHECK(map.min_lux == doctest::Approx(306.4).epsilon(1e-9));
  CHECK(map.max_lux <= 1300.0);
  CHECK(map.min_lux >= 300.0);
}

TEST_CASE("calibrate_flux rejects a layout that leaves the floor dark") {
  Room room;
  SystemLayout layout = lit_layout(1.0);
  for (LambertianSource& ld : layout.illumination) ld.orientation = {0, 0, 1};
  CHECK_THROWS_AS(calibrate_flux(layout, room, 300.0), std::invalid_argument);
}

TEST_CASE("reflected illuminance adds a non-negative diffuse term") {
  Room room;
  const SystemLayout lit = lit_layout(1000.0);
  const IlluminanceMap los = illuminance_map(room, lit.illumination, 1.0, false);
  const IlluminanceMap refl = illuminance_map(room, lit.illumination, 1.0, true, 0.25);
  REQUIRE(los.grid.values.size() == refl.grid.values.size());
  for (std::size_t i = 0; i < los.grid.values.size(); ++i)
    CHECK(refl.grid.values[i] > los.grid.values[i]);
}
