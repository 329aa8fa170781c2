#include "owc/photometry.hpp"

#include <cmath>
#include <stdexcept>

#include "owc/parallel.hpp"

namespace owc {

namespace {

constexpr double kMinDistance = 1e-12;

// Luminous intensity [cd] toward a unit direction.
double luminous_intensity(const LambertianSource& src, const Vec3& u) {
  const double cos_phi = Vec3::dot(src.orientation, u);
  return src.luminous_flux_lm * lambertian_pattern(src.order_n, cos_phi);
}

// Horizontal illuminance contribution of one source at a point.
double source_lux(const LambertianSource& src, const Vec3& point) {
  const Vec3 v = point - src.position;
  const double d2 = v.norm2();
  if (d2 < kMinDistance * kMinDistance) return 0.0;
  const double d = std::sqrt(d2);
  const Vec3 u = v / d;
  const double cos_theta = -u.z;  // against the floor normal (up)
  if (cos_theta <= 0.0) return 0.0;
  return luminous_intensity(src, u) * cos_theta / d2;
}

// Illuminance arriving on a surface element (cos against the element normal).
double element_lux(const LambertianSource& src, const SurfaceElement& e) {
  const Vec3 v = e.centre - src.position;
  const double d2 = v.norm2();
  if (d2 < kMinDistance * kMinDistance) return 0.0;
  const double d = std::sqrt(d2);
  const Vec3 u = v / d;
  const double cos_theta = -Vec3::dot(e.normal, u);
  if (cos_theta <= 0.0) return 0.0;
  return luminous_intensity(src, u) * cos_theta / d2;
}

}  // namespace

double illuminance_at(const Vec3& point, std::span<const LambertianSource> sources) {
  double lux = 0.0;
  for (const LambertianSource& src : sources) lux += source_lux(src, point);
  return lux;
}

double reflected_illuminance_at(const Vec3& point, std::span<const LambertianSource> sources,
                                std::span<const SurfaceElement> elements) {
  double lux = 0.0;
  for (const SurfaceElement& e : elements) {
    double incident = 0.0;
    for (const LambertianSource& src : sources) incident += element_lux(src, e);
    if (incident == 0.0) continue;
    // Element as a diffuse secondary emitter of flux rho * E * dA.
    const Vec3 v = point - e.centre;
    const double d2 = v.norm2();
    if (d2 < kMinDistance * kMinDistance) continue;
    const double d = std::sqrt(d2);
    const Vec3 u = v / d;
    const double cos_phi = Vec3::dot(e.normal, u);
    if (cos_phi <= 0.0) continue;
    const double cos_theta = -u.z;
    if (cos_theta <= 0.0) continue;
    lux += e.reflectivity * incident * e.area * lambertian_pattern(1.0, cos_phi) * cos_theta / d2;
  }
  return lux;
}

IlluminanceMap illuminance_map(const Room& room, std::span<const LambertianSource> sources,
                               double grid_step, bool include_first_reflection,
                               double first_order_element) {
  const std::vector<Vec3> points = cf_grid(room, grid_step);
  std::vector<SurfaceElement> elements;
  if (include_first_reflection) elements = discretize_room(room, first_order_element);

  IlluminanceMap map;
  map.grid.nx = grid_cells(room.width_x, grid_step);
  map.grid.ny = grid_cells(room.length_y, grid_step);
  map.grid.step = grid_step;
  map.grid.quantity = "lux";
  map.grid.values.assign(points.size(), 0.0);
  parallel_for(points.size(), [&](std::size_t i) {
    double lux = illuminance_at(points[i], sources);
    if (include_first_reflection) lux += reflected_illuminance_at(points[i], sources, elements);
    map.grid.values[i] = lux;
  });

  const GridSummary s = summarize(map.grid, 0.0);
  map.min_lux = s.min;
  map.max_lux = s.max;
  return map;
}

double calibrate_flux(const SystemLayout& layout, const Room& room, double target_min_lux,
                      double grid_step, bool include_first_reflection,
                      double first_order_element) {
  if (target_min_lux <= 0.0) throw std::invalid_argument("calibration target must be positive");
  std::vector<LambertianSource> unit = layout.illumination;
  for (LambertianSource& src : unit) src.luminous_flux_lm = 1.0;
  const IlluminanceMap at_unit =
      illuminance_map(room, unit, grid_step, include_first_reflection, first_order_element);
  if (at_unit.min_lux <= 0.0)
    throw std::invalid_argument("illumination layout leaves part of the floor dark");
  return target_min_lux / at_unit.min_lux;
}

}  // namespace owc
