#pragma once

#include <span>
#include <vector>

#include "owc/emitters.hpp"
#include "owc/grid.hpp"
#include "owc/room.hpp"

namespace owc {

struct IlluminanceMap {
  ScalarGrid grid;  // lux
  double min_lux = 0.0;
  double max_lux = 0.0;
};

/// Horizontal illuminance [lx] at a point on an upward-facing plane:
/// sum over sources of (n+1)*flux/(2*pi) * cos^n(phi) * cos(theta) / d^2.
double illuminance_at(const Vec3& point, std::span<const LambertianSource> sources);

/// Adds light re-emitted by the room surfaces (one diffuse bounce).
double reflected_illuminance_at(const Vec3& point, std::span<const LambertianSource> sources,
                                std::span<const SurfaceElement> elements);

/// Illuminance over the communication-floor lattice. Line-of-sight only by
/// default; include_first_reflection adds one diffuse bounce using the
/// first-order discretization.
IlluminanceMap illuminance_map(const Room& room, std::span<const LambertianSource> sources,
                               double grid_step, bool include_first_reflection = false,
                               double first_order_element = 0.05);

/// Per-LD luminous flux that sets the lux-map minimum to target_min.
/// Illuminance is linear in flux, so the answer is exact:
/// flux = target_min / min(map at unit flux).
/// Throws std::invalid_argument if the layout leaves the minimum at zero.
double calibrate_flux(const SystemLayout& layout, const Room& room, double target_min_lux,
                      double grid_step = 0.25, bool include_first_reflection = false,
                      double first_order_element = 0.05);

}  // namespace owc
