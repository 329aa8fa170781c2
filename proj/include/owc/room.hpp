#pragma once

#include <vector>

#include "owc/vec3.hpp"

namespace owc {

/// Rectangular empty room. Origin at one floor corner; x spans the width,
/// y the length, z the height. Communications are evaluated on the plane
/// z = comm_floor_z.
struct Room {
  double width_x = 4.0;   // m
  double length_y = 8.0;  // m
  double height_z = 3.0;  // m
  double reflectivity_ceiling = 0.8;
  double reflectivity_walls = 0.8;
  double reflectivity_floor = 0.3;
  double comm_floor_z = 1.0;  // m above floor

  bool operator==(const Room&) const = default;

  Vec3 centre() const { return {width_x / 2, length_y / 2, height_z / 2}; }
  void validate() const;  // throws std::invalid_argument on bad fields
};

/// One patch of a discretized room surface acting as a diffuse re-emitter.
struct SurfaceElement {
  Vec3 centre;
  Vec3 normal;  // unit, points into the room interior
  double area = 0.0;          // dA, m^2
  double reflectivity = 0.0;  // rho
  double emission_order = 1.0;
};

/// Element sizes for the two reflection passes.
struct DiscretizationPolicy {
  double first_order_element = 0.05;   // m
  double second_order_element = 0.20;  // m

  bool operator==(const DiscretizationPolicy&) const = default;
};

/// Tile all six faces of the room with square elements of the given edge
/// length. If the edge does not divide a face dimension, the last row/column
/// is a narrower partial element so face area is conserved exactly.
/// Throws std::invalid_argument if element_size <= 0 or exceeds the smallest
/// face dimension.
std::vector<SurfaceElement> discretize_room(const Room& room, double element_size);

/// Receiver evaluation lattice on the communication floor: points at
/// z = comm_floor_z, inset step/2 from the walls, row-major (y rows, x fast).
/// Throws std::invalid_argument if step <= 0 or exceeds a floor dimension.
std::vector<Vec3> cf_grid(const Room& room, double step);

/// Number of lattice cells along one dimension (round-to-nearest when step
/// divides the span within 1e-9, floor otherwise).
std::size_t grid_cells(double span, double step);

}  // namespace owc
