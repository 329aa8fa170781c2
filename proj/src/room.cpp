#include "owc/room.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace owc {

void Room::validate() const {
  if (width_x <= 0 || length_y <= 0 || height_z <= 0)
    throw std::invalid_argument("room dimensions must be positive");
  for (double r : {reflectivity_ceiling, reflectivity_walls, reflectivity_floor})
    if (r < 0.0 || r > 1.0)
      throw std::invalid_argument("reflectivity must be in [0, 1]");
  if (comm_floor_z < 0.0 || comm_floor_z >= height_z)
    throw std::invalid_argument("comm_floor_z must satisfy 0 <= cf < height_z");
}

std::size_t grid_cells(double span, double step) {
  const double q = span / step;
  const double r = std::round(q);
  if (r >= 1.0 && std::abs(q - r) <= 1e-9 * r) return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::floor(q));
}

namespace {

// One face: origin corner, two edge axes and their spans, inward normal.
struct Face {
  Vec3 origin;
  Vec3 u_axis, v_axis;
  double u_span, v_span;
  Vec3 normal;
  double reflectivity;
};

void tile_face(const Face& f, double size, std::vector<SurfaceElement>& out) {
  // Column widths along one axis: full elements then an optional partial one.
  auto widths = [size](double span) {
    std::vector<double> w;
    const std::size_t full = grid_cells(span, size);
    w.assign(full, size);
    const double rem = span - static_cast<double>(full) * size;
    if (rem > 1e-9) w.push_back(rem);
    return w;
  };
  const std::vector<double> wu = widths(f.u_span);
  const std::vector<double> wv = widths(f.v_span);

  double v_off = 0.0;
  for (double dv : wv) {
    double u_off = 0.0;
    for (double du : wu) {
      SurfaceElement e;
      e.centre = f.origin + f.u_axis * (u_off + du / 2) + f.v_axis * (v_off + dv / 2);
      e.normal = f.normal;
      e.area = du * dv;
      e.reflectivity = f.reflectivity;
      e.emission_order = 1.0;
      out.push_back(e);
      u_off += du;
    }
    v_off += dv;
  }
}

}  // namespace

std::vector<SurfaceElement> discretize_room(const Room& room, double element_size) {
  room.validate();
  if (element_size <= 0.0)
    throw std::invalid_argument("element_size must be positive");
  const double min_face_dim = std::min({room.width_x, room.length_y, room.height_z});
  if (element_size > min_face_dim)
    throw std::invalid_argument("element_size larger than smallest face dimension");

  const double w = room.width_x, l = room.length_y, h = room.height_z;
  const Face faces[6] = {
      // floor z=0, inward normal +z
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, w, l, {0, 0, 1}, room.reflectivity_floor},
      // ceiling z=h, inward normal -z
      {{0, 0, h}, {1, 0, 0}, {0, 1, 0}, w, l, {0, 0, -1}, room.reflectivity_ceiling},
      // wall x=0, inward +x
      {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}, l, h, {1, 0, 0}, room.reflectivity_walls},
      // wall x=w, inward -x
      {{w, 0, 0}, {0, 1, 0}, {0, 0, 1}, l, h, {-1, 0, 0}, room.reflectivity_walls},
      // wall y=0, inward +y
      {{0, 0, 0}, {1, 0, 0}, {0, 0, 1}, w, h, {0, 1, 0}, room.reflectivity_walls},
      // wall y=l, inward -y
      {{0, l, 0}, {1, 0, 0}, {0, 0, 1}, w, h, {0, -1, 0}, room.reflectivity_walls},
  };

  std::vector<SurfaceElement> elements;
  for (const Face& f : faces) tile_face(f, element_size, elements);
  return elements;
}

std::vector<Vec3> cf_grid(const Room& room, double step) {
  room.validate();
  if (step <= 0.0) throw std::invalid_argument("grid step must be positive");
  if (step > std::min(room.width_x, room.length_y))
    throw std::invalid_argument("grid step larger than floor dimension");

  const std::size_t nx = grid_cells(room.width_x, step);
  const std::size_t ny = grid_cells(room.length_y, step);
  std::vector<Vec3> pts;
  pts.reserve(nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      pts.push_back({(static_cast<double>(i) + 0.5) * step,
                     (static_cast<double>(j) + 0.5) * step, room.comm_floor_z});
  return pts;
}

}  // namespace owc
