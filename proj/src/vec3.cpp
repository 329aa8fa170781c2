#include "owc/vec3.hpp"

namespace owc {

Vec3 az_el_to_direction(double az_deg, double el_deg) {
  az_deg = std::fmod(az_deg, 360.0);
  if (az_deg < 0.0) az_deg += 360.0;

  const double az = az_deg * kDegToRad;
  const double el = el_deg * kDegToRad;
  Vec3 v{std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};

  // Snap sub-epsilon trig residue (e.g. cos(90 deg) = 6.1e-17) so cardinal
  // directions come out exact and mirrored layouts stay symmetric.
  auto snap = [](double c) { return std::abs(c) <= 1e-15 ? 0.0 : c; };
  v = {snap(v.x), snap(v.y), snap(v.z)};
  return v.normalized();
}

}  // namespace owc
