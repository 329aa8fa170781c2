#include "owc/emitters.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace owc {

const char* to_string(SystemId id) {
  switch (id) {
    case SystemId::micro: return "micro";
    case SystemId::pico: return "pico";
    case SystemId::atto: return "atto";
    case SystemId::illumination: return "illumination";
  }
  return "?";
}

double lambertian_order(double semi_angle_deg) {
  if (semi_angle_deg <= 0.0 || semi_angle_deg >= 90.0)
    throw std::invalid_argument("semi-angle must be in (0, 90) degrees");
  return -std::numbers::ln2 / std::log(std::cos(semi_angle_deg * kDegToRad));
}

double lambertian_pattern(double order_n, double cos_phi) {
  if (cos_phi <= 0.0) return 0.0;
  return (order_n + 1.0) / (2.0 * std::numbers::pi) * std::pow(cos_phi, order_n);
}

double radiant_intensity(const LambertianSource& src, const Vec3& direction) {
  const double cos_phi = Vec3::dot(src.orientation, direction);
  return src.optical_power_w * lambertian_pattern(src.order_n, cos_phi);
}

std::vector<LambertianSource> SystemLayout::comm_sources() const {
  std::vector<LambertianSource> out;
  out.reserve(1 + pico.size() + atto.size());
  out.push_back(micro);
  out.insert(out.end(), pico.begin(), pico.end());
  out.insert(out.end(), atto.begin(), atto.end());
  return out;
}

std::vector<LambertianSource> SystemLayout::all_sources() const {
  std::vector<LambertianSource> out = comm_sources();
  out.insert(out.end(), illumination.begin(), illumination.end());
  return out;
}

namespace {

// 10 LDs per illumination fixture: a 2x5 down-facing array, long axis along
// x (a 1.2 m linear fitting). Offsets from the fixture centre, row-major.
std::vector<Vec3> illum_ld_offsets() {
  std::vector<Vec3> offs;
  for (double oy : {-0.1, 0.1})
    for (int i = -2; i <= 2; ++i) offs.push_back({0.3 * i, oy, 0.0});
  return offs;
}

}  // namespace

SystemLayout build_paper_layout(const LayoutConfig& config) {
  config.room.validate();
  const double w = config.room.width_x;
  const double l = config.room.length_y;
  const double h = config.room.height_z;
  const Vec3 down{0, 0, -1};

  SystemLayout layout;

  layout.micro = {{w / 2, l / 2, h},
                  down,
                  lambertian_order(kMicroSemiAngleDeg),
                  config.micro_power_w,
                  0.0,
                  SystemId::micro};

  const double n_pico = lambertian_order(kPicoSemiAngleDeg);
  const double n_atto = lambertian_order(kAttoSemiAngleDeg);
  for (double ux : {w / 4, 3 * w / 4}) {
    for (int k = 0; k < 4; ++k) {
      const Vec3 pos{ux, l * (2 * k + 1) / 8, h};
      AdtUnit unit;
      unit.position = pos;
      unit.branches[0] = {pos, down, n_pico, config.pico_power_w, 0.0, SystemId::pico};
      for (std::size_t b = 0; b < kAttoAzimuthsDeg.size(); ++b)
        unit.branches[b + 1] = {pos,
                                az_el_to_direction(kAttoAzimuthsDeg[b], kAdtSideElevationDeg),
                                n_atto,
                                config.atto_power_w,
                                0.0,
                                SystemId::atto};
      layout.adt_units.push_back(unit);
    }
  }
  for (const AdtUnit& unit : layout.adt_units) {
    layout.pico.push_back(unit.branches[0]);
    for (std::size_t b = 1; b < unit.branches.size(); ++b)
      layout.atto.push_back(unit.branches[b]);
  }

  const double n_illum = lambertian_order(kIllumSemiAngleDeg);
  const std::vector<Vec3> offsets = illum_ld_offsets();
  for (int k = 0; k < 4; ++k) {
    const Vec3 centre{w / 2, l * (2 * k + 1) / 8, h};
    for (const Vec3& off : offsets)
      layout.illumination.push_back({centre + off, down, n_illum, config.illum_power_w,
                                     config.illum_flux_lm, SystemId::illumination});
  }

  return layout;
}

}  // namespace owc
