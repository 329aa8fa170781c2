#pragma once

#include <array>
#include <string>
#include <vector>

#include "owc/room.hpp"
#include "owc/vec3.hpp"

namespace owc {

enum class SystemId { micro, pico, atto, illumination };

const char* to_string(SystemId id);

/// A point Lambertian emitter: a transmitter branch, an illumination LD,
/// or (with order_n = 1) a reflecting surface element acting as re-emitter.
struct LambertianSource {
  Vec3 position;
  Vec3 orientation;  // unit
  double order_n = 1.0;
  double optical_power_w = 0.0;
  double luminous_flux_lm = 0.0;
  SystemId system_id = SystemId::micro;
};

/// Lambertian mode order n = -ln 2 / ln(cos semi_angle): the order whose
/// radiant intensity halves at the half-power semi-angle.
/// Throws std::invalid_argument unless 0 < semi_angle_deg < 90.
double lambertian_order(double semi_angle_deg);

/// Angular pattern factor (n+1)/(2*pi) * cos_phi^n, zero for cos_phi <= 0.
double lambertian_pattern(double order_n, double cos_phi);

/// Radiant intensity [W/sr] of the source toward a unit direction.
double radiant_intensity(const LambertianSource& src, const Vec3& direction);

/// One ceiling-mounted angle-diversity transmitter: a down-facing branch
/// (the Pico cell) plus four tilted side branches (the Atto cells).
struct AdtUnit {
  Vec3 position;
  std::array<LambertianSource, 5> branches;  // [0] down, [1..4] sides
};

/// Every optical source in the scenario, in a fixed deterministic order.
struct SystemLayout {
  LambertianSource micro;
  std::vector<LambertianSource> pico;          // 8 down branches
  std::vector<LambertianSource> atto;          // 32 side branches
  std::vector<LambertianSource> illumination;  // 4 units x 10 LDs
  std::vector<AdtUnit> adt_units;

  std::vector<LambertianSource> all_sources() const;   // micro, pico, atto, illumination
  std::vector<LambertianSource> comm_sources() const;  // micro, pico, atto
};

struct LayoutConfig {
  Room room;
  double micro_power_w = 1.0;
  double pico_power_w = 1.0;
  double atto_power_w = 1.0;
  double illum_power_w = 0.0;
  double illum_flux_lm = 1.0;  // per LD
};

inline constexpr double kMicroSemiAngleDeg = 65.0;
inline constexpr double kPicoSemiAngleDeg = 40.0;
inline constexpr double kAttoSemiAngleDeg = 21.0;
inline constexpr double kIllumSemiAngleDeg = 70.0;
inline constexpr double kAdtSideElevationDeg = -70.0;
inline constexpr std::array<double, 4> kAttoAzimuthsDeg{45.0, 135.0, 225.0, 315.0};

/// Build the full transmitter layout: one central IR source, eight ADT units
/// on a 2x4 ceiling lattice, and four 10-LD illumination fixtures on the
/// centre line. Positions scale with the room; for the default 4x8x3 room
/// they are the 2x4 lattice at x in {1,3}, y in {1,3,5,7} and fixtures at
/// (2, {1,3,5,7}, 3).
SystemLayout build_paper_layout(const LayoutConfig& config);

}  // namespace owc
