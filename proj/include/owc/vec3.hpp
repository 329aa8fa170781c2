#pragma once

#include <cmath>

namespace owc {

struct Vec3 {
  double x{0}, y{0}, z{0};

  Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }

  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

  bool operator==(const Vec3&) const = default;

  static constexpr double dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
  }

  static constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  }

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  Vec3 normalized() const {
    const double n = norm();
    if (n == 0.0) return *this;
    return *this / n;
  }
};

inline constexpr double kDegToRad = 0.017453292519943295;

/// Unit direction from azimuth/elevation in degrees.
/// Azimuth counterclockwise from +x in the horizontal plane; elevation from
/// the horizontal, +90 straight up, -90 straight down. Azimuth wraps mod 360.
Vec3 az_el_to_direction(double az_deg, double el_deg);

}  // namespace owc
