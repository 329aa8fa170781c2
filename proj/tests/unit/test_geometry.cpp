#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "owc/room.hpp"
#include "owc/vec3.hpp"

using namespace owc;

TEST_CASE("az_el_to_direction cardinal directions") {
  const Vec3 down = az_el_to_direction(0, -90);
  CHECK(down.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(down.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(down.z == doctest::Approx(-1.0).epsilon(1e-12));
  // straight down regardless of azimuth
  const Vec3 down2 = az_el_to_direction(123.4, -90);
  CHECK((down2 - down).norm() < 1e-12);

  const Vec3 px = az_el_to_direction(0, 0);
  CHECK(px.x == doctest::Approx(1.0));
  CHECK(px.y == doctest::Approx(0.0));
  CHECK(px.z == doctest::Approx(0.0));
}

TEST_CASE("az_el_to_direction matches direct trigonometric evaluation") {
  const Vec3 v = az_el_to_direction(45, -70);
  CHECK(v.x == doctest::Approx(0.24184476264797526).epsilon(1e-14));
  CHECK(v.y == doctest::Approx(0.24184476264797526).epsilon(1e-14));
  CHECK(v.z == doctest::Approx(-0.93969262078590838).epsilon(1e-14));
}

TEST_CASE("az_el_to_direction wraps azimuth") {
  const Vec3 a = az_el_to_direction(370, 10);
  const Vec3 b = az_el_to_direction(10, 10);
  CHECK((a - b).norm() < 1e-12);
  const Vec3 c = az_el_to_direction(-90, 0);
  CHECK(c.y == doctest::Approx(-1.0));
}

TEST_CASE("az_el_to_direction returns unit vectors everywhere") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> az(0.0, 360.0), el(-90.0, 90.0);
  for (int i = 0; i < 10000; ++i) {
    const Vec3 v = az_el_to_direction(az(rng), el(rng));
    CHECK(std::abs(v.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("discretize_room counts and area conservation") {
  Room unit_room{1, 1, 1, 0.8, 0.8, 0.3, 0.0};
  const auto elems = discretize_room(unit_room, 0.5);
  CHECK(elems.size() == 24);  // 4 per face
  double total = 0.0;
  for (const auto& e : elems) total += e.area;
  CHECK(total == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("discretize_room paper room element counts") {
  Room room;
  const auto fine = discretize_room(room, 0.05);
  std::size_t ceiling = 0;
  for (const auto& e : fine)
    if (e.normal.z == -1.0) ++ceiling;
  CHECK(ceiling == 12800);  // (4/0.05) x (8/0.05)

  const auto coarse = discretize_room(room, 0.20);
  ceiling = 0;
  for (const auto& e : coarse)
    if (e.normal.z == -1.0) ++ceiling;
  CHECK(ceiling == 800);  // 20 x 40
}

TEST_CASE("discretize_room assigns face reflectivities and inward normals") {
  Room room;
  const auto elems = discretize_room(room, 0.5);
  const Vec3 centre = room.centre();
  double floor_area = 0, ceiling_area = 0, wall_area = 0;
  for (const auto& e : elems) {
    CHECK(Vec3::dot(e.normal, centre - e.centre) > 0.0);
    CHECK(e.emission_order == 1.0);
    if (e.normal.z == 1.0) {
      CHECK(e.reflectivity == 0.3);
      floor_area += e.area;
    } else if (e.normal.z == -1.0) {
      CHECK(e.reflectivity == 0.8);
      ceiling_area += e.area;
    } else {
      CHECK(e.reflectivity == 0.8);
      wall_area += e.area;
    }
  }
  CHECK(floor_area == doctest::Approx(32.0).epsilon(1e-9));
  CHECK(ceiling_area == doctest::Approx(32.0).epsilon(1e-9));
  CHECK(wall_area == doctest::Approx(2 * (4 * 3) + 2 * (8 * 3)).epsilon(1e-9));
}

TEST_CASE("discretize_room partial tiling conserves area") {
  Room r{1, 1, 1, 0.5, 0.5, 0.5, 0.0};
  const auto elems = discretize_room(r, 0.3);  // 3 full + 0.1 partial per axis
  double total = 0.0;
  for (const auto& e : elems) total += e.area;
  CHECK(total == doctest::Approx(6.0).epsilon(1e-9));
  // 4 cells per axis -> 16 per face
  CHECK(elems.size() == 96);
}

TEST_CASE("discretize_room rejects bad element sizes") {
  Room room;
  CHECK_THROWS_AS(discretize_room(room, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(discretize_room(room, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(discretize_room(room, 3.5), std::invalid_argument);  // > height
}

TEST_CASE("cf_grid lattice counts and placement") {
  Room room;
  const auto pts = cf_grid(room, 0.25);
  CHECK(pts.size() == 512);  // 16 x 32
  CHECK(pts.front().x == doctest::Approx(0.125));
  CHECK(pts.front().y == doctest::Approx(0.125));
  for (const auto& p : pts) {
    CHECK(p.z == room.comm_floor_z);
    CHECK(p.x > 0.0);
    CHECK(p.x < room.width_x);
    CHECK(p.y > 0.0);
    CHECK(p.y < room.length_y);
  }
  // row-major: x varies fastest
  CHECK(pts[1].x == doctest::Approx(0.375));
  CHECK(pts[1].y == doctest::Approx(0.125));

  const auto coarse = cf_grid(room, 2.0);
  CHECK(coarse.size() == 8);
  CHECK(coarse.front().x == doctest::Approx(1.0));
  CHECK(coarse.front().y == doctest::Approx(1.0));

  Room tiny{1, 1, 1, 0.5, 0.5, 0.5, 0.3};
  const auto single = cf_grid(tiny, 1.0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].x == doctest::Approx(0.5));
  CHECK(single[0].y == doctest::Approx(0.5));
  CHECK(single[0].z == doctest::Approx(0.3));
}

TEST_CASE("cf_grid rejects bad steps") {
  Room room;
  CHECK_THROWS_AS(cf_grid(room, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(cf_grid(room, 4.5), std::invalid_argument);  // > width
}

TEST_CASE("room validation") {
  Room bad;
  bad.reflectivity_floor = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = Room{};
  bad.comm_floor_z = 3.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = Room{};
  bad.width_x = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
