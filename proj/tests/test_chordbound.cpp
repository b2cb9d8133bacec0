#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mchords/chordbound.hpp"
#include "mchords/errors.hpp"
#include "mchords/generators.hpp"
#include "oracles.hpp"

using namespace mchords;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

bool has_vertex(const ConvexBody& body, Vec2 v, double tol) {
  for (const Vec2& x : body.vertices()) {
    if (euclidean_norm(x - v) <= tol) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("intersection of translates: examples") {
  const ConvexBody box = intersect_translates(UnitDisk::square(), {0.0, 0.0}, {1.0, 0.0});
  CHECK(box.size() == 4);
  for (Vec2 c : {Vec2{0, -1}, Vec2{1, -1}, Vec2{1, 1}, Vec2{0, 1}}) CHECK(has_vertex(box, c, 1e-12));

  const ConvexBody unit = intersect_translates(UnitDisk::square(), {0.0, 0.0}, {1.0, 1.0});
  for (Vec2 c : {Vec2{0, 0}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}}) CHECK(has_vertex(unit, c, 1e-12));
  CHECK(perimeter(UnitDisk::square(), unit) == Approx(4.0));

  const ConvexBody lens = intersect_translates(UnitDisk::euclidean(), {0.0, 0.0}, {1.0, 0.0});
  CHECK(has_vertex(lens, {0.5, kSqrt3 / 2.0}, 1e-6));
  CHECK(has_vertex(lens, {0.5, -kSqrt3 / 2.0}, 1e-6));

  const ConvexBody rhombus = intersect_translates(UnitDisk::regular_hexagon(), {0.0, 0.0}, {1.0, 0.0});
  CHECK(perimeter(UnitDisk::regular_hexagon(), rhombus) == Approx(4.0).epsilon(1e-12));

  CHECK_THROWS_AS(intersect_translates(UnitDisk::square(), {0.0, 0.0}, {2.5, 0.0}), GeometryError);
  CHECK_THROWS_AS(intersect_translates(UnitDisk::square(), {0.0, 0.0}, {2.0, 0.0}), GeometryError);
}

TEST_CASE("perimeter examples") {
  const UnitDisk euclid = UnitDisk::euclidean(1 << 14);
  CHECK(perimeter(euclid, euclid.body()) == Approx(2.0 * kPi).epsilon(1e-7));
  CHECK(perimeter(UnitDisk::square(), UnitDisk::square().body()) == Approx(8.0));
  CHECK(perimeter(UnitDisk::regular_hexagon(), UnitDisk::regular_hexagon().body()) == Approx(6.0));
  // The square measured in the Euclidean norm.
  CHECK(perimeter(euclid, UnitDisk::square().body()) == Approx(8.0).epsilon(1e-7));
}

TEST_CASE("perimeter is monotone under inclusion") {
  Rng rng(41);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int trial = 0; trial < 30; ++trial) {
    const UnitDisk disk = random_disk(rng, 512);
    const ConvexBody inner = random_convex_body(rng, true);
    std::vector<Vec2> pts(inner.vertices().begin(), inner.vertices().end());
    for (int i = 0; i < 4; ++i) pts.push_back(inner.interior_point() + Vec2{u(rng), u(rng)} * (2.0 * inner.diameter()));
    const ConvexBody outer = ConvexBody::hull_of(pts, true);
    CHECK(perimeter(disk, inner) <= perimeter(disk, outer) + 1e-12);
  }
}

TEST_CASE("L_M examples") {
  CHECK(lm(UnitDisk::euclidean(), 0.0) == Approx(2.0 * kPi / 3.0).epsilon(1e-6));
  CHECK(lm(UnitDisk::euclidean(), 1.234) == Approx(2.0 * kPi / 3.0).epsilon(1e-6));
  CHECK(lm(UnitDisk::square(), 0.0) == Approx(3.0).epsilon(1e-12));
  CHECK(lm(UnitDisk::square(), kPi / 4.0) == Approx(2.0).epsilon(1e-12));
  CHECK(lm(UnitDisk::regular_hexagon(), 0.0) == Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(lm(UnitDisk::square(), NAN), ArgumentError);
}

TEST_CASE("L_M in the max norm matches the rectangle formula") {
  for (int i = 0; i < 90; ++i) {
    const double dir = 2.0 * kPi * i / 90.0 + 0.01;
    CHECK(lm(UnitDisk::square(), dir) == Approx(oracle::lm_square(dir)).epsilon(1e-12));
  }
}

TEST_CASE("sweep examples") {
  const LmProfile hex = lm_sweep(UnitDisk::regular_hexagon(), 180);
  CHECK(hex.min == Approx(2.0).epsilon(1e-12));
  CHECK(hex.max == Approx(2.0).epsilon(1e-12));

  const LmProfile square = lm_sweep(UnitDisk::square(), 360);
  CHECK(square.min == Approx(2.0).epsilon(1e-12));
  CHECK(square.max == Approx(3.0).epsilon(1e-12));
  CHECK(std::remainder(square.argmin - kPi / 4.0, kPi / 2.0) == Approx(0.0).epsilon(1e-12));
  CHECK(std::remainder(square.argmax, kPi / 2.0) == Approx(0.0).epsilon(1e-12));
  for (double d : square.directions) CHECK((d >= 0.0 && d < kPi));

  CHECK_THROWS_AS(lm_sweep(UnitDisk::square(), 3), ArgumentError);
}

TEST_CASE("inscribed hexagons and Reuleaux triangles") {
  const UnitDisk euclid = UnitDisk::euclidean(1 << 14);
  const Hexagon round = inscribed_hexagon(euclid, {1.0, 0.0});
  CHECK(round.unique);
  CHECK(euclidean_norm(round.vertices[1] - Vec2{0.5, kSqrt3 / 2.0}) <= 1e-6);
  for (double arc : hexagon_arcs(euclid, round)) CHECK(arc == Approx(kPi / 3.0).epsilon(1e-6));
  CHECK(reuleaux(euclid, round).perimeter == Approx(kPi).epsilon(1e-6));

  const Hexagon box = inscribed_hexagon(UnitDisk::square(), {1.0, 0.0});
  CHECK_FALSE(box.unique);
  CHECK(euclidean_norm(box.vertices[1] - Vec2{1.0, 1.0}) <= 1e-9);
  const std::array<double, 6> arcs = hexagon_arcs(UnitDisk::square(), box);
  const std::array<double, 6> expected{1.0, 1.0, 2.0, 1.0, 1.0, 2.0};
  for (std::size_t i = 0; i < 6; ++i) CHECK(arcs[i] == Approx(expected[i]).epsilon(1e-9));
  CHECK(reuleaux(UnitDisk::square(), box).perimeter == Approx(4.0).epsilon(1e-9));

  const UnitDisk hexagon = UnitDisk::regular_hexagon();
  CHECK(reuleaux(hexagon, inscribed_hexagon(hexagon, {1.0, 0.0})).perimeter == Approx(3.0).epsilon(1e-9));

  Hexagon broken = round;
  broken.vertices[2] = broken.vertices[2] * 1.01;
  CHECK_THROWS_AS(validate_hexagon(euclid, broken), ArgumentError);
}

TEST_CASE("hexagon invariants on random disks") {
  Rng rng(42);
  std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 25; ++trial) {
    const UnitDisk disk = random_disk(rng, 1024);
    const Hexagon hex = inscribed_hexagon(disk, disk.unit_vector(u(rng)));
    CHECK_NOTHROW(validate_hexagon(disk, hex));
    const std::array<double, 6> arcs = hexagon_arcs(disk, hex);
    double total = 0.0;
    for (double a : arcs) total += a;
    const double perim = perimeter(disk, disk.body());
    CHECK(total == Approx(perim).epsilon(1e-9));
    // Central symmetry pairs opposite arcs.
    for (std::size_t i = 0; i < 3; ++i) CHECK(arcs[i] == Approx(arcs[i + 3]).epsilon(1e-9));
    // Each arc is at least its chord, which has length 1.
    for (double a : arcs) CHECK(a >= 1.0 - 1e-9);
    CHECK(reuleaux(disk, hex).perimeter == Approx(perim / 2.0).epsilon(1e-6));
  }
}

TEST_CASE("bound certificates") {
  Rng rng(43);
  std::vector<UnitDisk> disks{UnitDisk::euclidean(), UnitDisk::square(), UnitDisk::regular_hexagon(), UnitDisk::lp(4.0)};
  for (int i = 0; i < 10; ++i) disks.push_back(random_disk(rng, 1024));
  for (const UnitDisk& disk : disks) {
    CAPTURE(disk.describe());
    for (int j = 0; j < 12; ++j) {
      const double dir = 2.0 * kPi * j / 12.0 + 0.05;
      const LowerBoundCertificate low = lower_bound_certificate(disk, dir);
      CHECK(low.quad_perimeter == Approx(4.0).epsilon(1e-8));
      CHECK(low.quad_inside);
      const UpperBoundCertificate up = upper_bound_certificate(disk, dir);
      CHECK(up.contains_intersection);
      CHECK(up.gauge_plus <= 1.0 + 1e-8);
      CHECK(up.gauge_minus <= 1.0 + 1e-8);
      CHECK(up.parallelogram_perimeter <= 6.0 + 1e-8);
      const double value = lm(disk, dir, false);
      CHECK(value >= low.quad_perimeter / 2.0 - 1e-8);
      CHECK(value <= up.parallelogram_perimeter / 2.0 + 1e-8);
    }
  }
}

TEST_CASE("disk family") {
  const std::vector<double> angles = family_angles(4);
  REQUIRE(angles.size() == 4);
  CHECK(angles[1] == Approx(kPi / 4.0));

  // A dent at 45 degrees is pushed out to the hull.
  DiskFamilyParams dented{4, {1.0, 0.2, 1.0, 1.0}};
  DiskFamilyParams repaired;
  const UnitDisk disk = family_disk(dented, &repaired);
  CHECK(repaired.radii[1] == Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(repaired.radii[0] == Approx(1.0));
  CHECK(disk.gauge({1.0, 0.0}) == Approx(1.0));

  CHECK_THROWS_AS(family_disk({4, {1.0, -1.0, 1.0, 1.0}}), ArgumentError);
  CHECK_THROWS_AS(family_disk({4, {1.0, 1.0}}), ArgumentError);
}

TEST_CASE("maxmin search") {
  // The regular 128-gon is close to the circle.
  const MaxMinResult start = maxmin_search(64, 0, 1, 180);
  CHECK(start.objective == Approx(2.0 * kPi / 3.0).epsilon(2e-3));
  CHECK(start.params.radii.size() == 64);

  const MaxMinResult a = maxmin_search(6, 40, 7, 90);
  const MaxMinResult b = maxmin_search(6, 40, 7, 90);
  CHECK(a.objective == b.objective);
  CHECK(a.params.radii == b.params.radii);
  CHECK(a.evaluations <= 41);
  CHECK(a.objective >= maxmin_search(6, 0, 7, 90).objective);
  CHECK(a.objective >= 2.0 - 1e-9);
  CHECK(a.objective <= 3.0 + 1e-9);

  CHECK_THROWS_AS(maxmin_search(2, 10, 1), ArgumentError);
}
