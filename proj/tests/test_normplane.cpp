#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mchords/errors.hpp"
#include "mchords/generators.hpp"
#include "mchords/normplane.hpp"
#include "oracles.hpp"

using namespace mchords;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

bool near(Vec2 a, Vec2 b, double tol) { return euclidean_norm(a - b) <= tol; }

std::vector<UnitDisk> builtin_disks() {
  return {UnitDisk::euclidean(), UnitDisk::square(), UnitDisk::regular_hexagon(), UnitDisk::lp(4.0)};
}

}  // namespace

TEST_CASE("gauge examples") {
  CHECK(UnitDisk::square().gauge({3.0, 1.0}) == Approx(3.0).epsilon(1e-15));
  // A 4096-gon inscribed in the circle overestimates by at most 1/cos(pi/4096) - 1.
  CHECK(UnitDisk::euclidean().gauge({3.0, 4.0}) == Approx(5.0).epsilon(3e-7));
  CHECK(UnitDisk::euclidean(1 << 16).gauge({3.0, 4.0}) == Approx(5.0).epsilon(1e-9));
  CHECK(UnitDisk::regular_hexagon().gauge({0.0, 1.0}) == Approx(2.0 / kSqrt3).epsilon(1e-14));
  CHECK(UnitDisk::square().gauge({0.0, 0.0}) == 0.0);
}

TEST_CASE("gauge agrees with the ray-bisection oracle") {
  Rng rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const UnitDisk disk = random_disk(rng, 1024);
    for (int i = 0; i < 50; ++i) {
      const Vec2 v{u(rng), u(rng)};
      CHECK(disk.gauge(v) == Approx(oracle::gauge(disk.vertices(), v)).epsilon(1e-9));
    }
  }
}

TEST_CASE("lp gauge matches the closed form within polygonization error") {
  const UnitDisk disk = UnitDisk::lp(4.0, 1 << 14);
  for (int i = 0; i < 64; ++i) {
    const Vec2 v = direction(0.1 + 2.0 * kPi * i / 64.0) * 2.5;
    CHECK(disk.gauge(v) == Approx(oracle::lp_norm(v, 4.0)).epsilon(1e-6));
  }
}

TEST_CASE("unit_vector examples") {
  CHECK(near(UnitDisk::euclidean().unit_vector(kPi / 2.0), {0.0, 1.0}, 1e-6));
  CHECK(near(UnitDisk::square().unit_vector(kPi / 4.0), {1.0, 1.0}, 1e-12));
  CHECK(near(UnitDisk::regular_hexagon().unit_vector(kPi / 2.0), {0.0, kSqrt3 / 2.0}, 1e-12));
}

TEST_CASE("support examples") {
  const SupportLine circle = support(UnitDisk::euclidean(), {0.0, 1.0});
  CHECK(near(circle.point, {0.0, 1.0}, 1e-12));
  CHECK(near(circle.direction, {-1.0, 0.0}, 1e-12));  // CCW orientation at the top of the circle

  const SupportLine side = support(UnitDisk::square(), {1.0, 0.0});
  CHECK(side.contact == ContactKind::segment);
  CHECK(near(side.segment_start, {1.0, -1.0}, 0.0));
  CHECK(near(side.segment_end, {1.0, 1.0}, 0.0));

  const SupportLine corner = support(UnitDisk::square(), {1.0, 1.0});
  CHECK(corner.contact == ContactKind::point);
  CHECK(near(corner.point, {1.0, 1.0}, 0.0));

  CHECK_THROWS_AS(support(UnitDisk::square(), {0.0, 0.0}), ArgumentError);
}

TEST_CASE("Birkhoff orthogonality examples") {
  const UnitDisk euclid = UnitDisk::euclidean();
  CHECK(is_birkhoff_orthogonal(euclid, {1.0, 0.0}, {0.0, 1.0}));
  CHECK_FALSE(is_birkhoff_orthogonal(euclid, {1.0, 0.0}, {1.0, 1.0}));
  CHECK(is_birkhoff_orthogonal(UnitDisk::square(), {1.0, 1.0}, {1.0, 0.0}));
  CHECK_THROWS_AS(is_birkhoff_orthogonal(euclid, {0.0, 0.0}, {1.0, 0.0}), ArgumentError);
  CHECK_THROWS_AS(is_birkhoff_orthogonal(euclid, {1.0, 0.0}, {0.0, 0.0}), ArgumentError);
}

TEST_CASE("Birkhoff cone at a vertex of the square") {
  const BirkhoffDirection bd = birkhoff_direction(UnitDisk::square(), direction(kPi / 4.0));
  CHECK_FALSE(bd.unique);
  // CCW, the corner (1, 1) is entered along (0, 1) and left along (-1, 0).
  CHECK(near(bd.cone_start, {0.0, 1.0}, 1e-12));
  CHECK(near(bd.cone_end, {-1.0, 0.0}, 1e-12));
  for (double t = 0.0; t <= 1.0; t += 0.125) {
    const Vec2 u = bd.cone_start * (1.0 - t) + bd.cone_end * t;
    CHECK(is_birkhoff_orthogonal(UnitDisk::square(), {1.0, 1.0}, u));
  }
  CHECK_FALSE(is_birkhoff_orthogonal(UnitDisk::square(), {1.0, 1.0}, {1.0, 1.0}));
}

TEST_CASE("boundary_arclength examples") {
  const UnitDisk euclid = UnitDisk::euclidean(1 << 14);
  CHECK(boundary_arclength(euclid, euclid.body(), {1.0, 0.0}, {0.0, 1.0}) == Approx(kPi / 2.0).epsilon(1e-7));
  const UnitDisk hex = UnitDisk::regular_hexagon();
  CHECK(boundary_arclength(hex, hex.body(), {1.0, 0.0}, {0.5, kSqrt3 / 2.0}) == Approx(1.0).epsilon(1e-14));
  const UnitDisk square = UnitDisk::square();
  const ConvexBody box = square.body();
  CHECK(boundary_arclength(square, box, {1.0, 1.0}, {-1.0, 1.0}) == Approx(2.0));
  CHECK(boundary_arclength(square, box, {-1.0, 1.0}, {1.0, 1.0}) == Approx(6.0));
  CHECK_THROWS_AS(boundary_arclength(square, box, {0.5, 0.5}, {1.0, 1.0}), GeometryError);
}

TEST_CASE("representation flags and validation") {
  CHECK(UnitDisk::square().flags().polygonal);
  CHECK_FALSE(UnitDisk::square().flags().strictly_convex);
  CHECK(UnitDisk::lp(3.0).flags().strictly_convex);
  CHECK(UnitDisk::lp(3.0).flags().smooth);
  CHECK(UnitDisk::lp(1.0).flags().polygonal);
  CHECK(UnitDisk::lp(1.0).gauge({0.3, -0.4}) == Approx(0.7));
  CHECK_THROWS_AS(UnitDisk::lp(0.5), RepresentationError);
  // Not symmetric.
  CHECK_THROWS_AS(UnitDisk::polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -2}}), RepresentationError);
  // Not convex.
  CHECK_THROWS_AS(UnitDisk::polygon({{1, 0}, {0.1, 0.1}, {0, 1}, {-1, 0}, {-0.1, -0.1}, {0, -1}}), RepresentationError);
}

TEST_CASE("triangle inequality, symmetry and unit vectors on the built-in disks") {
  Rng rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (const UnitDisk& disk : builtin_disks()) {
    CAPTURE(disk.describe());
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
      worst = std::max(worst, disk.gauge(a + b) - disk.gauge(a) - disk.gauge(b));
      REQUIRE(disk.gauge(a) == disk.gauge(-a));
    }
    CHECK(worst <= 1e-9);
    for (int i = 0; i < 360; ++i) CHECK(disk.gauge(disk.unit_vector(2.0 * kPi * i / 360.0)) == Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("Birkhoff verdicts agree with direct sampling over t") {
  Rng rng(12);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const UnitDisk& disk : builtin_disks()) {
    CAPTURE(disk.describe());
    int agree = 0, total = 0;
    for (int i = 0; i < 1000; ++i) {
      const Vec2 v{u(rng), u(rng)};
      const Vec2 w = i % 2 == 0 ? birkhoff_direction(disk, v).direction : Vec2{u(rng), u(rng)};
      if (disk.gauge(v) < 1e-3 || disk.gauge(w) < 1e-3) continue;
      double sampled = disk.gauge(v);
      for (int k = 0; k <= 10000; ++k) sampled = std::min(sampled, disk.gauge(v + (-10.0 + 2e-3 * k) * w));
      const double deficit = disk.gauge(v) - sampled;
      const bool verdict = is_birkhoff_orthogonal(disk, v, w);
      ++total;
      // The t-grid can miss a dip shallower than its spacing allows.
      if (verdict == (deficit <= 1e-9) || (!verdict && deficit <= disk.gauge(w) * 2e-3)) ++agree;
      if (i % 2 == 0) CHECK(verdict);
    }
    CHECK(agree == total);
  }
}

TEST_CASE("strictly convex disks have a unique Birkhoff direction class") {
  const UnitDisk disk = UnitDisk::lp(3.0);
  for (int i = 0; i < 12; ++i) {
    const Vec2 v = direction(0.3 + i * kPi / 6.0);
    const BirkhoffDirection bd = birkhoff_direction(disk, v);
    CHECK(bd.unique);
    CHECK(is_birkhoff_orthogonal(disk, v, bd.direction));
    CHECK(is_birkhoff_orthogonal(disk, v, -bd.direction));
    for (double tilt : {-0.05, -0.01, 0.01, 0.05}) {
      CHECK_FALSE(is_birkhoff_orthogonal(disk, v, Mat2::rotation(tilt) * bd.direction));
    }
  }
}

TEST_CASE("linear images transform the gauge") {
  const Mat2 m{2.0, 0.5, -0.3, 1.2};
  const UnitDisk disk = UnitDisk::regular_hexagon();
  const UnitDisk image = disk.linear_image(m);
  for (int i = 0; i < 20; ++i) {
    const Vec2 v = direction(0.17 * i) * (0.5 + 0.1 * i);
    CHECK(image.gauge(m * v) == Approx(disk.gauge(v)).epsilon(1e-12));
  }
}

TEST_CASE("radial disks interpolate boundary points linearly") {
  std::vector<double> angles, radii;
  for (int i = 0; i < 8; ++i) {
    angles.push_back(i * kPi / 4.0);
    radii.push_back(i % 2 == 0 ? 1.0 : std::sqrt(2.0));
  }
  const UnitDisk disk = UnitDisk::radial(angles, radii);
  // Samples of the square's corners and edge midpoints: the square itself.
  CHECK(disk.gauge({0.7, 0.3}) == Approx(0.7));
  CHECK(disk.gauge({-0.2, 0.9}) == Approx(0.9));
}
