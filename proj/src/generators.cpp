#include "mchords/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mchords/chordbound.hpp"

namespace mchords {

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::size_t uniform_int(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 e = b - a;
  const double t = std::clamp(dot(p - a, e) / dot(e, e), 0.0, 1.0);
  return euclidean_norm(p - (a + t * e));
}

// Index of `c` in the closed boundary `pts`, inserting it on the nearest edge
// when it is not already a vertex.
std::size_t ensure_vertex(std::vector<Vec2>& pts, Vec2 c) {
  std::size_t best = 0;
  double best_d = INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = segment_distance(c, pts[i], pts[(i + 1) % pts.size()]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  const std::size_t next = (best + 1) % pts.size();
  if (euclidean_norm(pts[best] - c) <= 1e-12) return best;
  if (euclidean_norm(pts[next] - c) <= 1e-12) return next;
  pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(best + 1), c);
  return best + 1;
}

}  // namespace

Mat2 random_linear_map(Rng& rng, double min_stretch) {
  const Mat2 r1 = Mat2::rotation(uniform(rng, 0.0, kPi));
  const Mat2 r2 = Mat2::rotation(uniform(rng, 0.0, kPi));
  const double s = uniform(rng, min_stretch, 1.0);
  const Mat2 a{r1.a, r1.b * s, r1.c, r1.d * s};  // r1 * diag(1, s)
  return {a.a * r2.a + a.b * r2.c, a.a * r2.b + a.b * r2.d, a.c * r2.a + a.d * r2.c, a.c * r2.b + a.d * r2.d};
}

UnitDisk random_disk(Rng& rng, std::size_t resolution) {
  if (uniform(rng, 0.0, 1.0) < 0.5) {
    const std::size_t m = uniform_int(rng, 2, 8);
    std::vector<double> angles(m);
    for (double& a : angles) a = uniform(rng, 0.0, kPi);
    std::sort(angles.begin(), angles.end());
    std::vector<Vec2> pts;
    for (double a : angles) pts.push_back(uniform(rng, 0.5, 1.5) * direction(a));
    for (std::size_t i = 0; i < m; ++i) pts.push_back(-pts[i]);
    const std::vector<Vec2> hull = convex_hull(pts);
    if (hull.size() >= 4) return UnitDisk::polygon(hull);
  }
  return UnitDisk::lp(uniform(rng, 1.2, 6.0), resolution).linear_image(random_linear_map(rng, 0.3));
}

ConvexBody random_convex_body(Rng& rng, bool exact_polygon) {
  if (exact_polygon) {
    for (;;) {
      const std::size_t count = uniform_int(rng, 6, 14);
      std::vector<Vec2> pts(count);
      for (Vec2& p : pts) p = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
      const std::vector<Vec2> hull = convex_hull(pts);
      if (hull.size() >= 3) return ConvexBody::from_vertices(hull, true);
    }
  }
  const double a = uniform(rng, 0.5, 1.5);
  const double b = uniform(rng, 0.5, 1.5);
  const Mat2 rot = Mat2::rotation(uniform(rng, 0.0, kPi));
  const Vec2 center{uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5)};
  constexpr std::size_t kSamples = 720;
  std::vector<Vec2> pts(kSamples);
  for (std::size_t i = 0; i < kSamples; ++i) {
    const double t = 2.0 * kPi * static_cast<double>(i) / kSamples;
    pts[i] = center + rot * Vec2{a * std::cos(t), b * std::sin(t)};
  }
  return ConvexBody::from_vertices(pts, false);
}

Polyline random_x_monotone_curve(Rng& rng, std::size_t edges, double max_slope) {
  Polyline curve;
  curve.points.push_back({0.0, 0.0});
  for (std::size_t i = 0; i < edges; ++i) {
    const double dx = uniform(rng, 0.2, 1.0);
    const double dy = dx * uniform(rng, -max_slope, max_slope);
    curve.points.push_back(curve.points.back() + Vec2{dx, dy});
  }
  return curve;
}

Polyline reuleaux_two_sides(const UnitDisk& disk, double direction) {
  const Hexagon hex = inscribed_hexagon(disk, disk.unit_vector(direction));
  const Vec2 u = hex.vertices[0];
  const Vec2 w = hex.vertices[1];
  const ReuleauxTriangle tri = reuleaux(disk, hex);
  std::vector<Vec2> pts(tri.body.vertices().begin(), tri.body.vertices().end());
  ensure_vertex(pts, u);
  ensure_vertex(pts, w);
  ensure_vertex(pts, Vec2{});
  const auto index_of = [&](Vec2 c) {
    return static_cast<std::size_t>(std::min_element(pts.begin(), pts.end(), [&](Vec2 a, Vec2 b) {
                                      return euclidean_norm(a - c) < euclidean_norm(b - c);
                                    }) -
                                    pts.begin());
  };
  const std::size_t iu = index_of(u);
  const std::size_t iw = index_of(w);
  const std::size_t io = index_of(Vec2{});
  Polyline curve;
  bool passed_w = false;
  for (std::size_t i = iu;; i = (i + 1) % pts.size()) {
    curve.points.push_back(pts[i]);
    passed_w = passed_w || i == iw;
    if (i == io) break;
  }
  if (!passed_w) throw std::logic_error("Reuleaux corners are not in CCW order u, w, 0");
  curve.points.front() = u;
  curve.points.back() = Vec2{};
  return curve;
}

}  // namespace mchords
