#pragma once

// Reference implementations used only by the tests. Each one takes a route
// that shares no code with the library: point-in-polygon bisection instead
// of dual vectors, closed forms, brute force over all quadruples.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "mchords/geometry.hpp"

namespace oracle {

using mchords::Vec2;

inline constexpr double kPi = std::numbers::pi;

// True when x is inside the CCW convex polygon (half-plane tests).
inline bool inside(std::span<const Vec2> ccw, Vec2 x, double tol = 0.0) {
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const Vec2 a = ccw[i];
    const Vec2 b = ccw[(i + 1) % ccw.size()];
    const Vec2 e = b - a;
    const Vec2 w = x - a;
    if (e.x * w.y - e.y * w.x < -tol * std::hypot(e.x, e.y)) return false;
  }
  return true;
}

// Minkowski functional of a CCW polygon containing the origin, by bisection
// on the ray through v.
inline double gauge(std::span<const Vec2> ccw, Vec2 v) {
  const double len = std::hypot(v.x, v.y);
  if (len == 0.0) return 0.0;
  const Vec2 dir{v.x / len, v.y / len};
  double lo = 0.0, hi = 1.0;
  while (inside(ccw, Vec2{dir.x * hi, dir.y * hi})) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (inside(ccw, Vec2{dir.x * mid, dir.y * mid}) ? lo : hi) = mid;
  }
  return len / (0.5 * (lo + hi));
}

inline double lp_norm(Vec2 v, double p) {
  if (std::isinf(p)) return std::max(std::abs(v.x), std::abs(v.y));
  return std::pow(std::pow(std::abs(v.x), p) + std::pow(std::abs(v.y), p), 1.0 / p);
}

// Involute of the unit circle from (0, -1).
inline Vec2 circle_involute(double theta) {
  return {std::sin(theta) - theta * std::cos(theta), -std::cos(theta) - theta * std::sin(theta)};
}

// L_M in the max norm: X is an axis-parallel rectangle of width 1 and height
// 2 - t for q = (1, t), |t| <= 1, so half its perimeter is 3 - t.
inline double lm_square(double direction) {
  const double c = std::abs(std::cos(direction));
  const double s = std::abs(std::sin(direction));
  return 3.0 - std::min(c, s) / std::max(c, s);
}

// Brute force over all index quadruples a <= b <= c <= d of the samples.
template <class Norm>
double chord_violation(std::span<const Vec2> f, Norm norm) {
  const std::size_t n = f.size();
  std::vector<double> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = norm(f[j] - f[i]);
  }
  // lo[b][c] = min over a <= b, d >= c of dist(a, d), filled by recurrence.
  std::vector<double> lo(n * n, INFINITY);
  double worst = 0.0;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t c = n; c-- > b;) {
      double m = dist[b * n + c];
      if (b > 0) m = std::min(m, lo[(b - 1) * n + c]);
      if (c + 1 < n) m = std::min(m, lo[b * n + c + 1]);
      lo[b * n + c] = m;
      worst = std::max(worst, dist[b * n + c] - m);
    }
  }
  return worst;
}

// Vertex k of the hypercube curve: the reflected binary Gray code of k.
inline std::vector<double> gray_vertex(std::uint64_t k, std::size_t d) {
  const std::uint64_t g = k ^ (k >> 1);
  std::vector<double> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<double>((g >> i) & 1U);
  return v;
}

// Proper crossing of segments ab and cd (shared endpoints do not count).
inline bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  auto orient = [](Vec2 p, Vec2 q, Vec2 r) {
    const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return (v > 0.0) - (v < 0.0);
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

}  // namespace oracle
