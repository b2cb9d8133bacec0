#pragma once

// Plane primitives shared by every module: vectors, 2x2 linear maps and
// convex polygons (the canonical form of both unit disks and bodies).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace mchords {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
// Counter-clockwise quarter turn.
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

inline double euclidean_norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }
inline Vec2 direction(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }
inline Vec2 normalized(Vec2 v) { return v / euclidean_norm(v); }

// Maps an angle to [0, 2*pi).
inline double wrap_two_pi(double a) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

// Row-major 2x2 matrix acting on column vectors.
struct Mat2 {
  double a = 1.0, b = 0.0;
  double c = 0.0, d = 1.0;

  constexpr Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  constexpr double det() const { return a * d - b * c; }
  Mat2 inverse() const;
  static Mat2 rotation(double theta);
  // The matrix whose columns are u and v.
  static constexpr Mat2 columns(Vec2 u, Vec2 v) { return {u.x, v.x, u.y, v.y}; }
};

// A point of a convex polygon boundary, as edge index plus edge parameter.
struct BoundaryPoint {
  std::size_t edge = 0;  // edge from vertex(edge) to vertex(edge + 1)
  double t = 0.0;        // in [0, 1)
  Vec2 point;
  bool at_vertex = false;  // t == 0 after snapping
};

// Compact convex set with non-empty interior, stored as a closed CCW polygon.
// Dense polygons approximate smooth bodies; exact_polygon records which
// interpretation the caller intends.
class ConvexBody {
 public:
  ConvexBody() = default;

  // Validates orientation and convexity; consecutive duplicates are dropped.
  static ConvexBody from_vertices(std::vector<Vec2> ccw, bool exact_polygon);
  // Convex hull of arbitrary points (collinear points dropped).
  static ConvexBody hull_of(std::span<const Vec2> points, bool exact_polygon);

  std::span<const Vec2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Vec2 edge(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  bool exact_polygon() const { return exact_polygon_; }

  // Length of the bounding-box diagonal.
  double diameter() const;
  // Vertex average; strictly interior.
  Vec2 interior_point() const;
  double euclidean_perimeter() const;

  bool contains(Vec2 p, double tol = 0.0) const;
  // Snaps p onto the boundary; throws GeometryError when p is farther than
  // snap_tol (absolute) from it. Points within snap_tol of a vertex snap to it.
  BoundaryPoint locate(Vec2 p, double snap_tol) const;
  // Index of a vertex maximizing dot(normal, v).
  std::size_t support_vertex(Vec2 normal) const;

  ConvexBody translated(Vec2 offset) const;
  ConvexBody transformed(const Mat2& m) const;
  // Same boundary, re-indexed so that vertex(0) == vertex(start).
  ConvexBody rotated_to(std::size_t start) const;

 private:
  std::vector<Vec2> vertices_;
  bool exact_polygon_ = true;
};

// Andrew monotone chain; returns CCW hull without collinear points.
std::vector<Vec2> convex_hull(std::span<const Vec2> points);

// Intersection of two convex bodies (Sutherland-Hodgman). Returns nullopt
// when the intersection has empty interior.
std::optional<ConvexBody> clip_convex(const ConvexBody& subject, const ConvexBody& clip);

}  // namespace mchords
