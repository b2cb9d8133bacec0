#pragma once

// Normed (Minkowski) planes: the unit disk M, its gauge, unit vectors in
// prescribed directions, support lines and Birkhoff orthogonality.

#include <cstddef>
#include <string>
#include <span>
#include <vector>

#include "mchords/geometry.hpp"

namespace mchords {

enum class DiskKind { polygon, radial, builtin };
enum class BuiltinNorm { euclidean, lp };

struct DiskFlags {
  bool polygonal = false;
  bool strictly_convex = false;
  bool smooth = false;
};

// Origin-symmetric convex body defining a norm.
//
// Every representation is lowered to a CCW boundary polygon with the exact
// symmetry v[i + n/2] == -v[i]; all geometry (gauge, clipping, perimeter,
// support) runs on that polygon. Polygonal disks keep their vertices,
// built-in smooth norms are sampled at `resolution` points and radial disks
// interpolate linearly between their samples.
class UnitDisk {
 public:
  static constexpr std::size_t kDefaultResolution = 4096;

  static UnitDisk polygon(std::vector<Vec2> ccw_vertices);
  static UnitDisk radial(std::vector<double> angles_rad, std::vector<double> radii);
  static UnitDisk euclidean(std::size_t resolution = kDefaultResolution);
  // p >= 1; p == 1 yields the exact cross-polytope (a polygon).
  static UnitDisk lp(double p, std::size_t resolution = kDefaultResolution);
  // [-1, 1]^2.
  static UnitDisk square();
  // Vertices (+-1, 0), (+-1/2, +-sqrt(3)/2).
  static UnitDisk regular_hexagon();

  // Image of the disk under an invertible linear map. Polygons stay
  // polygons; sampled disks become radial disks.
  UnitDisk linear_image(const Mat2& m) const;
  // Built-in sampled norms at twice the resolution; other disks unchanged.
  UnitDisk refined() const;
  bool refinable() const { return kind_ == DiskKind::builtin && !flags_.polygonal; }
  // The lowered polygon as an exact polygonal disk, with the same gauge.
  // Constructions that sample polygon breakpoints then resolve every corner.
  UnitDisk as_polygon() const;

  DiskKind kind() const { return kind_; }
  BuiltinNorm builtin_norm() const { return builtin_; }
  double lp_exponent() const { return lp_p_; }
  const DiskFlags& flags() const { return flags_; }
  std::size_t resolution() const { return body_.size(); }
  // Human-readable name, e.g. "euclidean", "lp(4)", "polygon(6)".
  std::string describe() const;

  const ConvexBody& body() const { return body_; }
  // atan2 of each vertex, ascending; sector i runs from vertex i to i + 1
  // and the gauge there is dot(dual(i), v).
  std::span<const double> vertex_angles() const { return angles_; }
  Vec2 dual(std::size_t i) const { return duals_[i]; }
  std::span<const Vec2> vertices() const { return body_.vertices(); }
  // The radial samples as given (radial disks only).
  const std::vector<double>& radial_angles() const { return radial_angles_; }
  const std::vector<double>& radial_radii() const { return radial_radii_; }

  double gauge(Vec2 v) const;
  // One-sided derivative of the gauge at w in direction e (exact for the
  // polygon the disk is lowered to).
  double directional_derivative(Vec2 w, Vec2 e) const;
  Vec2 unit_vector(double theta) const;

  // Index i of the boundary edge (vertex(i), vertex(i+1)) whose angular
  // sector contains v.
  std::size_t sector_of(Vec2 v) const;
  // Index of a vertex of M maximizing dot(normal, v), by binary search.
  std::size_t support_index(Vec2 normal) const;

 private:
  UnitDisk() = default;
  static UnitDisk from_symmetric_polygon(std::vector<Vec2> ccw, DiskKind kind, DiskFlags flags);

  DiskKind kind_ = DiskKind::polygon;
  BuiltinNorm builtin_ = BuiltinNorm::euclidean;
  double lp_p_ = 2.0;
  DiskFlags flags_;
  ConvexBody body_;
  std::vector<double> angles_;  // vertex angles, ascending in [-pi, pi)
  std::vector<Vec2> duals_;     // edge i: gauge on its sector is dot(duals_[i], v)
  std::vector<double> dual_angles_;  // angle of duals_[i], ascending from dual_start_
  std::size_t dual_start_ = 0;
  std::vector<double> radial_angles_;
  std::vector<double> radial_radii_;
};

// Free-function spelling of the core operations.
inline double gauge(const UnitDisk& disk, Vec2 v) { return disk.gauge(v); }
inline Vec2 unit_vector(const UnitDisk& disk, double theta) { return disk.unit_vector(theta); }

enum class ContactKind { point, segment };

// Oriented support line. The body lies in the closed half-plane to the left
// of `direction`, so `direction` follows the CCW boundary orientation.
struct SupportLine {
  Vec2 point;
  Vec2 direction;
  double theta = 0.0;
  ContactKind contact = ContactKind::point;
  Vec2 segment_start;  // contact segment in CCW order (== point for point contact)
  Vec2 segment_end;
};

// Support line with outward normal `normal` (argument error for zero).
SupportLine support(const ConvexBody& body, Vec2 normal);
SupportLine support(const UnitDisk& disk, Vec2 normal);

// v is Birkhoff orthogonal to u iff gauge(v + t u) >= gauge(v) for all t.
// Decided by golden-section search over |t| <= 4 gauge(v)/gauge(u).
bool is_birkhoff_orthogonal(const UnitDisk& disk, Vec2 v, Vec2 u, double tol = 1e-9);

// Directions u with v Birkhoff orthogonal to u: the tangent directions of the
// boundary of M at v/gauge(v). When v/gauge(v) is a vertex of the lowered
// polygon the admissible directions form a cone; `direction` is then the
// bisector of the cone and `unique` is false.
struct BirkhoffDirection {
  Vec2 direction;  // Euclidean unit vector, CCW tangent orientation
  bool unique = true;
  Vec2 cone_start;  // incoming edge direction (== direction when unique)
  Vec2 cone_end;    // outgoing edge direction
};
BirkhoffDirection birkhoff_direction(const UnitDisk& disk, Vec2 v);

// Snapping tolerance for "point on the boundary": 1e-9 of the diameter.
double boundary_snap_tolerance(const ConvexBody& body);

// M-length of the CCW boundary arc of `body` from `from` to `to`, in
// [0, perimeter).
double boundary_arclength(const UnitDisk& disk, const ConvexBody& body, Vec2 from, Vec2 to);

}  // namespace mchords
