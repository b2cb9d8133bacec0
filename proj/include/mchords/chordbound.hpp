#pragma once

// The chord-length bound L_M(p, q) = perim_M((p+M) cap (q+M)) / 2, its
// direction profile, inscribed affinely regular hexagons, Reuleaux triangles,
// certificates for the bounds 2 <= L_M <= 3, and a search over symmetric
// polygons for large min-over-directions values.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "mchords/geometry.hpp"
#include "mchords/normplane.hpp"

namespace mchords {

// M-perimeter of a convex body: the sum of the gauges of its edge vectors.
double perimeter(const UnitDisk& disk, const ConvexBody& body);

// (p + M) cap (q + M). Geometry error when gauge(q - p) > 2 or the
// intersection has empty interior.
ConvexBody intersect_translates(const UnitDisk& disk, Vec2 p, Vec2 q);

// L_M(0, unit_vector(direction)). Sampled built-in norms are re-evaluated at
// doubled resolution until successive values differ by less than 1e-6 (pass
// refine=false to use the disk as given).
double lm(const UnitDisk& disk, double direction, bool refine = true);

struct LmProfile {
  std::vector<double> directions;
  std::vector<double> values;
  double min = 0.0;
  double argmin = 0.0;
  double max = 0.0;
  double argmax = 0.0;
};

// n equally spaced directions in [0, pi), plus every vertex direction of a
// polygonal disk (taken mod pi).
LmProfile lm_sweep(const UnitDisk& disk, std::size_t n, bool refine = true);

// Vertices (v, w, w - v, -v, -w, v - w) on the boundary of M.
struct Hexagon {
  std::array<Vec2, 6> vertices{};
  // False when several q on the boundary are at distance 1 from p (the
  // boundary then has two opposite sides parallel to p).
  bool unique = true;
};

Hexagon inscribed_hexagon(const UnitDisk& disk, Vec2 p);

// Throws ArgumentError unless hex has the affinely regular pattern and lies
// on the boundary of M (both within 1e-8).
void validate_hexagon(const UnitDisk& disk, const Hexagon& hex);

struct ReuleauxTriangle {
  ConvexBody body;
  double perimeter = 0.0;
};

// M cap (p+M) cap (q+M) for the first two hexagon vertices p, q.
ReuleauxTriangle reuleaux(const UnitDisk& disk, const Hexagon& hex);

// M-lengths of the six boundary arcs between consecutive hexagon vertices.
std::array<double, 6> hexagon_arcs(const UnitDisk& disk, const Hexagon& hex);

// Lower bound witness: x lies on both boundaries of M and u + M, and the
// quadrilateral conv{x, 0, u, u - x} inside the intersection has perimeter 4.
struct LowerBoundCertificate {
  Vec2 q;  // unit_vector(direction)
  Vec2 x;
  Vec2 x_reflected;
  double quad_perimeter = 0.0;
  bool quad_inside = false;
};
LowerBoundCertificate lower_bound_certificate(const UnitDisk& disk, double direction);

// Upper bound witness: the parallelogram P bounded by the support lines of
// X = M cap (u+M) at 0 and u and the two support lines parallel to u.
// X is inside P, and the corners next to 0 lie in M, so perim(P) <= 6.
struct UpperBoundCertificate {
  Vec2 q;
  std::array<Vec2, 4> corners{};  // x_p+, x_q+, x_q-, x_p-
  double parallelogram_perimeter = 0.0;
  double gauge_plus = 0.0;   // gauge(x_p+)
  double gauge_minus = 0.0;  // gauge(x_p-)
  bool contains_intersection = false;
};
UpperBoundCertificate upper_bound_certificate(const UnitDisk& disk, double direction);

// k radii at angles j*pi/k, mirrored to a symmetric 2k-gon.
struct DiskFamilyParams {
  std::size_t k = 0;
  std::vector<double> radii;
};

std::vector<double> family_angles(std::size_t k);
// The polygon spanned by the radii after radial projection onto the convex
// hull; `repaired` (optional) receives the projected radii.
UnitDisk family_disk(const DiskFamilyParams& params, DiskFamilyParams* repaired = nullptr);

struct MaxMinResult {
  DiskFamilyParams params;
  std::vector<double> angles;
  double objective = 0.0;
  std::size_t evaluations = 0;
};

// Nelder-Mead over log-radii with 3 seeded restarts, each continuing from the
// best point so far, starting from the regular 2k-gon. `budget` caps the
// number of objective evaluations after the start.
MaxMinResult maxmin_search(std::size_t k, std::size_t budget, std::uint64_t seed, std::size_t sweep_n = 720);

}  // namespace mchords
