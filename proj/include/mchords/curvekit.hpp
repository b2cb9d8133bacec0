#pragma once

// Polyline curves in a normed plane: arclength, the increasing chord property
// (for the whole curve and with respect to anchor points), bisectors,
// x-monotonicity and slope-sorting convexification.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mchords/geometry.hpp"
#include "mchords/normplane.hpp"

namespace mchords {

struct Polyline {
  std::vector<Vec2> points;
  bool closed = false;
};

// Throws ArgumentError unless the curve has >= 2 points, all finite, and no
// two consecutive points within 1e-12 of each other.
void validate(const Polyline& curve);

double arclength(const UnitDisk& disk, const Polyline& curve);

enum class CheckMode { exact_polygonal, tolerance };

// Index quadruple a <= b <= c <= d with ||f_a - f_d|| < ||f_b - f_c|| by
// `deficit`. For the edge-interior test the offending point lies inside the
// edge (c, d) (or (a, b) for backward scans). For checks against anchor
// sets the first index is the anchor's index.
struct ChordWitness {
  std::array<std::size_t, 4> indices{};
  double deficit = 0.0;
};

struct ChordReport {
  bool holds = true;
  double max_deficit = 0.0;
  std::vector<ChordWitness> witnesses;  // worst first; empty when holds
  CheckMode mode = CheckMode::tolerance;
  double tol = 0.0;
};

// Both modes evaluate the polygon that represents M exactly; they differ in
// the default tolerance, which absorbs the polygonization error of sampled
// smooth disks.
CheckMode default_mode(const UnitDisk& disk);
// 1e-9 for polygonal disks, 1e-6 for sampled smooth ones.
double default_tolerance(const UnitDisk& disk);

// Amount by which gauge(x - anchor) decreases somewhere on the segment
// from a to b (0 when it is nondecreasing there). The gauge is convex and
// piecewise linear along the segment, so its minimum sits at an endpoint or
// where the segment crosses a vertex ray of M.
double edge_dip(const UnitDisk& disk, Vec2 anchor, Vec2 a, Vec2 b);

// a <= b <= c <= d along the curve implies ||a - d|| >= ||b - c||, checked
// over the whole polyline through the equivalent statement that distance
// from every curve point is monotone moving away from it. For each pair of
// edges the anchor runs along one edge while the target runs along the
// other; witnesses {i, i+1, k, k+1} name such an edge pair, witnesses on
// vertices name the four points directly.
ChordReport check_increasing_chords(const UnitDisk& disk, const Polyline& curve,
                                    std::optional<double> tol = std::nullopt);

// Same property restricted to pairs whose parameters differ by at most
// `span` (params must be nondecreasing, one per point). Used for the
// width-pi windows of involutes.
ChordReport check_increasing_chords_windowed(const UnitDisk& disk, const Polyline& curve,
                                             std::span<const double> params, double span,
                                             std::optional<double> tol = std::nullopt);

// For every anchor p, gauge(f(t) - p) is nondecreasing in t.
ChordReport check_increasing_wrt_set(const UnitDisk& disk, const Polyline& curve, std::span<const Vec2> anchors,
                                     std::optional<double> tol = std::nullopt);

struct BisectorSample {
  std::pair<Vec2, Vec2> seg;
  Polyline samples;
};

// Points x with gauge(x - a) == gauge(x - b) on n lines parallel to b - a,
// offset along perp(b - a)/|b - a| by values spanning y_range. Strictly
// convex disks only.
BisectorSample bisector_sample(const UnitDisk& disk, Vec2 a, Vec2 b, std::pair<double, double> y_range,
                               std::size_t n);

bool is_x_monotone(const Polyline& curve);

// Rearranges the edge vectors by strictly decreasing angle (exactly parallel
// edges merged). Endpoints are kept; input must be strictly x-monotone.
Polyline convexify(const Polyline& curve);
// The edge vectors of convexify(curve), exactly as rearranged (and merged).
std::vector<Vec2> convexified_edges(const Polyline& curve);

// Affine normalization of a curve and its norm: maps f(0) to the origin,
// f(1) to (1, 0) and a support line of M at the unit vector along f(1)-f(0)
// to the vertical, so x = +-1 support the normalized disk at (+-1, 0).
struct NormalizedChord {
  UnitDisk disk;
  Polyline curve;
  Mat2 map;  // applied after translating f(0) to the origin
};
NormalizedChord normalize_chord(const UnitDisk& disk, const Polyline& curve);

}  // namespace mchords
