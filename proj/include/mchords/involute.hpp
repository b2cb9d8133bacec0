#pragma once

// Involutes of a convex disk C measured in a norm M: the curve traced by the
// end of a taut thread unwound from the boundary of C, starting at p.

#include <cstddef>
#include <utility>
#include <vector>

#include "mchords/curvekit.hpp"
#include "mchords/geometry.hpp"
#include "mchords/normplane.hpp"

namespace mchords {

enum class Branch { positive, negative, both };

// Angles are measured in the frame where the oriented tangent of C at p has
// angle 0; the tangent line with frame angle theta has world direction
// theta + frame_angle. Points are reported in world coordinates.
struct InvoluteCurve {
  ConvexBody base;  // re-indexed so that vertex(0) == p
  UnitDisk norm;
  Vec2 p;
  double frame_angle = 0.0;
  std::vector<double> thetas;
  Polyline points;
  Branch branch = Branch::positive;
  std::vector<Vec2> tangency;      // q(theta) per sample
  std::vector<double> unwound;     // signed d(p, q(theta)) per sample
  std::vector<double> edge_angles; // frame angle of edge k, increasing, in [0, 2 pi)
  std::vector<double> arc_to;      // M-length from p to vertex k; arc_to[size] is the perimeter
};

// Samples n equally spaced frame angles in [theta_min, theta_max] plus the
// breakpoints of the construction (edge directions of the base polygon and,
// for a polygonal norm, its vertex directions), so that with a polygonal norm
// the polyline is the exact curve. Samples where the curve is
// stationary (a vertex of C being wrapped with zero thread) are collapsed.
InvoluteCurve build_involute(const UnitDisk& norm, const ConvexBody& base, Vec2 p, double theta_min,
                             double theta_max, std::size_t n);

// Gamma_p at an arbitrary frame angle, with its tangency point and signed
// unwound length.
struct InvolutePoint {
  Vec2 point;
  Vec2 tangency;
  double unwound = 0.0;
};
InvolutePoint involute_point(const InvoluteCurve& curve, double theta);

// Direction w of the support line of the involute at theta: the tangent of
// L_theta is Birkhoff orthogonal to w. w is oriented along increasing theta.
// For a polygonal norm whose boundary has a corner in the tangent direction
// the admissible w form a cone; the bisector is returned with unique=false.
struct InvoluteSupport {
  Vec2 direction;
  bool unique = true;
  Vec2 cone_start;
  Vec2 cone_end;
};
InvoluteSupport involute_support_direction(const InvoluteCurve& curve, double theta);

// Sample index range [first, last] with thetas inside [theta0, theta0 + span].
std::pair<std::size_t, std::size_t> involute_window(const InvoluteCurve& curve, double theta0, double span);

}  // namespace mchords
