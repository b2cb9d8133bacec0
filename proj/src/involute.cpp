#include "mchords/involute.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <stdexcept>

#include "mchords/errors.hpp"

namespace mchords {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Exterior angle from edge a to edge b, in [0, pi).
double turn(Vec2 a, Vec2 b) { return std::atan2(cross(a, b), dot(a, b)); }

// Vertex wrapped at frame angle theta, as (vertex index, lifted arc length).
std::pair<std::size_t, double> tangency_at(const InvoluteCurve& c, double theta) {
  const double turns = std::floor(theta / kTwoPi);
  double r = theta - turns * kTwoPi;
  if (r < 0.0) r = 0.0;
  const std::size_t m = c.base.size();
  const auto it = std::lower_bound(c.edge_angles.begin(), c.edge_angles.end(), r);
  const std::size_t k = static_cast<std::size_t>(it - c.edge_angles.begin());
  return {k, c.arc_to[k] + turns * c.arc_to[m]};
}

}  // namespace

InvolutePoint involute_point(const InvoluteCurve& c, double theta) {
  const auto [k, d] = tangency_at(c, theta);
  const Vec2 q = c.base.vertex(k);
  return {q - d * c.norm.unit_vector(theta + c.frame_angle), q, d};
}

InvoluteCurve build_involute(const UnitDisk& norm, const ConvexBody& base, Vec2 p, double theta_min,
                             double theta_max, std::size_t n) {
  if (n < 2) throw ArgumentError("involute needs at least 2 samples");
  if (!std::isfinite(theta_min) || !std::isfinite(theta_max) || !(theta_min < theta_max)) {
    throw ArgumentError("involute needs a finite range theta_min < theta_max");
  }
  const BoundaryPoint at = base.locate(p, boundary_snap_tolerance(base));
  if (!at.at_vertex) {
    if (base.exact_polygon()) {
      throw GeometryError("start point lies inside a boundary segment; start at one of its endpoints");
    }
    throw GeometryError("start point must be a vertex of the sampled boundary");
  }
  const ConvexBody body = base.rotated_to(at.edge);
  const std::size_t m = body.size();

  // Frame: the outgoing edge for exact polygons, the tangent-cone bisector
  // for sampled smooth bodies.
  const Vec2 out_edge = normalized(body.edge(0));
  const Vec2 in_edge = normalized(body.edge(m - 1));
  const double frame = body.exact_polygon() ? angle_of(out_edge) : angle_of(in_edge + out_edge);

  std::vector<double> edge_angles(m);
  std::vector<double> arc_to(m + 1, 0.0);
  edge_angles[0] = body.exact_polygon() ? 0.0 : turn(direction(frame), out_edge);
  for (std::size_t k = 0; k < m; ++k) {
    if (k > 0) edge_angles[k] = edge_angles[k - 1] + turn(body.edge(k - 1), body.edge(k));
    arc_to[k + 1] = arc_to[k] + norm.gauge(body.edge(k));
  }
  if (!(edge_angles[m - 1] < kTwoPi)) throw std::logic_error("involute: edge angles do not wind once");

  InvoluteCurve curve{body, norm, body.vertex(0), frame, {}, {}, Branch::positive, {}, {}, std::move(edge_angles),
                      std::move(arc_to)};
  curve.branch = theta_min >= 0.0 ? Branch::positive : (theta_max <= 0.0 ? Branch::negative : Branch::both);

  std::vector<double> thetas;
  thetas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    thetas.push_back(theta_min + (theta_max - theta_min) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  thetas.back() = theta_max;

  const double w_lo = std::floor(theta_min / kTwoPi);
  const double w_hi = std::floor(theta_max / kTwoPi);
  auto add_events = [&](double phase) {
    for (double w = w_lo - 1.0; w <= w_hi + 1.0; w += 1.0) {
      const double t = phase + w * kTwoPi;
      if (t > theta_min && t < theta_max) thetas.push_back(t);
    }
  };
  for (double phi : curve.edge_angles) add_events(phi);
  const std::vector<double> base_events(thetas.begin() + static_cast<std::ptrdiff_t>(n), thetas.end());
  if (norm.flags().polygonal) {
    for (const Vec2& v : norm.vertices()) add_events(angle_of(v) - frame);
  }
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end(), [](double a, double b) { return b - a <= 1e-12; }),
               thetas.end());

  // At an edge event both endpoints of the edge give the same point.
  const double scale = body.diameter() + curve.arc_to[m];
  for (double t : base_events) {
    const auto [k, d] = tangency_at(curve, t);
    const std::size_t j = (k + m - 1) % m;
    const double turns = std::floor(t / kTwoPi);
    const Vec2 u = norm.unit_vector(t + frame);
    const Vec2 from_k = body.vertex(k) - d * u;
    const double d_prev = curve.arc_to[j] + turns * curve.arc_to[m];
    const Vec2 from_prev = body.vertex(j) - d_prev * u;
    const Vec2 from_next = body.vertex(k + 1) - (d + norm.gauge(body.edge(k))) * u;
    const double gap = std::min(euclidean_norm(from_k - from_prev), euclidean_norm(from_k - from_next));
    if (gap > 1e-9 * scale) {
      throw std::logic_error(fmt::format("involute: tangent point independence violated at theta={} by {}", t, gap));
    }
  }

  for (double t : thetas) {
    const InvolutePoint ip = involute_point(curve, t);
    if (!curve.points.points.empty() && euclidean_norm(ip.point - curve.points.points.back()) <= 1e-12) continue;
    curve.thetas.push_back(t);
    curve.points.points.push_back(ip.point);
    curve.tangency.push_back(ip.tangency);
    curve.unwound.push_back(ip.unwound);
  }
  if (curve.points.points.size() < 2) throw GeometryError("involute range is a single stationary point");
  return curve;
}

InvoluteSupport involute_support_direction(const InvoluteCurve& curve, double theta) {
  const double lo = curve.thetas.front();
  const double hi = curve.thetas.back();
  if (!(theta > lo && theta < hi)) {
    throw ArgumentError(fmt::format("theta={} is not strictly inside the sampled range ({}, {})", theta, lo, hi));
  }
  const double d = involute_point(curve, theta).unwound;
  // The curve moves along -d times the CCW tangent of the norm boundary.
  const double sign = d > 0.0 ? -1.0 : (d < 0.0 ? 1.0 : -1.0);
  const BirkhoffDirection bd = birkhoff_direction(curve.norm, direction(theta + curve.frame_angle));
  InvoluteSupport out;
  out.direction = sign * bd.direction;
  out.unique = bd.unique;
  out.cone_start = sign * bd.cone_start;
  out.cone_end = sign * bd.cone_end;
  return out;
}

std::pair<std::size_t, std::size_t> involute_window(const InvoluteCurve& curve, double theta0, double span) {
  const auto& t = curve.thetas;
  const auto first = std::lower_bound(t.begin(), t.end(), theta0 - 1e-12);
  const auto last = std::upper_bound(t.begin(), t.end(), theta0 + span + 1e-12);
  if (first == t.end() || last == t.begin() || last - first < 2) {
    throw ArgumentError("window contains fewer than two samples");
  }
  return {static_cast<std::size_t>(first - t.begin()), static_cast<std::size_t>(last - t.begin()) - 1};
}

}  // namespace mchords
