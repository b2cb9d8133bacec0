#include "mchords/geometry.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <limits>

#include "mchords/errors.hpp"

namespace mchords {

Mat2 Mat2::inverse() const {
  const double det_value = det();
  if (det_value == 0.0 || !std::isfinite(det_value)) {
    throw ArgumentError("singular linear map");
  }
  return {d / det_value, -b / det_value, -c / det_value, a / det_value};
}

Mat2 Mat2::rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -s, s, c};
}

namespace {

std::vector<Vec2> drop_duplicates(std::vector<Vec2> pts, double tol) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (const Vec2& p : pts) {
    if (out.empty() || euclidean_norm(p - out.back()) > tol) out.push_back(p);
  }
  while (out.size() > 1 && euclidean_norm(out.front() - out.back()) <= tol) out.pop_back();
  return out;
}

double bbox_diagonal(std::span<const Vec2> pts) {
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const Vec2& p : pts) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

}  // namespace

ConvexBody ConvexBody::from_vertices(std::vector<Vec2> ccw, bool exact_polygon) {
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    if (!is_finite(ccw[i])) throw RepresentationError(fmt::format("vertex {} is not finite", i));
  }
  const double scale = bbox_diagonal(ccw);
  ccw = drop_duplicates(std::move(ccw), 1e-12 * std::max(scale, 1e-300));
  if (ccw.size() < 3) throw RepresentationError("convex body needs at least 3 distinct vertices");

  const std::size_t n = ccw.size();
  const double eps = 1e-12 * scale * scale;
  double area2 = 0.0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = ccw[i];
    const Vec2 b = ccw[(i + 1) % n];
    const Vec2 c = ccw[(i + 2) % n];
    area2 += cross(a, b);
    const double turn = cross(b - a, c - b);
    if (turn < -eps) {
      throw RepresentationError(
          fmt::format("polygon is not convex at vertex {} ({}, {})", (i + 1) % n, b.x, b.y));
    }
    turning += std::atan2(turn, dot(b - a, c - b));
  }
  if (area2 <= eps) throw RepresentationError("polygon is degenerate or clockwise");
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
    throw RepresentationError("polygon boundary winds more than once");
  }
  ConvexBody body;
  body.vertices_ = std::move(ccw);
  body.exact_polygon_ = exact_polygon;
  return body;
}

ConvexBody ConvexBody::hull_of(std::span<const Vec2> points, bool exact_polygon) {
  return from_vertices(convex_hull(points), exact_polygon);
}

double ConvexBody::diameter() const { return bbox_diagonal(vertices_); }

Vec2 ConvexBody::interior_point() const {
  Vec2 sum;
  for (const Vec2& v : vertices_) sum += v;
  return sum / static_cast<double>(vertices_.size());
}

double ConvexBody::euclidean_perimeter() const {
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i) total += euclidean_norm(edge(i));
  return total;
}

bool ConvexBody::contains(Vec2 p, double tol) const {
  for (std::size_t i = 0; i < size(); ++i) {
    const Vec2 e = edge(i);
    const double len = euclidean_norm(e);
    if (cross(e, p - vertex(i)) / len < -tol) return false;
  }
  return true;
}

BoundaryPoint ConvexBody::locate(Vec2 p, double snap_tol) const {
  double best = std::numeric_limits<double>::infinity();
  BoundaryPoint result;
  for (std::size_t i = 0; i < size(); ++i) {
    const Vec2 a = vertex(i);
    const Vec2 e = edge(i);
    double t = dot(p - a, e) / dot(e, e);
    t = std::clamp(t, 0.0, 1.0);
    const double dist = euclidean_norm(a + t * e - p);
    if (dist < best) {
      best = dist;
      result.edge = i;
      result.t = t;
    }
  }
  if (best > snap_tol) {
    throw GeometryError(fmt::format("point ({}, {}) is {:.3g} away from the boundary", p.x, p.y, best));
  }
  const Vec2 a = vertex(result.edge);
  const Vec2 b = vertex(result.edge + 1);
  if (euclidean_norm(p - b) <= snap_tol || result.t >= 1.0) {
    result.edge = (result.edge + 1) % size();
    result.t = 0.0;
  } else if (euclidean_norm(p - a) <= snap_tol) {
    result.t = 0.0;
  }
  result.at_vertex = result.t == 0.0;
  result.point = result.at_vertex ? vertex(result.edge) : a + result.t * (b - a);
  return result;
}

std::size_t ConvexBody::support_vertex(Vec2 normal) const {
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < size(); ++i) {
    const double value = dot(normal, vertices_[i]);
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  return best;
}

ConvexBody ConvexBody::translated(Vec2 offset) const {
  ConvexBody out = *this;
  for (Vec2& v : out.vertices_) v += offset;
  return out;
}

ConvexBody ConvexBody::transformed(const Mat2& m) const {
  std::vector<Vec2> pts;
  pts.reserve(size());
  for (const Vec2& v : vertices_) pts.push_back(m * v);
  if (m.det() < 0.0) std::reverse(pts.begin(), pts.end());
  return from_vertices(std::move(pts), exact_polygon_);
}

ConvexBody ConvexBody::rotated_to(std::size_t start) const {
  ConvexBody out = *this;
  std::rotate(out.vertices_.begin(), out.vertices_.begin() + static_cast<std::ptrdiff_t>(start % size()),
              out.vertices_.end());
  return out;
}

std::vector<Vec2> convex_hull(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Vec2 p = pts[i];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

std::optional<ConvexBody> clip_convex(const ConvexBody& subject, const ConvexBody& clip) {
  std::vector<Vec2> current(subject.vertices().begin(), subject.vertices().end());
  std::vector<Vec2> next;
  next.reserve(current.size() + clip.size());
  for (std::size_t i = 0; i < clip.size() && !current.empty(); ++i) {
    const Vec2 a = clip.vertex(i);
    const Vec2 e = clip.edge(i);
    const double len = euclidean_norm(e);
    auto side = [&](Vec2 p) { return cross(e, p - a) / len; };
    // Skip half-planes that do not cut the current polygon.
    bool all_inside = true;
    for (const Vec2& p : current) {
      if (side(p) < 0.0) {
        all_inside = false;
        break;
      }
    }
    if (all_inside) continue;
    next.clear();
    for (std::size_t j = 0; j < current.size(); ++j) {
      const Vec2 p = current[j];
      const Vec2 q = current[(j + 1) % current.size()];
      const double sp = side(p);
      const double sq = side(q);
      if (sp >= 0.0) next.push_back(p);
      if ((sp >= 0.0) != (sq >= 0.0)) {
        const double t = sp / (sp - sq);
        next.push_back(p + t * (q - p));
      }
    }
    current.swap(next);
  }
  const std::vector<Vec2> hull = convex_hull(current);
  if (hull.size() < 3) return std::nullopt;
  double area2 = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) area2 += cross(hull[i], hull[(i + 1) % hull.size()]);
  const double scale = std::max(subject.diameter(), clip.diameter());
  if (area2 <= 1e-14 * scale * scale) return std::nullopt;
  return ConvexBody::from_vertices(hull, subject.exact_polygon() && clip.exact_polygon());
}

}  // namespace mchords
