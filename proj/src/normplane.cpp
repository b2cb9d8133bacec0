#include "mchords/normplane.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <limits>
#include <numbers>

#include "mchords/errors.hpp"

namespace mchords {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t round_up_to_multiple_of_four(std::size_t n) { return std::max<std::size_t>(8, (n + 3) / 4 * 4); }

// Builds the first half of a symmetric polygon from a radial sampler and
// mirrors it, so that v[i + n/2] == -v[i] exactly.
template <class Sampler>
std::vector<Vec2> sample_symmetric(std::size_t n, Sampler&& sample) {
  std::vector<Vec2> pts(n);
  const std::size_t half = n / 2;
  for (std::size_t k = 0; k < half; ++k) {
    pts[k] = sample(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
    pts[k + half] = -pts[k];
  }
  return pts;
}

}  // namespace

UnitDisk UnitDisk::from_symmetric_polygon(std::vector<Vec2> ccw, DiskKind kind, DiskFlags flags) {
  const std::size_t n = ccw.size();
  if (n < 4 || n % 2 != 0) {
    throw RepresentationError(fmt::format("origin-symmetric polygon needs an even number (>= 4) of vertices, got {}", n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(ccw[i])) throw RepresentationError(fmt::format("vertex {} is not finite", i));
  }
  double scale = 0.0;
  for (const Vec2& v : ccw) scale = std::max(scale, euclidean_norm(v));
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = ccw[i];
    const Vec2 b = ccw[(i + 1) % n];
    if (cross(a, b) <= 1e-14 * scale * scale) {
      throw RepresentationError(fmt::format(
          "origin is not interior to the disk (edge from vertex {} to vertex {}), or vertices are not CCW", i,
          (i + 1) % n));
    }
  }
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i) {
    if (euclidean_norm(ccw[i] + ccw[i + half]) > 1e-9 * scale) {
      throw RepresentationError(fmt::format("disk is not origin-symmetric: vertex {} ({}, {}) has no antipodal vertex",
                                            i, ccw[i].x, ccw[i].y));
    }
  }
  for (std::size_t i = 0; i < half; ++i) ccw[i + half] = -ccw[i];

  // Convexity (throws naming the offending vertex).
  ConvexBody body = ConvexBody::from_vertices(ccw, flags.polygonal);
  if (body.size() != n) throw RepresentationError("disk has repeated vertices");

  std::size_t start = 0;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double a = angle_of(body.vertex(i));
    if (a < lowest) {
      lowest = a;
      start = i;
    }
  }
  UnitDisk disk;
  disk.kind_ = kind;
  disk.flags_ = flags;
  disk.body_ = body.rotated_to(start);
  disk.angles_.resize(n);
  disk.duals_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = disk.body_.vertex(i);
    const Vec2 b = disk.body_.vertex(i + 1);
    disk.angles_[i] = angle_of(a);
    const Vec2 normal{b.y - a.y, a.x - b.x};
    disk.duals_[i] = normal / cross(a, b);
  }
  disk.dual_angles_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    disk.dual_angles_[i] = angle_of(disk.duals_[i]);
    if (disk.dual_angles_[i] < disk.dual_angles_[disk.dual_start_]) disk.dual_start_ = i;
  }
  return disk;
}

UnitDisk UnitDisk::polygon(std::vector<Vec2> ccw_vertices) {
  return from_symmetric_polygon(std::move(ccw_vertices), DiskKind::polygon, {true, false, false});
}

UnitDisk UnitDisk::radial(std::vector<double> angles_rad, std::vector<double> radii) {
  const std::size_t n = angles_rad.size();
  if (radii.size() != n) throw RepresentationError("radial disk: angles and radii differ in length");
  if (n < 4 || n % 2 != 0) throw RepresentationError("radial disk: need an even number (>= 4) of samples");
  double r_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double deg = angles_rad[i] * 180.0 / kPi;
    if (!std::isfinite(angles_rad[i]) || angles_rad[i] < 0.0 || angles_rad[i] >= 2.0 * kPi) {
      throw RepresentationError(fmt::format("radial disk: angle {} deg outside [0, 360)", deg));
    }
    if (i > 0 && angles_rad[i] <= angles_rad[i - 1]) {
      throw RepresentationError(fmt::format("radial disk: angles not strictly increasing at {} deg", deg));
    }
    if (!std::isfinite(radii[i]) || radii[i] <= 0.0) {
      throw RepresentationError(fmt::format("radial disk: radius at {} deg must be positive", deg));
    }
    r_max = std::max(r_max, radii[i]);
  }
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i) {
    if (std::abs(angles_rad[i + half] - angles_rad[i] - kPi) > 1e-9 ||
        std::abs(radii[i + half] - radii[i]) > 1e-12 * r_max) {
      throw RepresentationError(fmt::format("radial disk: not origin-symmetric at angle {} deg",
                                            angles_rad[i] * 180.0 / kPi));
    }
  }
  std::vector<Vec2> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = radii[i] * direction(angles_rad[i]);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = pts[(i + n - 1) % n];
    const Vec2 b = pts[i];
    const Vec2 c = pts[(i + 1) % n];
    if (cross(b - a, c - b) < -1e-12 * r_max * r_max) {
      throw RepresentationError(fmt::format("radial disk: not convex at angle {} deg", angles_rad[i] * 180.0 / kPi));
    }
  }
  UnitDisk disk = from_symmetric_polygon(std::move(pts), DiskKind::radial, {false, true, true});
  disk.radial_angles_ = std::move(angles_rad);
  disk.radial_radii_ = std::move(radii);
  return disk;
}

UnitDisk UnitDisk::euclidean(std::size_t resolution) {
  const std::size_t n = round_up_to_multiple_of_four(resolution);
  UnitDisk disk = from_symmetric_polygon(sample_symmetric(n, [](double t) { return direction(t); }),
                                         DiskKind::builtin, {false, true, true});
  disk.builtin_ = BuiltinNorm::euclidean;
  return disk;
}

UnitDisk UnitDisk::lp(double p, std::size_t resolution) {
  if (!(p >= 1.0)) throw RepresentationError(fmt::format("lp norm needs p >= 1, got {}", p));
  UnitDisk disk;
  if (p == 1.0) {
    disk = from_symmetric_polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, DiskKind::builtin, {true, false, false});
  } else if (std::isinf(p)) {
    disk = from_symmetric_polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}, DiskKind::builtin, {true, false, false});
  } else {
    const std::size_t n = round_up_to_multiple_of_four(resolution);
    auto sample = [p](double t) {
      const Vec2 d = direction(t);
      const double g = std::pow(std::pow(std::abs(d.x), p) + std::pow(std::abs(d.y), p), 1.0 / p);
      return d / g;
    };
    disk = from_symmetric_polygon(sample_symmetric(n, sample), DiskKind::builtin, {false, true, true});
  }
  disk.builtin_ = BuiltinNorm::lp;
  disk.lp_p_ = p;
  return disk;
}

UnitDisk UnitDisk::square() { return polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}); }

UnitDisk UnitDisk::regular_hexagon() {
  const double h = std::sqrt(3.0) / 2.0;
  return polygon({{1, 0}, {0.5, h}, {-0.5, h}, {-1, 0}, {-0.5, -h}, {0.5, -h}});
}

UnitDisk UnitDisk::linear_image(const Mat2& m) const {
  if (!(std::abs(m.det()) > 0.0)) throw ArgumentError("linear image needs an invertible map");
  std::vector<Vec2> pts;
  pts.reserve(resolution());
  for (const Vec2& v : vertices()) pts.push_back(m * v);
  if (m.det() < 0.0) std::reverse(pts.begin(), pts.end());
  if (flags_.polygonal) return polygon(std::move(pts));
  std::vector<std::pair<double, double>> samples;
  samples.reserve(pts.size());
  for (const Vec2& v : pts) samples.emplace_back(wrap_two_pi(angle_of(v)), euclidean_norm(v));
  std::sort(samples.begin(), samples.end());
  std::vector<double> angles, radii;
  for (const auto& [a, r] : samples) {
    angles.push_back(a);
    radii.push_back(r);
  }
  // Antipodal samples must agree exactly on radius and differ by pi.
  const std::size_t half = angles.size() / 2;
  for (std::size_t i = 0; i < half; ++i) {
    angles[i + half] = angles[i] + kPi;
    radii[i + half] = radii[i];
  }
  return radial(std::move(angles), std::move(radii));
}

UnitDisk UnitDisk::as_polygon() const {
  if (flags_.polygonal) return *this;
  return polygon({body_.vertices().begin(), body_.vertices().end()});
}

UnitDisk UnitDisk::refined() const {
  if (!refinable()) return *this;
  if (builtin_ == BuiltinNorm::euclidean) return euclidean(2 * resolution());
  return lp(lp_p_, 2 * resolution());
}

std::string UnitDisk::describe() const {
  switch (kind_) {
    case DiskKind::polygon:
      return fmt::format("polygon({})", resolution());
    case DiskKind::radial:
      return fmt::format("radial({})", resolution());
    case DiskKind::builtin:
      if (builtin_ == BuiltinNorm::euclidean) return "euclidean";
      return fmt::format("lp({})", lp_p_);
  }
  return "disk";
}

std::size_t UnitDisk::sector_of(Vec2 v) const {
  const double phi = angle_of(v);
  const auto it = std::upper_bound(angles_.begin(), angles_.end(), phi);
  if (it == angles_.begin()) return angles_.size() - 1;
  return static_cast<std::size_t>(it - angles_.begin()) - 1;
}

std::size_t UnitDisk::support_index(Vec2 normal) const {
  // Edge normals turn counterclockwise; vertex i + 1 is supported by every
  // normal between those of edges i and i + 1.
  const std::size_t n = duals_.size();
  const double phi = angle_of(normal);
  auto at = [&](std::size_t k) { return dual_angles_[(dual_start_ + k) % n]; };
  std::size_t lo = 0, hi = n;  // first k with at(k) > phi
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (at(mid) > phi) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::size_t edge = (dual_start_ + (lo == 0 ? n - 1 : lo - 1)) % n;
  return (edge + 1) % n;
}

double UnitDisk::gauge(Vec2 v) const {
  if (v.x == 0.0 && v.y == 0.0) return 0.0;
  const std::size_t n = duals_.size();
  const std::size_t i = sector_of(v);
  double g = dot(duals_[i], v);
  g = std::max(g, dot(duals_[(i + 1) % n], v));
  g = std::max(g, dot(duals_[(i + n - 1) % n], v));
  return g;
}

double UnitDisk::directional_derivative(Vec2 w, Vec2 e) const {
  if (w.x == 0.0 && w.y == 0.0) return gauge(e);
  const std::size_t n = duals_.size();
  const std::size_t i = sector_of(w);
  const double g = gauge(w);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j : {(i + n - 1) % n, i, (i + 1) % n}) {
    if (dot(duals_[j], w) >= g * (1.0 - 1e-12)) best = std::max(best, dot(duals_[j], e));
  }
  return best;
}

Vec2 UnitDisk::unit_vector(double theta) const {
  const Vec2 d = direction(theta);
  return d / gauge(d);
}

SupportLine support(const ConvexBody& body, Vec2 normal) {
  if (!(euclidean_norm(normal) > 0.0) || !is_finite(normal)) throw ArgumentError("support: zero normal");
  const Vec2 nu = normalized(normal);
  const std::size_t k = body.support_vertex(nu);
  auto parallel_edge = [&](std::size_t i) {
    const Vec2 e = body.edge(i);
    const Vec2 outward = normalized(Vec2{e.y, -e.x});
    return std::abs(cross(outward, nu)) <= 1e-12 && dot(outward, nu) > 0.0;
  };
  SupportLine line;
  line.direction = perp(nu);
  line.theta = angle_of(line.direction);
  const std::size_t n = body.size();
  if (parallel_edge(k)) {
    line.contact = ContactKind::segment;
    line.segment_start = body.vertex(k);
    line.segment_end = body.vertex(k + 1);
  } else if (parallel_edge((k + n - 1) % n)) {
    line.contact = ContactKind::segment;
    line.segment_start = body.vertex(k + n - 1);
    line.segment_end = body.vertex(k);
  } else {
    line.contact = ContactKind::point;
    line.segment_start = line.segment_end = body.vertex(k);
  }
  line.point = line.segment_start;
  return line;
}

SupportLine support(const UnitDisk& disk, Vec2 normal) { return support(disk.body(), normal); }

bool is_birkhoff_orthogonal(const UnitDisk& disk, Vec2 v, Vec2 u, double tol) {
  const double gv = disk.gauge(v);
  const double gu = disk.gauge(u);
  if (!(gv > 0.0) || !(gu > 0.0)) throw ArgumentError("Birkhoff orthogonality needs non-zero vectors");
  auto phi = [&](double t) { return disk.gauge(v + t * u); };
  const double bound = 4.0 * gv / gu;
  constexpr double kInvPhi = 0.6180339887498949;
  double lo = -bound, hi = bound;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = phi(x1), f2 = phi(x2);
  double best = std::min({gv, f1, f2});
  for (int it = 0; it < 200 && hi - lo > 1e-14 * bound; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = phi(x1);
      best = std::min(best, f1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = phi(x2);
      best = std::min(best, f2);
    }
  }
  return best >= gv - tol;
}

BirkhoffDirection birkhoff_direction(const UnitDisk& disk, Vec2 v) {
  const double gv = disk.gauge(v);
  if (!(gv > 0.0)) throw ArgumentError("Birkhoff direction of the zero vector");
  const ConvexBody& body = disk.body();
  const std::size_t n = body.size();
  const std::size_t i = disk.sector_of(v);
  auto on_ray = [&](Vec2 vertex) {
    return std::abs(cross(normalized(vertex), normalized(v))) <= 1e-12 && dot(vertex, v) > 0.0;
  };
  BirkhoffDirection out;
  std::size_t corner = n;
  if (on_ray(body.vertex(i))) {
    corner = i;
  } else if (on_ray(body.vertex(i + 1))) {
    corner = (i + 1) % n;
  }
  if (corner == n) {
    out.direction = normalized(body.edge(i));
    out.cone_start = out.cone_end = out.direction;
    out.unique = true;
    return out;
  }
  out.cone_start = normalized(body.edge((corner + n - 1) % n));
  out.cone_end = normalized(body.edge(corner));
  out.direction = normalized(out.cone_start + out.cone_end);
  out.unique = false;
  return out;
}

double boundary_snap_tolerance(const ConvexBody& body) { return 1e-9 * body.diameter(); }

double boundary_arclength(const UnitDisk& disk, const ConvexBody& body, Vec2 from, Vec2 to) {
  const double tol = boundary_snap_tolerance(body);
  const BoundaryPoint a = body.locate(from, tol);
  const BoundaryPoint b = body.locate(to, tol);
  if (a.edge == b.edge && b.t >= a.t) return (b.t - a.t) * disk.gauge(body.edge(a.edge));
  double total = (1.0 - a.t) * disk.gauge(body.edge(a.edge));
  const std::size_t n = body.size();
  for (std::size_t e = (a.edge + 1) % n; e != b.edge; e = (e + 1) % n) total += disk.gauge(body.edge(e));
  total += b.t * disk.gauge(body.edge(b.edge));
  return total;
}

}  // namespace mchords
