#include "mchords/curvekit.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

#include "mchords/errors.hpp"
#include "mchords/parallel.hpp"

namespace mchords {

void validate(const Polyline& curve) {
  if (curve.points.size() < 2) throw ArgumentError("curve needs at least 2 points");
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    if (!is_finite(curve.points[i])) throw ArgumentError(fmt::format("curve point {} is not finite", i));
    if (i > 0 && euclidean_norm(curve.points[i] - curve.points[i - 1]) <= 1e-12) {
      throw ArgumentError(fmt::format("curve points {} and {} coincide", i - 1, i));
    }
  }
}

double arclength(const UnitDisk& disk, const Polyline& curve) {
  double total = 0.0;
  const auto& pts = curve.points;
  for (std::size_t i = 1; i < pts.size(); ++i) total += disk.gauge(pts[i] - pts[i - 1]);
  if (curve.closed && pts.size() > 2) total += disk.gauge(pts.front() - pts.back());
  return total;
}

CheckMode default_mode(const UnitDisk& disk) {
  return disk.flags().polygonal ? CheckMode::exact_polygonal : CheckMode::tolerance;
}

double default_tolerance(const UnitDisk& disk) { return disk.flags().polygonal ? 1e-9 : 1e-6; }

namespace {

// Parameters t in (0, 1), ascending, where p + t (q - p) crosses a vertex ray
// of M (or the origin).
void ray_crossings(const UnitDisk& disk, Vec2 p, Vec2 q, std::vector<double>& out) {
  out.clear();
  const Vec2 d = q - p;
  const double c = cross(p, q);
  const double lp = euclidean_norm(p);
  const double lq = euclidean_norm(q);
  if (std::abs(c) <= 1e-14 * lp * lq) {
    if (dot(p, q) < 0.0) out.push_back(lp / (lp + lq));
    return;
  }
  const std::span<const double> ang = disk.vertex_angles();
  const std::span<const Vec2> verts = disk.vertices();
  const std::size_t n = ang.size();
  // The segment sweeps less than a half turn, counterclockwise from lo to hi.
  const Vec2 lo = c > 0.0 ? p : q;
  const Vec2 hi = c > 0.0 ? q : p;
  const std::size_t first = static_cast<std::size_t>(std::upper_bound(ang.begin(), ang.end(), angle_of(lo)) - ang.begin());
  for (std::size_t step = 0; step < n; ++step) {
    const Vec2 v = verts[(first + step) % n];
    if (!(cross(lo, v) > 0.0 && cross(v, hi) > 0.0)) {
      if (step == 0 && cross(lo, v) <= 0.0) continue;  // ray at the angle of lo itself
      break;
    }
    const double t = -cross(v, p) / cross(v, d);
    if (t > 0.0 && t < 1.0) out.push_back(t);
  }
  if (c < 0.0) std::reverse(out.begin(), out.end());
}

// Minimum of the gauge on the segment from w to w + e. Along the line the
// gauge is convex and smallest on the ray through the support point of M
// whose normal is perpendicular to e.
double segment_min(const UnitDisk& disk, Vec2 w, Vec2 e) {
  double lowest = std::min(disk.gauge(w), disk.gauge(w + e));
  const Vec2 nu = perp(e);
  const double side = dot(nu, w);
  if (side == 0.0) {
    const double t = -dot(w, e) / dot(e, e);
    return t > 0.0 && t < 1.0 ? 0.0 : lowest;
  }
  const Vec2 z = disk.vertices()[disk.support_index(side > 0.0 ? nu : -nu)];
  const double denom = cross(z, e);
  if (denom != 0.0) {
    const double t = -cross(z, w) / denom;
    if (t > 0.0 && t < 1.0) lowest = std::min(lowest, disk.gauge(w + t * e));
  }
  return lowest;
}

// Decrease of gauge(w + s e) over s in [0, 1].
double dip(const UnitDisk& disk, Vec2 w, Vec2 e) {
  if (disk.directional_derivative(w, e) >= 0.0) return 0.0;
  return std::max(0.0, disk.gauge(w) - segment_min(disk, w, e));
}

// Largest decrease of gauge(w(r) + s e) over s in [0, 1], for the anchor
// offsets w(r) = w0 + r (w1 - w0), r in [0, 1]. The gauge decreases along e
// exactly on the open half-plane left of the support point z for normal
// perp(e), so most pairs are settled by two cross products. Otherwise the
// decrease is piecewise linear in r, breaking where w(r) or w(r) + e crosses
// a vertex ray, and 2 gauge(w1 - w0)-Lipschitz; a branch and bound over the
// breakpoints finds its maximum, or shows it stays below tol.
double sweep_dip(const UnitDisk& disk, Vec2 w0, Vec2 w1, Vec2 e, double tol, std::vector<double>& cuts,
                 std::vector<double>& candidates) {
  const Vec2 z = disk.vertices()[disk.support_index(perp(e))];
  if (std::max(cross(z, w0), cross(z, w1)) <= 0.0) return 0.0;
  const Vec2 d = w1 - w0;
  ray_crossings(disk, w0, w1, candidates);
  ray_crossings(disk, w0 + e, w1 + e, cuts);
  candidates.insert(candidates.end(), cuts.begin(), cuts.end());
  candidates.push_back(0.0);
  candidates.push_back(1.0);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  const double lipschitz = 2.0 * disk.gauge(d);
  auto value = [&](std::size_t i) { return dip(disk, w0 + candidates[i] * d, e); };
  const std::size_t last = candidates.size() - 1;
  double best = std::max(value(0), value(last));
  struct Range {
    std::size_t i, j;
    double fi, fj;
  };
  std::vector<Range> stack{{0, last, value(0), value(last)}};
  while (!stack.empty()) {
    const Range r = stack.back();
    stack.pop_back();
    if (r.j - r.i < 2) continue;
    const double bound = 0.5 * (r.fi + r.fj + lipschitz * (candidates[r.j] - candidates[r.i]));
    if (bound <= std::max(best, tol)) continue;
    const std::size_t mid = (r.i + r.j) / 2;
    const double fm = value(mid);
    best = std::max(best, fm);
    stack.push_back({r.i, mid, r.fi, fm});
    stack.push_back({mid, r.j, fm, r.fj});
  }
  return best;
}

}  // namespace

double edge_dip(const UnitDisk& disk, Vec2 anchor, Vec2 a, Vec2 b) { return dip(disk, a - anchor, b - a); }

namespace {

struct Collector {
  std::size_t limit;
  std::vector<ChordWitness> items;
  double max_deficit = 0.0;

  void add(std::array<std::size_t, 4> idx, double deficit, double tol) {
    max_deficit = std::max(max_deficit, deficit);
    if (deficit <= tol) return;
    items.push_back({idx, deficit});
    if (items.size() > 4 * limit) trim();
  }
  void trim() {
    std::sort(items.begin(), items.end(), [](const ChordWitness& l, const ChordWitness& r) {
      return l.deficit > r.deficit || (l.deficit == r.deficit && l.indices < r.indices);
    });
    if (items.size() > limit) items.resize(limit);
  }
};

constexpr std::size_t kMaxWitnesses = 8;

ChordReport merge(std::vector<Collector>& parts, CheckMode mode, double tol) {
  Collector all{kMaxWitnesses, {}, 0.0};
  for (Collector& part : parts) {
    all.max_deficit = std::max(all.max_deficit, part.max_deficit);
    all.items.insert(all.items.end(), part.items.begin(), part.items.end());
  }
  all.trim();
  ChordReport report;
  report.mode = mode;
  report.tol = tol;
  report.max_deficit = all.max_deficit;
  report.holds = all.max_deficit <= tol;
  if (!report.holds) report.witnesses = std::move(all.items);
  return report;
}

// Vertex anchor i against vertex targets up to `last` and back to `first`.
void scan_vertices(const UnitDisk& disk, std::span<const Vec2> f, std::size_t i, std::size_t first, std::size_t last,
                   double tol, Collector& out) {
  const Vec2 x = f[i];
  double run = 0.0;
  std::size_t run_idx = i;
  for (std::size_t k = i + 1; k <= last; ++k) {
    const double d = disk.gauge(f[k] - x);
    if (run - d > 0.0) out.add({i, i, run_idx, k}, run - d, tol);
    if (d > run) {
      run = d;
      run_idx = k;
    }
  }
  run = 0.0;
  run_idx = i;
  for (std::size_t k = i; k-- > first;) {
    const double d = disk.gauge(f[k] - x);
    if (run - d > 0.0) out.add({k, run_idx, i, i}, run - d, tol);
    if (d > run) {
      run = d;
      run_idx = k;
    }
  }
}

// Edge a (anchor side) against every later edge b up to `last_edge`: the
// target moving forward along b from anchors on a, and the target moving
// backward along a from anchors on b.
void scan_edges(const UnitDisk& disk, std::span<const Vec2> f, std::size_t a, std::size_t last_edge, double tol,
                Collector& out) {
  std::vector<double> cuts, candidates;
  const Vec2 ea = f[a + 1] - f[a];
  for (std::size_t b = a + 1; b <= last_edge; ++b) {
    const Vec2 eb = f[b + 1] - f[b];
    const double forward = sweep_dip(disk, f[b] - f[a], f[b] - f[a + 1], eb, tol, cuts, candidates);
    out.add({a, a + 1, b, b + 1}, forward, tol);
    const double backward = sweep_dip(disk, f[a + 1] - f[b], f[a + 1] - f[b + 1], -ea, tol, cuts, candidates);
    out.add({a, a + 1, b, b + 1}, backward, tol);
  }
}

ChordReport run_chord_check(const UnitDisk& disk, const Polyline& curve, std::span<const double> params, double span,
                            std::optional<double> tol) {
  validate(curve);
  if (curve.closed) throw ArgumentError("increasing chord check needs an open curve");
  const CheckMode mode = default_mode(disk);
  const double t = tol.value_or(default_tolerance(disk));
  const std::span<const Vec2> f = curve.points;
  const std::size_t n = f.size();
  std::vector<Collector> parts(n, Collector{kMaxWitnesses, {}, 0.0});
  parallel_for(n, [&](std::size_t i) {
    std::size_t first = 0, last = n - 1;
    if (!params.empty()) {
      while (first < i && params[i] - params[first] > span) ++first;
      while (last > i && params[last] - params[i] > span) --last;
    }
    scan_vertices(disk, f, i, first, last, t, parts[i]);
    // Edge pairs whose four endpoints lie in one window.
    if (i + 1 < n && last > i + 1) scan_edges(disk, f, i, last - 1, t, parts[i]);
  });
  return merge(parts, mode, t);
}

}  // namespace

ChordReport check_increasing_chords(const UnitDisk& disk, const Polyline& curve, std::optional<double> tol) {
  return run_chord_check(disk, curve, {}, 0.0, tol);
}

ChordReport check_increasing_chords_windowed(const UnitDisk& disk, const Polyline& curve,
                                             std::span<const double> params, double span,
                                             std::optional<double> tol) {
  if (params.size() != curve.points.size()) throw ArgumentError("one parameter per curve point required");
  for (std::size_t i = 1; i < params.size(); ++i) {
    if (params[i] < params[i - 1]) throw ArgumentError("curve parameters must be nondecreasing");
  }
  return run_chord_check(disk, curve, params, span, tol);
}

ChordReport check_increasing_wrt_set(const UnitDisk& disk, const Polyline& curve, std::span<const Vec2> anchors,
                                     std::optional<double> tol) {
  validate(curve);
  if (anchors.empty()) throw ArgumentError("anchor set is empty");
  const CheckMode mode = default_mode(disk);
  const double t = tol.value_or(default_tolerance(disk));
  const std::span<const Vec2> f = curve.points;
  std::vector<Collector> parts(anchors.size(), Collector{kMaxWitnesses, {}, 0.0});
  parallel_for(anchors.size(), [&](std::size_t a) {
    const Vec2 p = anchors[a];
    double run = -1.0;
    std::size_t run_idx = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      const double d = disk.gauge(f[k] - p);
      if (run - d > 0.0) parts[a].add({a, run_idx, k, k}, run - d, t);
      if (d > run) {
        run = d;
        run_idx = k;
      }
      if (k + 1 < f.size()) parts[a].add({a, k, k + 1, k + 1}, dip(disk, f[k] - p, f[k + 1] - f[k]), t);
    }
  });
  return merge(parts, mode, t);
}

BisectorSample bisector_sample(const UnitDisk& disk, Vec2 a, Vec2 b, std::pair<double, double> y_range,
                               std::size_t n) {
  if (!disk.flags().strictly_convex) {
    throw UnsupportedError("bisectors are only sampled for strictly convex disks (they may contain 2-D pieces)");
  }
  const double len = euclidean_norm(b - a);
  if (!(len > 0.0)) throw ArgumentError("bisector of a degenerate segment");
  if (n == 0) throw ArgumentError("bisector needs at least one sample");
  const Vec2 along = (b - a) / len;
  const Vec2 across = perp(along);
  const Vec2 mid = (a + b) * 0.5;
  BisectorSample out;
  out.seg = {a, b};
  for (std::size_t i = 0; i < n; ++i) {
    const double h =
        n == 1 ? y_range.first
               : y_range.first + (y_range.second - y_range.first) * static_cast<double>(i) / static_cast<double>(n - 1);
    const Vec2 base = mid + h * across;
    auto f = [&](double s) {
      const Vec2 x = base + s * along;
      return disk.gauge(x - a) - disk.gauge(x - b);
    };
    double lo = -len, hi = len;
    for (int it = 0; it < 80 && !(f(lo) < 0.0 && f(hi) > 0.0); ++it) {
      lo *= 2.0;
      hi *= 2.0;
    }
    if (!(f(lo) < 0.0 && f(hi) > 0.0)) throw GeometryError("bisector root could not be bracketed");
    const double stop = 1e-10 * std::max(1.0, len);
    while (hi - lo > stop) {
      const double m = 0.5 * (lo + hi);
      if (f(m) < 0.0) {
        lo = m;
      } else {
        hi = m;
      }
    }
    out.samples.points.push_back(base + 0.5 * (lo + hi) * along);
  }
  return out;
}

bool is_x_monotone(const Polyline& curve) {
  const auto& p = curve.points;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!(p[i].x > p[i - 1].x)) return false;
  }
  return p.size() >= 2;
}

std::vector<Vec2> convexified_edges(const Polyline& curve) {
  validate(curve);
  if (!is_x_monotone(curve)) throw PreconditionError("convexify needs a strictly x-monotone curve");
  std::vector<Vec2> edges;
  edges.reserve(curve.points.size() - 1);
  for (std::size_t i = 1; i < curve.points.size(); ++i) edges.push_back(curve.points[i] - curve.points[i - 1]);
  // All edges point into the right half-plane, so cross() orders them by angle.
  std::stable_sort(edges.begin(), edges.end(), [](Vec2 l, Vec2 r) { return cross(l, r) < 0.0; });
  std::vector<Vec2> merged;
  for (const Vec2& e : edges) {
    if (!merged.empty() && cross(merged.back(), e) == 0.0) {
      merged.back() += e;
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

Polyline convexify(const Polyline& curve) {
  const std::vector<Vec2> merged = convexified_edges(curve);
  Polyline out;
  out.points.reserve(merged.size() + 1);
  out.points.push_back(curve.points.front());
  Vec2 at = curve.points.front();
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    at += merged[i];
    out.points.push_back(at);
  }
  out.points.push_back(curve.points.back());
  return out;
}

NormalizedChord normalize_chord(const UnitDisk& disk, const Polyline& curve) {
  validate(curve);
  const Vec2 origin = curve.points.front();
  const Vec2 chord = curve.points.back() - origin;
  const double g = disk.gauge(chord);
  if (!(g > 0.0)) throw ArgumentError("curve endpoints coincide");
  const Vec2 u = chord / g;
  const Vec2 t = birkhoff_direction(disk, u).direction;
  const Mat2 frame = Mat2::columns(u, t).inverse();
  NormalizedChord out{disk.linear_image(frame), Polyline{}, {frame.a / g, frame.b / g, frame.c / g, frame.d / g}};
  out.curve.closed = curve.closed;
  out.curve.points.reserve(curve.points.size());
  for (const Vec2& p : curve.points) out.curve.points.push_back(out.map * (p - origin));
  out.curve.points.back() = Vec2{1.0, 0.0};
  return out;
}

}  // namespace mchords
