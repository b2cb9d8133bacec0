#include "mchords/chordbound.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "mchords/errors.hpp"
#include "mchords/parallel.hpp"

namespace mchords {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInsideTol = 1e-12;
constexpr std::size_t kMaxRefinedResolution = 1u << 18;

// Point of segment [a, b] where gauge(. - center) reaches 1, given that it is
// <= 1 at a and > 1 at b.
Vec2 crossing(const UnitDisk& disk, Vec2 center, Vec2 a, Vec2 b) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 64 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (disk.gauge(a + mid * (b - a) - center) <= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return a + lo * (b - a);
}

ConvexBody intersect_at_origin(const UnitDisk& disk, Vec2 v) {
  const double gv = disk.gauge(v);
  if (!(gv <= 2.0)) {
    throw GeometryError(fmt::format("translates are disjoint (distance {} > 2)", gv));
  }
  const ConvexBody& m = disk.body();
  const std::size_t n = m.size();
  // The boundary arc of M inside v+M is connected; the rest of the boundary
  // of the intersection is its reflection through v/2.
  std::vector<char> inside(n);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    inside[i] = disk.gauge(m.vertex(i) - v) <= 1.0 + kInsideTol;
    count += inside[i] ? 1 : 0;
  }
  std::vector<Vec2> pts;
  if (count == 0) {
    const auto clipped = clip_convex(m, m.translated(v));
    if (!clipped) throw GeometryError("intersection of the translates has empty interior");
    return *clipped;
  }
  pts.reserve(2 * count + 4);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (inside[i]) pts.push_back(m.vertex(i));
    if (inside[i] && !inside[j]) pts.push_back(crossing(disk, v, m.vertex(i), m.vertex(j)));
    if (!inside[i] && inside[j]) pts.push_back(crossing(disk, v, m.vertex(j), m.vertex(i)));
  }
  const std::size_t half = pts.size();
  for (std::size_t i = 0; i < half; ++i) pts.push_back(v - pts[i]);
  const std::vector<Vec2> hull = convex_hull(pts);
  if (hull.size() < 3) throw GeometryError("intersection of the translates has empty interior");
  double area2 = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) area2 += cross(hull[i], hull[(i + 1) % hull.size()]);
  if (area2 <= 1e-14 * m.diameter() * m.diameter()) {
    throw GeometryError("intersection of the translates has empty interior");
  }
  return ConvexBody::from_vertices(hull, m.exact_polygon());
}

double lm_once(const UnitDisk& disk, double direction) {
  return 0.5 * perimeter(disk, intersect_at_origin(disk, disk.unit_vector(direction)));
}

// Refinement chain shared by the directions of a sweep.
class RefineChain {
 public:
  explicit RefineChain(const UnitDisk& disk) { levels_.push_back(disk); }

  // Extends the chain on the calling thread; call before parallel use.
  void extend_to(std::size_t depth) {
    while (levels_.size() < depth && levels_.back().refinable() &&
           levels_.back().resolution() * 2 <= kMaxRefinedResolution) {
      levels_.push_back(levels_.back().refined());
    }
  }
  std::size_t size() const { return levels_.size(); }
  const UnitDisk& at(std::size_t i) const { return levels_[i]; }

 private:
  std::vector<UnitDisk> levels_;
};

// Value at the first level whose successor changes it by < 1e-6, or the
// deepest level available. `converged` reports which case applied.
double refined_value(const RefineChain& chain, double direction, bool& converged) {
  double value = lm_once(chain.at(0), direction);
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const double next = lm_once(chain.at(i), direction);
    if (std::abs(next - value) < 1e-6) {
      converged = true;
      return next;
    }
    value = next;
  }
  converged = chain.size() == 1;
  return value;
}

double lm_with_chain(RefineChain& chain, double direction) {
  bool converged = false;
  double value = refined_value(chain, direction, converged);
  while (!converged && chain.at(chain.size() - 1).refinable() &&
         chain.at(chain.size() - 1).resolution() * 2 <= kMaxRefinedResolution) {
    chain.extend_to(chain.size() + 1);
    value = refined_value(chain, direction, converged);
  }
  return value;
}

// Boundary of M from a to -a in CCW order, for a on the boundary.
std::vector<Vec2> half_boundary(const UnitDisk& disk, Vec2 a) {
  const ConvexBody& m = disk.body();
  const BoundaryPoint at = m.locate(a, boundary_snap_tolerance(m));
  const std::size_t n = m.size();
  std::vector<Vec2> arc;
  arc.reserve(n / 2 + 2);
  arc.push_back(at.point);
  for (std::size_t k = 1; k <= n / 2; ++k) arc.push_back(m.vertex(at.edge + k));
  if (!at.at_vertex) arc.push_back(-at.point);
  return arc;
}

struct ArcParam {
  std::vector<Vec2> pts;
  std::vector<double> cum;

  Vec2 at(double s) const {
    const auto it = std::upper_bound(cum.begin(), cum.end(), s);
    std::size_t i = it == cum.begin() ? 0 : static_cast<std::size_t>(it - cum.begin()) - 1;
    i = std::min(i, pts.size() - 2);
    const double len = cum[i + 1] - cum[i];
    const double t = len > 0.0 ? std::clamp((s - cum[i]) / len, 0.0, 1.0) : 0.0;
    return pts[i] + t * (pts[i + 1] - pts[i]);
  }
  double total() const { return cum.back(); }
};

ArcParam parametrize(std::vector<Vec2> pts) {
  ArcParam arc{std::move(pts), {}};
  arc.cum.assign(arc.pts.size(), 0.0);
  for (std::size_t i = 1; i < arc.pts.size(); ++i) {
    arc.cum[i] = arc.cum[i - 1] + euclidean_norm(arc.pts[i] - arc.pts[i - 1]);
  }
  return arc;
}

// sup{s : pred(s)} for a predicate true at 0, false at the end and monotone.
template <class Pred>
double last_true(const ArcParam& arc, Pred pred) {
  double lo = 0.0, hi = arc.total();
  for (int it = 0; it < 200 && hi - lo > 1e-15 * arc.total(); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (pred(arc.at(mid))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

double perimeter(const UnitDisk& disk, const ConvexBody& body) {
  double total = 0.0;
  for (std::size_t i = 0; i < body.size(); ++i) total += disk.gauge(body.edge(i));
  return total;
}

ConvexBody intersect_translates(const UnitDisk& disk, Vec2 p, Vec2 q) {
  if (!is_finite(p) || !is_finite(q)) throw ArgumentError("translate centers must be finite");
  return intersect_at_origin(disk, q - p).translated(p);
}

double lm(const UnitDisk& disk, double direction, bool refine) {
  if (!std::isfinite(direction)) throw ArgumentError("direction must be finite");
  if (!refine || !disk.refinable()) return lm_once(disk, direction);
  RefineChain chain(disk);
  return lm_with_chain(chain, direction);
}

LmProfile lm_sweep(const UnitDisk& disk, std::size_t n, bool refine) {
  if (n < 4) throw ArgumentError("lm_sweep needs at least 4 directions");
  std::vector<double> dirs;
  dirs.reserve(n + disk.resolution());
  for (std::size_t i = 0; i < n; ++i) dirs.push_back(kPi * static_cast<double>(i) / static_cast<double>(n));
  if (disk.flags().polygonal) {
    for (const Vec2& v : disk.vertices()) {
      double a = std::fmod(wrap_two_pi(angle_of(v)), kPi);
      if (a >= kPi) a = 0.0;
      dirs.push_back(a);
    }
  }
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end(), [](double a, double b) { return b - a <= 1e-14; }), dirs.end());

  RefineChain chain(disk);
  if (refine) chain.extend_to(3);
  LmProfile profile;
  profile.directions = dirs;
  profile.values.assign(dirs.size(), 0.0);
  std::vector<char> unconverged(dirs.size(), 0);
  parallel_for(dirs.size(), [&](std::size_t i) {
    bool converged = true;
    profile.values[i] = refine ? refined_value(chain, dirs[i], converged) : lm_once(disk, dirs[i]);
    unconverged[i] = converged ? 0 : 1;
  });
  // Directions that need a deeper chain are finished sequentially.
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    if (unconverged[i]) profile.values[i] = lm_with_chain(chain, dirs[i]);
  }
  const auto [lo, hi] = std::minmax_element(profile.values.begin(), profile.values.end());
  profile.min = *lo;
  profile.argmin = dirs[static_cast<std::size_t>(lo - profile.values.begin())];
  profile.max = *hi;
  profile.argmax = dirs[static_cast<std::size_t>(hi - profile.values.begin())];
  return profile;
}

Hexagon inscribed_hexagon(const UnitDisk& disk, Vec2 p) {
  const ArcParam arc = parametrize(half_boundary(disk, p));
  const Vec2 start = arc.pts.front();
  auto f = [&](Vec2 b) { return disk.gauge(b - start) - 1.0; };
  const double s_a = last_true(arc, [&](Vec2 b) { return f(b) < 0.0; });
  const double s_b = last_true(arc, [&](Vec2 b) { return f(b) <= 1e-12; });
  Hexagon hex;
  const Vec2 v = start;
  const Vec2 w = arc.at(s_a);
  hex.vertices = {v, w, w - v, -v, -w, v - w};
  hex.unique = s_b - s_a <= 1e-9 * disk.body().euclidean_perimeter();
  for (const Vec2& x : hex.vertices) {
    if (std::abs(disk.gauge(x) - 1.0) > 1e-8) {
      throw std::logic_error(fmt::format("inscribed hexagon vertex off the boundary by {}", disk.gauge(x) - 1.0));
    }
  }
  return hex;
}

void validate_hexagon(const UnitDisk& disk, const Hexagon& hex) {
  const Vec2 v = hex.vertices[0];
  const Vec2 w = hex.vertices[1];
  const std::array<Vec2, 6> expected{v, w, w - v, -v, -w, v - w};
  for (std::size_t i = 0; i < 6; ++i) {
    if (euclidean_norm(hex.vertices[i] - expected[i]) > 1e-8) {
      throw ArgumentError(fmt::format("hexagon vertex {} breaks the pattern (v, w, w-v, -v, -w, v-w)", i));
    }
    if (std::abs(disk.gauge(hex.vertices[i]) - 1.0) > 1e-8) {
      throw ArgumentError(fmt::format("hexagon vertex {} is not on the unit circle", i));
    }
  }
}

ReuleauxTriangle reuleaux(const UnitDisk& disk, const Hexagon& hex) {
  validate_hexagon(disk, hex);
  const ConvexBody lens = intersect_translates(disk, hex.vertices[0], hex.vertices[1]);
  const auto body = clip_convex(lens, disk.body());
  if (!body) throw GeometryError("Reuleaux triangle is degenerate");
  ReuleauxTriangle out{*body, perimeter(disk, *body)};
  const double half = 0.5 * perimeter(disk, disk.body());
  if (std::abs(out.perimeter - half) > 1e-6) {
    throw std::logic_error(fmt::format("Reuleaux perimeter {} differs from half the disk perimeter {}", out.perimeter, half));
  }
  return out;
}

std::array<double, 6> hexagon_arcs(const UnitDisk& disk, const Hexagon& hex) {
  std::array<double, 6> arcs{};
  for (std::size_t i = 0; i < 6; ++i) {
    arcs[i] = boundary_arclength(disk, disk.body(), hex.vertices[i], hex.vertices[(i + 1) % 6]);
  }
  return arcs;
}

LowerBoundCertificate lower_bound_certificate(const UnitDisk& disk, double direction) {
  LowerBoundCertificate cert;
  cert.q = disk.unit_vector(direction);
  cert.x = inscribed_hexagon(disk, cert.q).vertices[1];
  cert.x_reflected = cert.q - cert.x;
  const std::array<Vec2, 4> cycle{Vec2{}, cert.x_reflected, cert.q, cert.x};
  for (std::size_t i = 0; i < 4; ++i) cert.quad_perimeter += disk.gauge(cycle[(i + 1) % 4] - cycle[i]);
  const ConvexBody x_body = intersect_translates(disk, {}, cert.q);
  const double tol = 1e-9 * x_body.diameter();
  cert.quad_inside = std::all_of(cycle.begin(), cycle.end(), [&](Vec2 c) { return x_body.contains(c, tol); });
  return cert;
}

UpperBoundCertificate upper_bound_certificate(const UnitDisk& disk, double direction) {
  UpperBoundCertificate cert;
  const Vec2 u = disk.unit_vector(direction);
  cert.q = u;
  const ConvexBody x_body = intersect_translates(disk, {}, u);
  // Outward normal of u+M at 0 (the boundary point u + (-u)).
  const Vec2 t = birkhoff_direction(disk, -u).direction;
  const Vec2 n{t.y, -t.x};
  const Vec2 nu = perp(normalized(u));
  double h_plus = -std::numeric_limits<double>::infinity();
  double h_minus = std::numeric_limits<double>::infinity();
  for (const Vec2& x : x_body.vertices()) {
    h_plus = std::max(h_plus, dot(nu, x));
    h_minus = std::min(h_minus, dot(nu, x));
  }
  const Mat2 rows_inv = Mat2{n.x, n.y, nu.x, nu.y}.inverse();
  const double c_p = 0.0;
  const double c_q = dot(n, u);
  cert.corners = {rows_inv * Vec2{c_p, h_plus}, rows_inv * Vec2{c_q, h_plus}, rows_inv * Vec2{c_q, h_minus},
                  rows_inv * Vec2{c_p, h_minus}};
  for (std::size_t i = 0; i < 4; ++i) {
    cert.parallelogram_perimeter += disk.gauge(cert.corners[(i + 1) % 4] - cert.corners[i]);
  }
  cert.gauge_plus = disk.gauge(cert.corners[0]);
  cert.gauge_minus = disk.gauge(cert.corners[3]);
  const double tol = 1e-9 * x_body.diameter();
  cert.contains_intersection = std::all_of(x_body.vertices().begin(), x_body.vertices().end(), [&](Vec2 x) {
    const double a = dot(n, x);
    const double b = dot(nu, x);
    return a <= c_p + tol && a >= c_q - tol && b <= h_plus + tol && b >= h_minus - tol;
  });
  return cert;
}

std::vector<double> family_angles(std::size_t k) {
  std::vector<double> out(k);
  for (std::size_t j = 0; j < k; ++j) out[j] = kPi * static_cast<double>(j) / static_cast<double>(k);
  return out;
}

UnitDisk family_disk(const DiskFamilyParams& params, DiskFamilyParams* repaired) {
  const std::size_t k = params.k;
  if (k < 2 || params.radii.size() != k) throw ArgumentError("disk family needs k >= 2 radii");
  const std::vector<double> angles = family_angles(k);
  std::vector<Vec2> pts;
  pts.reserve(2 * k);
  for (std::size_t j = 0; j < k; ++j) {
    if (!(params.radii[j] > 0.0) || !std::isfinite(params.radii[j])) {
      throw ArgumentError(fmt::format("radius {} must be positive and finite", j));
    }
    pts.push_back(params.radii[j] * direction(angles[j]));
  }
  for (std::size_t j = 0; j < k; ++j) pts.push_back(-pts[j]);
  UnitDisk disk = UnitDisk::polygon(convex_hull(pts));
  if (repaired) {
    repaired->k = k;
    repaired->radii.resize(k);
    for (std::size_t j = 0; j < k; ++j) repaired->radii[j] = 1.0 / disk.gauge(direction(angles[j]));
  }
  return disk;
}

MaxMinResult maxmin_search(std::size_t k, std::size_t budget, std::uint64_t seed, std::size_t sweep_n) {
  if (k < 3) throw ArgumentError("maxmin_search needs k >= 3");
  std::size_t evaluations = 0;
  auto objective = [&](const std::vector<double>& log_r) {
    DiskFamilyParams params{k, std::vector<double>(k)};
    for (std::size_t j = 0; j < k; ++j) params.radii[j] = std::exp(log_r[j]);
    ++evaluations;
    return lm_sweep(family_disk(params), sweep_n, false).min;
  };

  std::vector<double> best_x(k, 0.0);
  double best_f = objective(best_x);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> step_size(0.02, 0.15);
  std::bernoulli_distribution coin(0.5);

  constexpr std::size_t kRestarts = 3;
  for (std::size_t restart = 0; restart < kRestarts; ++restart) {
    const std::size_t remaining = budget > evaluations - 1 ? budget - (evaluations - 1) : 0;
    const std::size_t local_budget = remaining / (kRestarts - restart);
    if (local_budget < k + 2) continue;
    const std::size_t stop_at = evaluations + local_budget;

    // Maximize by minimizing -objective.
    std::vector<std::vector<double>> simplex(k + 1, best_x);
    std::vector<double> values(k + 1, -best_f);
    for (std::size_t i = 0; i < k; ++i) {
      simplex[i + 1][i] += coin(rng) ? step_size(rng) : -step_size(rng);
      values[i + 1] = -objective(simplex[i + 1]);
    }
    auto consider = [&](const std::vector<double>& x, double value) {
      if (-value > best_f) {
        best_f = -value;
        best_x = x;
      }
    };
    for (std::size_t i = 0; i <= k; ++i) consider(simplex[i], values[i]);

    std::vector<std::size_t> order(k + 1);
    while (evaluations + 2 <= stop_at) {
      for (std::size_t i = 0; i <= k; ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
      const std::size_t worst = order[k];
      const std::size_t second = order[k - 1];
      const std::size_t best = order[0];
      std::vector<double> centroid(k, 0.0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) centroid[j] += simplex[order[i]][j] / static_cast<double>(k);
      }
      auto along = [&](double coef) {
        std::vector<double> x(k);
        for (std::size_t j = 0; j < k; ++j) x[j] = centroid[j] + coef * (simplex[worst][j] - centroid[j]);
        return x;
      };
      const std::vector<double> xr = along(-1.0);
      const double fr = -objective(xr);
      consider(xr, fr);
      if (fr < values[best]) {
        const std::vector<double> xe = along(-2.0);
        const double fe = -objective(xe);
        consider(xe, fe);
        if (fe < fr) {
          simplex[worst] = xe;
          values[worst] = fe;
        } else {
          simplex[worst] = xr;
          values[worst] = fr;
        }
      } else if (fr < values[second]) {
        simplex[worst] = xr;
        values[worst] = fr;
      } else {
        const bool outside = fr < values[worst];
        const std::vector<double> xc = along(outside ? -0.5 : 0.5);
        const double fc = -objective(xc);
        consider(xc, fc);
        if (fc < std::min(fr, values[worst])) {
          simplex[worst] = xc;
          values[worst] = fc;
        } else {
          // Shrink toward the best vertex.
          for (std::size_t i = 0; i <= k && evaluations < stop_at; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < k; ++j) simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
            values[i] = -objective(simplex[i]);
            consider(simplex[i], values[i]);
          }
        }
      }
    }
  }

  MaxMinResult result;
  DiskFamilyParams params{k, std::vector<double>(k)};
  for (std::size_t j = 0; j < k; ++j) params.radii[j] = std::exp(best_x[j]);
  family_disk(params, &result.params);
  result.angles = family_angles(k);
  result.objective = best_f;
  result.evaluations = evaluations;
  return result;
}

}  // namespace mchords
