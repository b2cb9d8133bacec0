#include "mchords/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "mchords/chordbound.hpp"
#include "mchords/curvekit.hpp"
#include "mchords/generators.hpp"
#include "mchords/highdim.hpp"
#include "mchords/involute.hpp"
#include "mchords/normplane.hpp"

namespace mchords {

namespace {

constexpr double kPi = std::numbers::pi;

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool passed() const { return failure_.empty(); }
  std::string detail() const { return passed() ? fmt::format("{} checks", count_) : failure_; }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

struct NamedDisk {
  std::string name;
  UnitDisk disk;
};

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Vec2 random_vec(Rng& rng, double scale) { return {uniform(rng, -scale, scale), uniform(rng, -scale, scale)}; }

void normplane_suite(const UnitDisk& disk, Rng& rng, Checks& c) {
  for (int i = 0; i < 10000; ++i) {
    const Vec2 a = random_vec(rng, 3.0);
    const Vec2 b = random_vec(rng, 3.0);
    const double lhs = disk.gauge(a + b);
    const double rhs = disk.gauge(a) + disk.gauge(b);
    c.expect(lhs <= rhs + 1e-9, fmt::format("triangle inequality fails by {}", lhs - rhs));
    c.expect(std::abs(disk.gauge(a) - disk.gauge(-a)) <= 1e-12, "gauge is not symmetric");
  }
  for (int i = 0; i < 360; ++i) {
    const double g = disk.gauge(disk.unit_vector(2.0 * kPi * i / 360.0));
    c.expect(std::abs(g - 1.0) <= 1e-9, fmt::format("gauge(unit_vector) = {}", g));
  }
  // Birkhoff verdicts against a t-grid on [-10, 10]; a mismatch is only
  // counted when the grid deficit exceeds what the grid spacing can hide.
  constexpr int kGrid = 10000;
  for (int i = 0; i < 1000; ++i) {
    const Vec2 v = random_vec(rng, 1.0);
    const Vec2 u = (i % 2 == 0) ? birkhoff_direction(disk, v).direction : random_vec(rng, 1.0);
    if (disk.gauge(v) < 1e-3 || disk.gauge(u) < 1e-3) continue;
    double grid_min = disk.gauge(v);
    for (int k = 0; k <= kGrid; ++k) grid_min = std::min(grid_min, disk.gauge(v + (-10.0 + 20.0 * k / kGrid) * u));
    const double deficit = disk.gauge(v) - grid_min;
    const bool grid_says = deficit <= 1e-9;
    const bool verdict = is_birkhoff_orthogonal(disk, v, u);
    const double slack = disk.gauge(u) * 20.0 / kGrid;
    c.expect(verdict == grid_says || (!verdict && deficit <= slack),
             fmt::format("Birkhoff verdict {} disagrees with the grid (deficit {})", verdict, deficit));
    if (i % 2 == 0) c.expect(verdict, "support construction is not Birkhoff orthogonal");
  }
}

void curvekit_suite(const UnitDisk& disk, Rng& rng, Checks& c) {
  c.expect(check_increasing_chords(disk, Polyline{{{0, 0}, {1, 0}}}).holds, "segment fails the chord check");
  c.expect(!check_increasing_chords(disk, Polyline{{{0, 0}, {1, 0}, {0.5, 0.1}}}).holds, "backtracking curve passes");
  for (int i = 0; i < 50; ++i) {
    const Polyline curve = random_x_monotone_curve(rng, 20, 2.0);
    const std::vector<Vec2> edges = convexified_edges(curve);
    const Polyline out = convexify(curve);
    c.expect(out.points.front() == curve.points.front() && out.points.back() == curve.points.back(),
             "convexify moved an endpoint");
    const double before = arclength(disk, curve);
    const double after = arclength(disk, out);
    c.expect(std::abs(before - after) <= 1e-12 * before, fmt::format("convexify changed arclength by {}", after - before));
    for (std::size_t k = 1; k < edges.size(); ++k) {
      c.expect(cross(edges[k - 1], edges[k]) < 0.0, "convexified edge angles are not strictly decreasing");
    }
  }
  if (disk.flags().strictly_convex) {
    const auto sample = bisector_sample(disk, {0.0, 0.0}, {1.0, 0.3}, {-2.0, 2.0}, 21);
    for (const Vec2& x : sample.samples.points) {
      c.expect(std::abs(disk.gauge(x) - disk.gauge(x - Vec2{1.0, 0.3})) <= 1e-6, "bisector sample is not equidistant");
    }
  }
}

void involute_suite(const UnitDisk& sampled, Rng& rng, Checks& c) {
  // On the exact polygon the sampled involute resolves every corner.
  const UnitDisk disk = sampled.as_polygon();
  for (bool exact : {true, false}) {
    const ConvexBody base = random_convex_body(rng, exact);
    const Vec2 p = base.vertex(0);
    const InvoluteCurve inv = build_involute(disk, base, p, 0.0, 2.0 * kPi, 512);
    c.expect(euclidean_norm(inv.points.points.front() - p) <= 1e-12, "Gamma(0) != p");
    // Windows of width pi fail already for the circle. Width pi/2 holds for
    // these four norms but not for every norm.
    const ChordReport windows = check_increasing_chords_windowed(disk, inv.points, inv.thetas, kPi / 2.0);
    c.expect(windows.holds, fmt::format("width-pi/2 window violates increasing chords by {}", windows.max_deficit));
    const auto [first, last] = involute_window(inv, 0.0, kPi);
    Polyline half{{inv.points.points.begin() + static_cast<std::ptrdiff_t>(first),
                   inv.points.points.begin() + static_cast<std::ptrdiff_t>(last) + 1}};
    std::vector<Vec2> anchors(base.vertices().begin(), base.vertices().end());
    anchors.push_back(base.interior_point());
    const ChordReport wrt = check_increasing_wrt_set(disk, half, anchors);
    c.expect(wrt.holds, fmt::format("increasing chords with respect to C fail by {}", wrt.max_deficit));
    const auto& pts = inv.points.points;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
      const double turn = cross(pts[i] - pts[i - 1], pts[i + 1] - pts[i]);
      c.expect(turn >= -1e-8, "involute makes a right turn");
    }
  }
}

void chordbound_suite(const UnitDisk& disk, Checks& c) {
  const double perim = perimeter(disk, disk.body());
  c.expect(perim >= 6.0 - 1e-3 && perim <= 8.0 + 1e-9, fmt::format("self-perimeter {} outside [6, 8]", perim));
  const LmProfile profile = lm_sweep(disk, 90);
  c.expect(profile.min >= 2.0 - 1e-6 && profile.max <= 3.0 + 1e-6,
           fmt::format("L_M profile [{}, {}] outside [2, 3]", profile.min, profile.max));
  for (int i = 0; i < 12; ++i) {
    const double dir = kPi * i / 12.0;
    const LowerBoundCertificate low = lower_bound_certificate(disk, dir);
    c.expect(std::abs(low.quad_perimeter - 4.0) <= 1e-8 && low.quad_inside, "lower bound certificate fails");
    const UpperBoundCertificate up = upper_bound_certificate(disk, dir);
    c.expect(up.contains_intersection && up.gauge_plus <= 1.0 + 1e-8 && up.gauge_minus <= 1.0 + 1e-8 &&
                 up.parallelogram_perimeter <= 6.0 + 1e-6,
             "upper bound certificate fails");
    const Hexagon hex = inscribed_hexagon(disk, disk.unit_vector(dir));
    const ReuleauxTriangle tri = reuleaux(disk, hex);
    c.expect(std::abs(tri.perimeter - perim / 2.0) <= 1e-6, "Reuleaux perimeter is not half the self-perimeter");
    const Polyline two_sides = reuleaux_two_sides(disk, dir);
    const double len = arclength(disk, two_sides);
    const double bound = lm(disk, dir);
    c.expect(len <= bound + 1e-6, fmt::format("two Reuleaux sides ({}) exceed L_M ({})", len, bound));
  }
}

void highdim_suite(Checks& c) {
  for (std::size_t d = 1; d <= 12; ++d) {
    const PolylineD g = hypercube_curve(d);
    c.expect(chebyshev_arclength(g) == std::ldexp(1.0, static_cast<int>(d)) - 1.0, fmt::format("length of Gamma_{}", d));
    c.expect(is_hamiltonian_path(g), fmt::format("Gamma_{} is not a Hamiltonian path", d));
  }
  for (std::size_t d = 1; d <= 6; ++d) {
    c.expect(check_increasing_chords_dd(hypercube_curve(d), 8).holds, fmt::format("Gamma_{} fails increasing chords", d));
    c.expect(hypercube_step_violation(d, 2) == 0.0, fmt::format("doubling step facts fail for d={}", d));
  }
  PolylineD bent = hypercube_curve(3);
  bent.points[3][0] += 0.3;
  c.expect(!check_increasing_chords_dd(bent, 8).holds, "perturbed Gamma_3 passes");
}

}  // namespace

std::vector<SuiteResult> verify_all(std::uint64_t seed, std::size_t resolution,
                                    const std::function<void(const SuiteResult&)>& on_result) {
  const std::vector<NamedDisk> disks{{"euclidean", UnitDisk::euclidean(resolution)},
                                     {"square", UnitDisk::square()},
                                     {"hexagon", UnitDisk::regular_hexagon()},
                                     {"lp(4)", UnitDisk::lp(4.0, resolution)}};
  std::vector<SuiteResult> results;
  auto run = [&](const std::string& name, const std::function<void(Checks&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Checks checks;
    SuiteResult r;
    r.name = name;
    try {
      body(checks);
      r.passed = checks.passed();
      r.detail = checks.detail();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = fmt::format("exception: {}", e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };
  for (const NamedDisk& nd : disks) {
    Rng rng(seed);
    run("normplane/" + nd.name, [&](Checks& c) { normplane_suite(nd.disk, rng, c); });
    run("curvekit/" + nd.name, [&](Checks& c) { curvekit_suite(nd.disk, rng, c); });
    run("involute/" + nd.name, [&](Checks& c) { involute_suite(nd.disk, rng, c); });
    run("chordbound/" + nd.name, [&](Checks& c) { chordbound_suite(nd.disk, c); });
  }
  run("highdim", [&](Checks& c) { highdim_suite(c); });
  return results;
}

}  // namespace mchords
