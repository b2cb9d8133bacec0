#include "mchords/highdim.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

#include "mchords/errors.hpp"
#include "mchords/parallel.hpp"

namespace mchords {

namespace {

using Point = std::vector<double>;

Point minus(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j] - b[j];
  return out;
}

double max_norm(const Point& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// One-sided derivative of the max norm at w in direction e.
double max_norm_derivative(const Point& w, const Point& e) {
  const double g = max_norm(w);
  if (g == 0.0) return max_norm(e);
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (std::abs(w[j]) >= g * (1.0 - 1e-12)) best = std::max(best, w[j] > 0.0 ? e[j] : -e[j]);
  }
  return best;
}

void keep_worst(std::vector<ChordWitness>& items, std::size_t limit) {
  std::sort(items.begin(), items.end(), [](const ChordWitness& l, const ChordWitness& r) {
    return l.deficit > r.deficit || (l.deficit == r.deficit && l.indices < r.indices);
  });
  if (items.size() > limit) items.resize(limit);
}

}  // namespace

void validate(const PolylineD& curve) {
  if (curve.dim < 1) throw ArgumentError("curve dimension must be at least 1");
  if (curve.points.size() < 2) throw ArgumentError("curve needs at least 2 points");
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const Point& p = curve.points[i];
    if (p.size() != curve.dim) throw ArgumentError(fmt::format("point {} has {} coordinates, expected {}", i, p.size(), curve.dim));
    for (double x : p) {
      if (!std::isfinite(x)) throw ArgumentError(fmt::format("point {} is not finite", i));
    }
    if (i > 0 && max_norm(minus(p, curve.points[i - 1])) <= 1e-12) {
      throw ArgumentError(fmt::format("curve points {} and {} coincide", i - 1, i));
    }
  }
}

PolylineD hypercube_curve(std::size_t d) {
  if (d < 1 || d > 20) throw ArgumentError(fmt::format("hypercube dimension must be in [1, 20], got {}", d));
  PolylineD curve{1, {{0.0}, {1.0}}};
  for (std::size_t dim = 1; dim < d; ++dim) {
    PolylineD next{dim + 1, {}};
    next.points.reserve(2 * curve.points.size());
    for (const Point& p : curve.points) {
      Point q = p;
      q.push_back(0.0);
      next.points.push_back(std::move(q));
    }
    for (auto it = curve.points.rbegin(); it != curve.points.rend(); ++it) {
      Point q = *it;
      q.push_back(1.0);
      next.points.push_back(std::move(q));
    }
    curve = std::move(next);
  }
  return curve;
}

double chebyshev_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ArgumentError("points of different dimension");
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

double chebyshev_arclength(const PolylineD& curve) {
  double total = 0.0;
  for (std::size_t i = 1; i < curve.points.size(); ++i) total += chebyshev_distance(curve.points[i], curve.points[i - 1]);
  return total;
}

ChordReport check_increasing_chords_dd(const PolylineD& curve, std::size_t samples_per_edge, std::optional<double> tol) {
  validate(curve);
  const double t = tol.value_or(1e-9);
  std::vector<Point> f;
  f.reserve((curve.points.size() - 1) * (samples_per_edge + 1) + 1);
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    const Point& a = curve.points[i];
    const Point& b = curve.points[i + 1];
    for (std::size_t s = 0; s <= samples_per_edge; ++s) {
      const double u = static_cast<double>(s) / static_cast<double>(samples_per_edge + 1);
      Point p(curve.dim);
      for (std::size_t j = 0; j < curve.dim; ++j) p[j] = a[j] + u * (b[j] - a[j]);
      f.push_back(std::move(p));
    }
  }
  f.push_back(curve.points.back());

  constexpr std::size_t kLimit = 8;
  const std::size_t n = f.size();
  std::vector<std::vector<ChordWitness>> found(n);
  std::vector<double> worst(n, 0.0);
  parallel_for(n, [&](std::size_t i) {
    auto add = [&](std::array<std::size_t, 4> idx, double deficit) {
      worst[i] = std::max(worst[i], deficit);
      if (deficit > t) found[i].push_back({idx, deficit});
    };
    double run = 0.0;
    std::size_t run_idx = i;
    for (std::size_t k = i + 1; k < n; ++k) {
      const double d = chebyshev_distance(f[k], f[i]);
      if (run - d > 0.0) add({i, i, run_idx, k}, run - d);
      if (d > run) {
        run = d;
        run_idx = k;
      }
      if (k + 1 < n) add({i, i, k, k + 1}, std::max(0.0, -max_norm_derivative(minus(f[k], f[i]), minus(f[k + 1], f[k]))));
    }
    run = 0.0;
    run_idx = i;
    for (std::size_t k = i; k-- > 0;) {
      const double d = chebyshev_distance(f[k], f[i]);
      if (run - d > 0.0) add({k, run_idx, i, i}, run - d);
      if (d > run) {
        run = d;
        run_idx = k;
      }
      if (k >= 1) add({k - 1, k, i, i}, std::max(0.0, -max_norm_derivative(minus(f[k], f[i]), minus(f[k - 1], f[k]))));
    }
    keep_worst(found[i], kLimit);
  });

  ChordReport report;
  report.mode = CheckMode::exact_polygonal;
  report.tol = t;
  for (std::size_t i = 0; i < n; ++i) {
    report.max_deficit = std::max(report.max_deficit, worst[i]);
    report.witnesses.insert(report.witnesses.end(), found[i].begin(), found[i].end());
  }
  keep_worst(report.witnesses, kLimit);
  report.holds = report.max_deficit <= t;
  if (report.holds) report.witnesses.clear();
  return report;
}

bool is_hamiltonian_path(const PolylineD& curve) {
  if (curve.dim < 1 || curve.dim > 30) return false;
  const std::size_t count = std::size_t{1} << curve.dim;
  if (curve.points.size() != count) return false;
  std::vector<char> seen(count, 0);
  for (const Point& p : curve.points) {
    if (p.size() != curve.dim) return false;
    std::size_t code = 0;
    for (std::size_t j = 0; j < curve.dim; ++j) {
      if (p[j] == 1.0) {
        code |= std::size_t{1} << j;
      } else if (p[j] != 0.0) {
        return false;
      }
    }
    if (seen[code]) return false;
    seen[code] = 1;
  }
  return true;
}

double hypercube_step_violation(std::size_t d, std::size_t samples_per_edge) {
  const PolylineD base = hypercube_curve(d);
  std::vector<Point> samples;
  for (std::size_t i = 0; i + 1 < base.points.size(); ++i) {
    for (std::size_t s = 0; s <= samples_per_edge; ++s) {
      const double u = static_cast<double>(s) / static_cast<double>(samples_per_edge + 1);
      Point p(d);
      for (std::size_t j = 0; j < d; ++j) p[j] = base.points[i][j] + u * (base.points[i + 1][j] - base.points[i][j]);
      samples.push_back(std::move(p));
    }
  }
  samples.push_back(base.points.back());
  auto lift = [](Point p, double h) {
    p.push_back(h);
    return p;
  };
  double violation = 0.0;
  for (const Point& a : samples) {
    for (const Point& b : samples) {
      violation = std::max(violation, std::abs(chebyshev_distance(lift(a, 0.0), lift(b, 1.0)) - 1.0));
    }
  }
  // Bridge from (end, 0) to (end, 1): distances to the lower copy must not
  // decrease, distances to the upper copy must not increase.
  const Point& end = base.points.back();
  constexpr std::size_t kBridgeSteps = 64;
  for (const Point& a : samples) {
    double prev_low = -1.0;
    double prev_high = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s <= kBridgeSteps; ++s) {
      const Point z = lift(end, static_cast<double>(s) / kBridgeSteps);
      const double low = chebyshev_distance(z, lift(a, 0.0));
      const double high = chebyshev_distance(z, lift(a, 1.0));
      if (s > 0) {
        violation = std::max(violation, prev_low - low);
        violation = std::max(violation, high - prev_high);
      }
      prev_low = low;
      prev_high = high;
    }
  }
  return violation;
}

}  // namespace mchords
