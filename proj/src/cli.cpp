#include "mchords/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <ostream>

#include "mchords/chordbound.hpp"
#include "mchords/curvekit.hpp"
#include "mchords/errors.hpp"
#include "mchords/highdim.hpp"
#include "mchords/involute.hpp"
#include "mchords/io.hpp"
#include "mchords/svg.hpp"
#include "mchords/verify.hpp"

namespace mchords {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;

struct Options {
  std::size_t resolution = UnitDisk::kDefaultResolution;
  std::string disk = "builtin:euclidean";
  std::string curve;
  std::string out;
  std::string svg;
  std::optional<double> tol;
  double dir = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  // command specific
  std::string vec;
  std::string anchors;
  std::string base;
  std::string start;
  double theta_min = 0.0;
  double theta_max = 2.0 * std::numbers::pi;
  std::string p = "0,0";
  std::string q;
  std::string a;
  std::string b;
  double y_min = -1.0;
  double y_max = 1.0;
  std::size_t k = 16;
  std::size_t budget = 200;
  std::size_t sweep = 720;
  std::size_t d = 3;
  bool check = false;
  std::size_t samples_per_edge = 8;
};

std::string vec_json(Vec2 v) { return fmt::format("[{:.17g}, {:.17g}]", v.x, v.y); }

json points_json(std::span<const Vec2> pts) {
  json arr = json::array();
  for (const Vec2& v : pts) arr.push_back({v.x, v.y});
  return arr;
}

// Result text goes to --out when given, otherwise to stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    write_text(o.out, text);
  }
}

int report_exit(const ChordReport& r) { return r.holds ? kOk : kViolated; }

ConvexBody load_base(const std::string& spec, std::size_t resolution) {
  if (spec.rfind("builtin:", 0) == 0 || (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")) {
    return load_disk(spec, resolution).body();
  }
  const Polyline pts = parse_curve_csv(read_text(spec));
  return ConvexBody::from_vertices(pts.points, true);
}

std::vector<Vec2> load_anchors(const std::string& path) { return parse_curve_csv(read_text(path)).points; }

int cmd_gauge(const Options& o, std::ostream& out) {
  const UnitDisk disk = load_disk(o.disk, o.resolution);
  out << fmt::format("{:.12g}\n", disk.gauge(parse_vec2(o.vec)));
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const UnitDisk disk = load_disk(o.disk, o.resolution);
  const Polyline curve = parse_curve_csv(read_text(o.curve));
  const ChordReport r = check_increasing_chords(disk, curve, o.tol);
  emit(o, out, report_to_json(r).dump(2));
  return report_exit(r);
}

int cmd_check_wrt(const Options& o, std::ostream& out) {
  const UnitDisk disk = load_disk(o.disk, o.resolution);
  const Polyline curve = parse_curve_csv(read_text(o.curve));
  const std::vector<Vec2> anchors = load_anchors(o.anchors);
  const ChordReport r = check_increasing_wrt_set(disk, curve, anchors, o.tol);
  emit(o, out, report_to_json(r).dump(2));
  return report_exit(r);
}

int cmd_involute(const Options& o, std::ostream& out) {
  const UnitDisk norm = load_disk(o.disk, o.resolution);
  const ConvexBody base = load_base(o.base, o.resolution);
  const Vec2 p = o.start.empty() ? base.vertex(0) : parse_vec2(o.start);
  const std::size_t n = o.samples == 0 ? 1024 : o.samples;
  const InvoluteCurve curve = build_involute(norm, base, p, o.theta_min, o.theta_max, n);
  emit(o, out, involute_to_csv(curve));
  if (!o.svg.empty()) {
    SvgCanvas canvas;
    canvas.polygon(curve.base.vertices(), "#1f77b4", "#dbe9f6");
    canvas.polyline(curve.points.points, "#d62728");
    canvas.point(curve.p, "#000000");
    write_text(o.svg, canvas.render());
  }
  return kOk;
}

int cmd_lm(const Options& o, std::ostream& out) {
  const UnitDisk disk = load_disk(o.disk, o.resolution);
  out << fmt::format("{:.6f}\n", lm(disk, o.dir));
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const UnitDisk disk = load_disk(o.disk, o.resolution);
  const LmProfile profile = lm_sweep(disk, o.samples == 0 ? 360 : o.samples);
  if (!o.out.empty()) write_text(o.out, profile_to_csv(profile));
  out << profile_summary_json(profile) << '\n';
  return kOk;
}

int cmd_intersect(const Options& o, std::ostream& out) {
  const UnitDisk disk = load_disk(o.disk, o.resolution);
  const Vec2 p = parse_vec2(o.p);
  const Vec2 q = o.q.empty() ? p + disk.unit_vector(o.dir) : parse_vec2(o.q);
  const ConvexBody body = intersect_translates(disk, p, q);
  json j;
  j["vertices"] = points_json(body.vertices());
  j["perimeter"] = perimeter(disk, body);
  emit(o, out, j.dump(2));
  if (!o.svg.empty()) {
    SvgCanvas canvas;
    canvas.polygon(disk.body().translated(p).vertices(), "#7f7f7f");
    canvas.polygon(disk.body().translated(q).vertices(), "#7f7f7f");
    canvas.polygon(body.vertices(), "#2ca02c", "#d5f0d5");
    write_text(o.svg, canvas.render());
  }
  return kOk;
}

int cmd_hexagon(const Options& o, std::ostream& out) {
  const UnitDisk disk = load_disk(o.disk, o.resolution);
  const Hexagon hex = inscribed_hexagon(disk, disk.unit_vector(o.dir));
  json j;
  j["vertices"] = points_json(hex.vertices);
  j["unique"] = hex.unique;
  j["arcs"] = hexagon_arcs(disk, hex);
  emit(o, out, j.dump(2));
  return kOk;
}

int cmd_reuleaux(const Options& o, std::ostream& out) {
  const UnitDisk disk = load_disk(o.disk, o.resolution);
  const Hexagon hex = inscribed_hexagon(disk, disk.unit_vector(o.dir));
  const ReuleauxTriangle tri = reuleaux(disk, hex);
  json j;
  j["corners"] = points_json(std::array<Vec2, 3>{Vec2{}, hex.vertices[0], hex.vertices[1]});
  j["perimeter"] = tri.perimeter;
  j["vertices"] = points_json(tri.body.vertices());
  emit(o, out, j.dump(2));
  if (!o.svg.empty()) {
    SvgCanvas canvas;
    canvas.polygon(disk.vertices(), "#7f7f7f");
    canvas.polygon(hex.vertices, "#1f77b4");
    canvas.polygon(tri.body.vertices(), "#d62728", "#f6d5d5");
    write_text(o.svg, canvas.render());
  }
  return kOk;
}

int cmd_maxmin(const Options& o, std::ostream& out) {
  const MaxMinResult r = maxmin_search(o.k, o.budget, o.seed, o.sweep);
  emit(o, out, maxmin_to_json(r).dump(2));
  return kOk;
}

int cmd_hypercube(const Options& o, std::ostream& out) {
  const PolylineD curve = hypercube_curve(o.d);
  if (!o.out.empty()) write_text(o.out, curve_d_to_csv(curve));
  const double length = chebyshev_arclength(curve);
  if (!o.check) {
    out << fmt::format("length={}\n", length);
    return kOk;
  }
  const ChordReport r = check_increasing_chords_dd(curve, o.samples_per_edge, o.tol);
  out << fmt::format("length={} increasing_chords={}\n", length, r.holds ? "OK" : "FAIL");
  if (!r.holds) out << report_to_json(r).dump(2) << '\n';
  return report_exit(r);
}

int cmd_check_dd(const Options& o, std::ostream& out) {
  const PolylineD curve = parse_curve_d_csv(read_text(o.curve));
  const ChordReport r = check_increasing_chords_dd(curve, o.samples_per_edge, o.tol);
  emit(o, out, report_to_json(r).dump(2));
  return report_exit(r);
}

int cmd_convexify(const Options& o, std::ostream& out) {
  const Polyline curve = parse_curve_csv(read_text(o.curve));
  emit(o, out, curve_to_csv(convexify(curve)));
  return kOk;
}

int cmd_bisector(const Options& o, std::ostream& out) {
  const UnitDisk disk = load_disk(o.disk, o.resolution);
  const BisectorSample s =
      bisector_sample(disk, parse_vec2(o.a), parse_vec2(o.b), {o.y_min, o.y_max}, o.samples == 0 ? 21 : o.samples);
  emit(o, out, curve_to_csv(s.samples));
  return kOk;
}

int cmd_verify_all(const Options& o, std::ostream& out) {
  bool all = true;
  verify_all(o.seed, o.resolution, [&](const SuiteResult& r) {
    all = all && r.passed;
    out << fmt::format("{:<24} {} ({:.2f}s) {}\n", r.name, r.passed ? "PASS" : "FAIL", r.seconds, r.detail);
  });
  out << (all ? "verify-all: all suites passed\n" : "verify-all: FAILED\n");
  return all ? kOk : kViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curves with increasing chords in normed planes", "mchords"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--resolution", o.resolution, "Boundary samples for smooth disks")
      ->check(CLI::Range(std::size_t{16}, std::size_t{1} << 20));

  auto disk_opt = [&](CLI::App* c) { c->add_option("--disk", o.disk, "path | builtin:NAME | builtin:lp:P"); };
  auto tol_opt = [&](CLI::App* c) { c->add_option("--tol", o.tol, "Violation tolerance"); };
  auto out_opt = [&](CLI::App* c) { c->add_option("--out", o.out, "Output file"); };
  auto dir_opt = [&](CLI::App* c) { c->add_option("--dir", o.dir, "Direction in radians"); };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto add = [&](const std::string& name, const std::string& help, std::function<int()> fn) {
    CLI::App* c = app.add_subcommand(name, help);
    commands.emplace_back(c, std::move(fn));
    return c;
  };

  CLI::App* c = add("gauge", "Norm of a vector", [&] { return cmd_gauge(o, out); });
  disk_opt(c);
  c->add_option("--vec", o.vec, "x,y")->required();

  c = add("check", "Increasing chord property of a curve", [&] { return cmd_check(o, out); });
  disk_opt(c);
  c->add_option("--curve", o.curve, "CSV with header x,y")->required();
  tol_opt(c);
  out_opt(c);

  c = add("check-wrt", "Increasing chords with respect to a set of anchors", [&] { return cmd_check_wrt(o, out); });
  disk_opt(c);
  c->add_option("--curve", o.curve)->required();
  c->add_option("--anchors", o.anchors, "CSV with header x,y")->required();
  tol_opt(c);
  out_opt(c);

  c = add("involute", "Involute of a convex base", [&] { return cmd_involute(o, out); });
  disk_opt(c);
  c->add_option("--base", o.base, "CSV of CCW vertices or a disk spec")->required();
  c->add_option("--start", o.start, "Start point x,y (a base vertex)");
  c->add_option("--theta-min", o.theta_min);
  c->add_option("--theta-max", o.theta_max);
  c->add_option("-n,--samples", o.samples);
  out_opt(c);
  c->add_option("--svg", o.svg);

  c = add("lm", "Chord bound L_M for a direction", [&] { return cmd_lm(o, out); });
  disk_opt(c);
  dir_opt(c);

  c = add("sweep", "L_M over directions in [0, pi)", [&] { return cmd_sweep(o, out); });
  disk_opt(c);
  c->add_option("-n,--samples", o.samples);
  out_opt(c);

  c = add("intersect", "Intersection of two translates of M", [&] { return cmd_intersect(o, out); });
  disk_opt(c);
  c->add_option("--p", o.p);
  c->add_option("--q", o.q, "Defaults to p + unit_vector(dir)");
  dir_opt(c);
  out_opt(c);
  c->add_option("--svg", o.svg);

  c = add("hexagon", "Inscribed affinely regular hexagon", [&] { return cmd_hexagon(o, out); });
  disk_opt(c);
  dir_opt(c);
  out_opt(c);

  c = add("reuleaux", "Reuleaux triangle on a hexagon", [&] { return cmd_reuleaux(o, out); });
  disk_opt(c);
  dir_opt(c);
  out_opt(c);
  c->add_option("--svg", o.svg);

  c = add("maxmin", "Search for disks with large min-over-directions L_M", [&] { return cmd_maxmin(o, out); });
  c->add_option("-k", o.k)->check(CLI::PositiveNumber);
  c->add_option("--budget", o.budget);
  c->add_option("--seed", o.seed);
  c->add_option("--sweep", o.sweep)->check(CLI::PositiveNumber);
  out_opt(c);

  c = add("hypercube", "The hypercube curve in the max norm", [&] { return cmd_hypercube(o, out); });
  c->add_option("-d", o.d)->check(CLI::Range(1, 20));
  c->add_flag("--check", o.check);
  c->add_option("--samples-per-edge", o.samples_per_edge)->check(CLI::PositiveNumber);
  tol_opt(c);
  out_opt(c);

  c = add("check-dd", "Increasing chords of a curve in the max norm", [&] { return cmd_check_dd(o, out); });
  c->add_option("--curve", o.curve, "CSV with header x1,...,xd")->required();
  c->add_option("--samples-per-edge", o.samples_per_edge)->check(CLI::PositiveNumber);
  tol_opt(c);
  out_opt(c);

  c = add("convexify", "Rearrange the edges of an x-monotone curve", [&] { return cmd_convexify(o, out); });
  c->add_option("--curve", o.curve)->required();
  out_opt(c);

  c = add("bisector", "Sample the bisector of a segment", [&] { return cmd_bisector(o, out); });
  disk_opt(c);
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();
  c->add_option("--y-min", o.y_min);
  c->add_option("--y-max", o.y_max);
  c->add_option("-n,--samples", o.samples);
  out_opt(c);

  c = add("verify-all", "Run the invariant suites on the built-in disks", [&] { return cmd_verify_all(o, out); });
  c->add_option("--seed", o.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  for (auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      return fn();
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    } catch (const nlohmann::json::exception& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
  }
  err << "error: no command\n";
  return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace mchords
