#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "mchords/cli.hpp"
#include "mchords/errors.hpp"
#include "mchords/io.hpp"

using namespace mchords;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mchords_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("lm and gauge print fixed formats") {
  const Result r = run_cli({"lm", "--disk", "builtin:euclidean", "--dir", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "2.094395\n");
  CHECK(run_cli({"lm", "--disk", "builtin:square", "--dir", "0.7853981633974483"}).out == "2.000000\n");
  CHECK(run_cli({"gauge", "--disk", "builtin:square", "--vec", "3,1"}).out == "3\n");
}

TEST_CASE("sweep prints a JSON summary and writes the profile") {
  const fs::path csv = scratch("sweep.csv");
  const Result r = run_cli({"sweep", "--disk", "builtin:hexagon", "-n", "90", "--out", csv.string()});
  CHECK(r.code == 0);
  const json summary = json::parse(r.out);
  CHECK(summary.at("min").get<double>() == doctest::Approx(2.0));
  CHECK(summary.at("max").get<double>() == doctest::Approx(2.0));
  const std::string text = read_text(csv);
  CHECK(text.rfind("direction_rad,lm_value\n", 0) == 0);
}

TEST_CASE("hypercube check") {
  const Result r = run_cli({"hypercube", "-d", "3", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out == "length=7 increasing_chords=OK\n");
}

TEST_CASE("check exit codes") {
  const fs::path good = scratch("good.csv");
  const fs::path bad = scratch("bad.csv");
  write_text(good, "x,y\n0,0\n1,0.2\n2,0\n");
  write_text(bad, "x,y\n0,0\n1,0\n0.5,0.1\n");
  const Result ok = run_cli({"check", "--disk", "builtin:square", "--curve", good.string()});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out).at("holds").get<bool>());
  const Result violated = run_cli({"check", "--disk", "builtin:euclidean", "--curve", bad.string()});
  CHECK(violated.code == 1);
  const json report = json::parse(violated.out);
  CHECK_FALSE(report.at("holds").get<bool>());
  CHECK_FALSE(report.at("witnesses").empty());
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"lm", "--disk", "builtin:nothing"}).code == 2);
  CHECK(run_cli({"gauge", "--disk", "builtin:square", "--vec", "3"}).code == 2);
  CHECK(run_cli({"hypercube", "-d", "0"}).code == 2);
  CHECK(run_cli({"check", "--disk", "builtin:square", "--curve", scratch("missing.csv").string()}).code == 2);
  const fs::path broken = scratch("broken.json");
  write_text(broken, "{\"kind\": \"polygon\", \"vertices\": [[1, 0], [0, 1]]}");
  const Result r = run_cli({"lm", "--disk", broken.string()});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("involute, hexagon and reuleaux outputs") {
  const Result inv = run_cli({"involute", "--disk", "builtin:euclidean", "--base", "builtin:square", "-n", "16"});
  CHECK(inv.code == 0);
  CHECK(inv.out.rfind("theta,x,y\n", 0) == 0);
  const Result hex = run_cli({"hexagon", "--disk", "builtin:hexagon"});
  CHECK(json::parse(hex.out).at("vertices").size() == 6);
  const Result tri = run_cli({"reuleaux", "--disk", "builtin:square"});
  CHECK(json::parse(tri.out).at("perimeter").get<double>() == doctest::Approx(4.0));
}

TEST_CASE("disk JSON round trip") {
  for (const UnitDisk& disk : {UnitDisk::square(), UnitDisk::regular_hexagon(), UnitDisk::lp(4.0, 256)}) {
    const UnitDisk back = disk_from_json(disk_to_json(disk), disk.resolution());
    for (int i = 0; i < 16; ++i) {
      const Vec2 v = direction(0.4 * i) * 1.7;
      CHECK(back.gauge(v) == doctest::Approx(disk.gauge(v)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(disk_from_json(json::parse("{\"kind\": \"blob\"}")), RepresentationError);
  CHECK_THROWS_AS(disk_from_json(json::parse("[1, 2]")), RepresentationError);
}

TEST_CASE("curve CSV parsing") {
  const Polyline c = parse_curve_csv("x,y\n0,0\n1.5,-2\n");
  REQUIRE(c.points.size() == 2);
  CHECK(c.points[1] == Vec2{1.5, -2.0});
  const Polyline again = parse_curve_csv(curve_to_csv(c));
  CHECK(again.points == c.points);
  CHECK_THROWS_AS(parse_curve_csv("a,b\n0,0\n1,1\n"), ArgumentError);
  CHECK_THROWS_AS(parse_curve_csv("x,y\n0,0\n1,zz\n"), ArgumentError);

  const PolylineD d = parse_curve_d_csv(curve_d_to_csv(hypercube_curve(3)));
  CHECK(d.points == hypercube_curve(3).points);

  CHECK(parse_vec2("0.5,-1") == Vec2{0.5, -1.0});
  CHECK_THROWS_AS(parse_vec2("0.5"), ArgumentError);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"maxmin", "-k", "4", "--budget", "20", "--seed", "3", "--sweep", "60"};
  CHECK(run_cli(args).out == run_cli(args).out);
}
