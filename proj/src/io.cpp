#include "mchords/io.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <numbers>
#include <sstream>

#include "mchords/errors.hpp"

namespace mchords {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

double parse_double(const std::string& field, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError(fmt::format("line {}: '{}' is not a number", line, field));
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// Rows of numbers below a header; returns the header cells too.
std::vector<std::vector<double>> parse_numeric_csv(const std::string& text, std::vector<std::string>& header) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells = split(line, ',');
    for (auto& c : cells) c = trim(c);
    if (header.empty()) {
      header = cells;
      continue;
    }
    if (cells.size() != header.size()) {
      throw ArgumentError(fmt::format("line {}: expected {} columns, got {}", line_no, header.size(), cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(parse_double(c, line_no));
    rows.push_back(std::move(row));
  }
  if (header.empty()) throw ArgumentError("CSV is empty");
  return rows;
}

std::vector<double> numbers(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw RepresentationError(fmt::format("disk spec needs array '{}'", key));
  std::vector<double> out;
  for (const json& v : j.at(key)) {
    if (!v.is_number()) throw RepresentationError(fmt::format("'{}' must contain numbers", key));
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

UnitDisk disk_from_json(const json& spec, std::size_t resolution) {
  if (!spec.is_object() || !spec.contains("kind") || !spec.at("kind").is_string()) {
    throw RepresentationError("disk spec must be an object with a string 'kind'");
  }
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "polygon") {
    if (!spec.contains("vertices") || !spec.at("vertices").is_array()) {
      throw RepresentationError("polygon disk needs 'vertices'");
    }
    std::vector<Vec2> verts;
    for (const json& v : spec.at("vertices")) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw RepresentationError(fmt::format("vertex {} must be [x, y]", verts.size()));
      }
      verts.push_back({v[0].get<double>(), v[1].get<double>()});
    }
    return UnitDisk::polygon(std::move(verts));
  }
  if (kind == "radial") {
    std::vector<double> angles = numbers(spec, "angles_deg");
    for (double& a : angles) a *= kPi / 180.0;
    return UnitDisk::radial(std::move(angles), numbers(spec, "radii"));
  }
  if (kind == "builtin") {
    if (!spec.contains("name") || !spec.at("name").is_string()) throw RepresentationError("builtin disk needs 'name'");
    const std::string name = spec.at("name").get<std::string>();
    if (name == "euclidean") return UnitDisk::euclidean(resolution);
    if (name == "square") return UnitDisk::square();
    if (name == "hexagon") return UnitDisk::regular_hexagon();
    if (name == "lp") {
      if (!spec.contains("p") || !spec.at("p").is_number()) throw RepresentationError("lp disk needs numeric 'p'");
      return UnitDisk::lp(spec.at("p").get<double>(), resolution);
    }
    throw RepresentationError(fmt::format("unknown builtin disk '{}'", name));
  }
  throw RepresentationError(fmt::format("unknown disk kind '{}'", kind));
}

json disk_to_json(const UnitDisk& disk) {
  if (disk.kind() == DiskKind::builtin && !disk.flags().polygonal) {
    if (disk.builtin_norm() == BuiltinNorm::euclidean) return {{"kind", "builtin"}, {"name", "euclidean"}};
    return {{"kind", "builtin"}, {"name", "lp"}, {"p", disk.lp_exponent()}};
  }
  if (disk.kind() == DiskKind::radial) {
    json angles = json::array();
    for (double a : disk.radial_angles()) angles.push_back(a * 180.0 / kPi);
    return {{"kind", "radial"}, {"angles_deg", angles}, {"radii", disk.radial_radii()}};
  }
  json verts = json::array();
  for (const Vec2& v : disk.vertices()) verts.push_back({v.x, v.y});
  return {{"kind", "polygon"}, {"vertices", verts}};
}

UnitDisk load_disk(const std::string& spec, std::size_t resolution) {
  constexpr std::string_view prefix = "builtin:";
  if (spec.starts_with(prefix)) {
    const std::string name = spec.substr(prefix.size());
    if (name == "euclidean") return UnitDisk::euclidean(resolution);
    if (name == "square") return UnitDisk::square();
    if (name == "hexagon") return UnitDisk::regular_hexagon();
    if (name.starts_with("lp:")) {
      const std::string p = name.substr(3);
      if (p == "inf") return UnitDisk::lp(INFINITY, resolution);
      return UnitDisk::lp(parse_double(p, 0), resolution);
    }
    throw ArgumentError(fmt::format("unknown builtin disk '{}'", name));
  }
  json j;
  try {
    j = json::parse(read_text(spec));
  } catch (const json::parse_error& e) {
    throw RepresentationError(fmt::format("{}: malformed JSON ({})", spec, e.what()));
  }
  return disk_from_json(j, resolution);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError(fmt::format("cannot read {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError(fmt::format("cannot write {}", path.string()));
  out << text;
}

Polyline parse_curve_csv(const std::string& text) {
  std::vector<std::string> header;
  const auto rows = parse_numeric_csv(text, header);
  if (header != std::vector<std::string>{"x", "y"}) throw ArgumentError("curve CSV header must be x,y");
  Polyline curve;
  for (const auto& r : rows) curve.points.push_back({r[0], r[1]});
  return curve;
}

std::string curve_to_csv(const Polyline& curve) {
  std::string out = "x,y\n";
  for (const Vec2& p : curve.points) out += fmt::format("{:.17g},{:.17g}\n", p.x, p.y);
  return out;
}

PolylineD parse_curve_d_csv(const std::string& text) {
  std::vector<std::string> header;
  const auto rows = parse_numeric_csv(text, header);
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j] != fmt::format("x{}", j + 1)) throw ArgumentError("curve CSV header must be x1,...,xd");
  }
  return {header.size(), rows};
}

std::string curve_d_to_csv(const PolylineD& curve) {
  std::string out;
  for (std::size_t j = 0; j < curve.dim; ++j) out += fmt::format("{}x{}", j ? "," : "", j + 1);
  out += '\n';
  for (const auto& p : curve.points) {
    for (std::size_t j = 0; j < p.size(); ++j) out += fmt::format("{}{:.17g}", j ? "," : "", p[j]);
    out += '\n';
  }
  return out;
}

json report_to_json(const ChordReport& report) {
  json witnesses = json::array();
  for (const ChordWitness& w : report.witnesses) {
    witnesses.push_back({{"indices", w.indices}, {"deficit", w.deficit}});
  }
  return {{"holds", report.holds},
          {"max_deficit", report.max_deficit},
          {"mode", report.mode == CheckMode::exact_polygonal ? "exact_polygonal" : "tolerance"},
          {"tol", report.tol},
          {"witnesses", witnesses}};
}

std::string profile_to_csv(const LmProfile& profile) {
  std::string out = "direction_rad,lm_value\n";
  for (std::size_t i = 0; i < profile.directions.size(); ++i) {
    out += fmt::format("{:.17g},{:.17g}\n", profile.directions[i], profile.values[i]);
  }
  return out;
}

std::string profile_summary_json(const LmProfile& profile) {
  return fmt::format("{{\"min\": {:.6f}, \"argmin\": {:.6f}, \"max\": {:.6f}, \"argmax\": {:.6f}}}", profile.min,
                     profile.argmin, profile.max, profile.argmax);
}

std::string involute_to_csv(const InvoluteCurve& curve) {
  std::string out = "theta,x,y\n";
  for (std::size_t i = 0; i < curve.thetas.size(); ++i) {
    const Vec2 p = curve.points.points[i];
    out += fmt::format("{:.17g},{:.17g},{:.17g}\n", curve.thetas[i], p.x, p.y);
  }
  return out;
}

json maxmin_to_json(const MaxMinResult& result) {
  return {{"radii", result.params.radii},
          {"angles", result.angles},
          {"objective", result.objective},
          {"evaluations", result.evaluations}};
}

Vec2 parse_vec2(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ArgumentError(fmt::format("expected 'x,y', got '{}'", text));
  return {parse_double(trim(parts[0]), 0), parse_double(trim(parts[1]), 0)};
}

}  // namespace mchords
