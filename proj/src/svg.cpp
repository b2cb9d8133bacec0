#include "mchords/svg.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <limits>

namespace mchords {

void SvgCanvas::polygon(std::span<const Vec2> pts, const std::string& stroke, const std::string& fill) {
  shapes_.push_back({Shape::Kind::polygon, {pts.begin(), pts.end()}, stroke, fill});
}

void SvgCanvas::polyline(std::span<const Vec2> pts, const std::string& stroke) {
  shapes_.push_back({Shape::Kind::polyline, {pts.begin(), pts.end()}, stroke, "none"});
}

void SvgCanvas::point(Vec2 p, const std::string& fill) { shapes_.push_back({Shape::Kind::point, {p}, "none", fill}); }

std::string SvgCanvas::render() const {
  constexpr double kSize = 1000.0;
  constexpr double kMargin = 40.0;
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const Shape& s : shapes_) {
    for (const Vec2& p : s.pts) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  }
  if (shapes_.empty()) lo_x = lo_y = -1.0, hi_x = hi_y = 1.0;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double scale = (kSize - 2.0 * kMargin) / span;
  const double cx = 0.5 * (lo_x + hi_x);
  const double cy = 0.5 * (lo_y + hi_y);
  auto map = [&](Vec2 p) {
    return fmt::format("{:.3f},{:.3f}", kSize / 2 + (p.x - cx) * scale, kSize / 2 - (p.y - cy) * scale);
  };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {0} {0}\" width=\"{0}\" height=\"{0}\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kSize);
  for (const Shape& s : shapes_) {
    if (s.kind == Shape::Kind::point) {
      const std::string xy = map(s.pts.front());
      const auto comma = xy.find(',');
      out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{}\"/>\n", xy.substr(0, comma), xy.substr(comma + 1),
                         s.fill);
      continue;
    }
    std::string pts;
    for (const Vec2& p : s.pts) {
      if (!pts.empty()) pts += ' ';
      pts += map(p);
    }
    out += fmt::format("<{} points=\"{}\" stroke=\"{}\" fill=\"{}\" stroke-width=\"1.5\"/>\n",
                       s.kind == Shape::Kind::polygon ? "polygon" : "polyline", pts, s.stroke, s.fill);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace mchords
