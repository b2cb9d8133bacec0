#pragma once

// Minimal SVG output: shapes in plane coordinates, scaled into a fixed
// 1000x1000 viewBox around their common bounding box (y axis pointing up).

#include <span>
#include <string>
#include <vector>

#include "mchords/geometry.hpp"

namespace mchords {

class SvgCanvas {
 public:
  void polygon(std::span<const Vec2> pts, const std::string& stroke, const std::string& fill = "none");
  void polyline(std::span<const Vec2> pts, const std::string& stroke);
  void point(Vec2 p, const std::string& fill);

  std::string render() const;

 private:
  struct Shape {
    enum class Kind { polygon, polyline, point } kind;
    std::vector<Vec2> pts;
    std::string stroke;
    std::string fill;
  };
  std::vector<Shape> shapes_;
};

}  // namespace mchords
