#pragma once

// Seeded random instances shared by the self-check suites: disks, convex
// bodies and curves.

#include <cstddef>
#include <random>

#include "mchords/curvekit.hpp"
#include "mchords/normplane.hpp"

namespace mchords {

using Rng = std::mt19937_64;

// Symmetric polygons with 4 to 16 vertices, or affine images of lp balls
// (sampled at `resolution` points, stored as radial disks).
UnitDisk random_disk(Rng& rng, std::size_t resolution = 512);

// Exact polygons (hulls of random points) or dense ellipses.
ConvexBody random_convex_body(Rng& rng, bool exact_polygon);

// Strictly x-monotone polyline from (0, 0) with `edges` edges whose slopes
// are bounded by max_slope in absolute value.
Polyline random_x_monotone_curve(Rng& rng, std::size_t edges, double max_slope);

// Two sides of the Reuleaux triangle with vertices 0, u, w, where u is the
// unit vector in `direction` and w the next vertex of the inscribed hexagon:
// the boundary path u -> w -> 0. Its endpoints are at distance 1.
Polyline reuleaux_two_sides(const UnitDisk& disk, double direction);

// Random rotation composed with a random anisotropic scaling.
Mat2 random_linear_map(Rng& rng, double min_stretch);

}  // namespace mchords
