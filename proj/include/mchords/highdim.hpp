#pragma once

// The recursive curve Gamma_d through the vertices of [0,1]^d in the
// Chebyshev (max) norm, and brute-force checks of its increasing chords.

#include <cstddef>
#include <optional>
#include <vector>

#include "mchords/curvekit.hpp"

namespace mchords {

struct PolylineD {
  std::size_t dim = 0;
  std::vector<std::vector<double>> points;
};

void validate(const PolylineD& curve);

// Gamma_1 = [0, 1]; Gamma_{d+1} runs through Gamma_d x {0}, crosses the unit
// edge at its terminal vertex and returns through Gamma_d x {1} reversed
// (the reflected Gray code). 1 <= d <= 20.
PolylineD hypercube_curve(std::size_t d);

double chebyshev_distance(const std::vector<double>& a, const std::vector<double>& b);
double chebyshev_arclength(const PolylineD& curve);

// Increasing chord check in the max norm over the vertices plus
// samples_per_edge interior points per edge, with the one-sided derivative
// test at every sample. Witness indices refer to the refined sample list.
ChordReport check_increasing_chords_dd(const PolylineD& curve, std::size_t samples_per_edge = 8,
                                       std::optional<double> tol = std::nullopt);

// True when the curve visits every vertex of {0,1}^dim exactly once.
bool is_hamiltonian_path(const PolylineD& curve);

// The two facts the doubling step relies on, for Gamma_d and its copy:
// every point of the lower copy is at Chebyshev distance exactly 1 from
// every point of the upper copy (sampled), and along the bridge the distance
// to any sampled point of either copy is monotone. Returns the worst
// violation (0 when both hold exactly).
double hypercube_step_violation(std::size_t d, std::size_t samples_per_edge = 4);

}  // namespace mchords
