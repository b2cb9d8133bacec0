#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mchords/errors.hpp"
#include "mchords/highdim.hpp"
#include "oracles.hpp"

using namespace mchords;
using doctest::Approx;

TEST_CASE("vertices follow the reflected Gray code") {
  for (std::size_t d = 1; d <= 10; ++d) {
    const PolylineD curve = hypercube_curve(d);
    REQUIRE(curve.dim == d);
    REQUIRE(curve.points.size() == (std::size_t{1} << d));
    for (std::size_t k = 0; k < curve.points.size(); ++k) CHECK(curve.points[k] == oracle::gray_vertex(k, d));
  }
}

TEST_CASE("length and Hamiltonicity") {
  for (std::size_t d = 1; d <= 14; ++d) {
    const PolylineD curve = hypercube_curve(d);
    CHECK(chebyshev_arclength(curve) == Approx(std::ldexp(1.0, static_cast<int>(d)) - 1.0).epsilon(1e-15));
    CHECK(is_hamiltonian_path(curve));
  }
  PolylineD short_path = hypercube_curve(3);
  short_path.points.pop_back();
  CHECK_FALSE(is_hamiltonian_path(short_path));
}

TEST_CASE("increasing chords of the hypercube curves") {
  for (std::size_t d = 1; d <= 6; ++d) {
    CAPTURE(d);
    const ChordReport report = check_increasing_chords_dd(hypercube_curve(d), d <= 4 ? 8 : 3);
    CHECK(report.holds);
    CHECK(report.max_deficit <= 1e-12);
  }
  for (std::size_t d = 1; d <= 8; ++d) CHECK(hypercube_step_violation(d) == 0.0);
}

TEST_CASE("small examples") {
  CHECK(check_increasing_chords_dd({1, {{0.0}, {0.7}}}).holds);
  CHECK(check_increasing_chords_dd({2, {{0.0, 0.0}, {1.0, 1.0}}}).holds);
  CHECK(chebyshev_distance({0.0, 0.0, 0.0}, {0.5, -2.0, 1.0}) == 2.0);

  const ChordReport back = check_increasing_chords_dd({2, {{0.0, 0.0}, {1.0, 0.0}, {0.2, 0.1}}});
  CHECK_FALSE(back.holds);
  REQUIRE_FALSE(back.witnesses.empty());
  CHECK(back.max_deficit > 0.5);
}

TEST_CASE("a perturbed vertex breaks the property") {
  PolylineD curve = hypercube_curve(3);
  curve.points[2][1] = 1.3;
  CHECK_FALSE(check_increasing_chords_dd(curve).holds);
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(hypercube_curve(0), ArgumentError);
  CHECK_THROWS_AS(hypercube_curve(21), ArgumentError);
  CHECK_THROWS_AS(validate(PolylineD{2, {{0.0, 0.0}}}), ArgumentError);
  CHECK_THROWS_AS(validate(PolylineD{2, {{0.0, 0.0}, {1.0}}}), ArgumentError);
  CHECK_THROWS_AS(validate(PolylineD{2, {{0.0, 0.0}, {0.0, 0.0}}}), ArgumentError);
  CHECK_THROWS_AS(chebyshev_distance({0.0}, {0.0, 1.0}), ArgumentError);
}
