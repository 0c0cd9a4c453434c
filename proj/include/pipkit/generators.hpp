#pragma once

// Small random instance generators for the property suites.

#include <cstdint>
#include <random>

#include "pipkit/exact.hpp"
#include "pipkit/polygon.hpp"

namespace pipkit::gen {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

// Coordinates p/q with q in {1, 2, 3, 4, 6} and |p/q| <= reach.
Rational small_rational(Rng& rng, std::int64_t reach = 3);

// Hull of 3..max_points random rational points; retries on flat samples.
RationalPolygon rational_polygon(Rng& rng, std::size_t max_points = 7, std::int64_t reach = 3);
RationalPolygon rational_triangle(Rng& rng, std::int64_t reach = 3);
RationalPolygon integral_polygon(Rng& rng, std::size_t max_points = 7, std::int64_t reach = 3);

// Product of random shears, swaps and reflections: determinant ±1.
IntMat2 unimodular_matrix(Rng& rng, int steps = 4);
AffineMap unimodular_map(Rng& rng, std::int64_t reach = 3);

}  // namespace pipkit::gen
