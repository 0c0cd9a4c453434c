#pragma once

// Generators for the explicit polygon families: the sixteen reflexive polygons,
// PIP triangles with one or two boundary points, the T_xyz triangles built from
// Vieta solutions, the Fibonacci triangles, integral polygons for every
// admissible (i, b), and the denominator-3/4/10 polygons P^d_{i,b}.

#include <string>
#include <vector>

#include "pipkit/exact.hpp"
#include "pipkit/polygon.hpp"
#include "pipkit/vieta.hpp"

namespace pipkit {

// Representatives of the 16 reflexive polygons, origin as the interior point.
std::vector<RationalPolygon> reflexive_catalog();

// conv{(i,0), (-2i/(2i+1), (2i-1)/(2i+1)), (-1/(2i+1), -(2i-1)/(2i+1))}: i interior, 1 boundary.
RationalPolygon example_pip_b1(const BigInt& i);

// conv{(i,0), (-1, ±i/(i+1))}: i interior, 2 boundary.
RationalPolygon example_pip_b2(const BigInt& i);

// The triangle <u_k, a> <= 1 with normals (y, (y+z)/x), (-x, -1), (0, -1).
// Throws NotConstructible unless x | y and x | z.
RationalPolygon t_xyz(const VietaSolution& s);

// F_j with F_1 = F_2 = 1.
BigInt fibonacci(std::size_t j);

// conv{(-3F_{2j-1}/F_{2j+1}, 3F_{2j-1}/F_{2j+1} - 1), (0,-1), (3F_{2j+1}/F_{2j-1}, -1)}.
RationalPolygon fibonacci_triangle(std::size_t j);

// Whether some integral polygon has i interior and b boundary points:
// i = 1 and 3 <= b <= 9, or i >= 2 and 3 <= b <= 2i + 6.
bool scott_admissible(const BigInt& i, const BigInt& b);

// An integral polygon with exactly i interior and b boundary lattice points:
//   b = 3                   conv{(-1,0), (0,1), (-2i,2)}
//   4 <= b <= 2i + 5        conv{(0,-1), (i+1,0), (b-4,1), (0,1)}
//   b = 2i + 6              the rectangle [0, i+1] x [-1, 1]
//   (i, b) = (1, 9)         conv{(-1,-1), (2,-1), (-1,2)}
// Throws OutOfRange for inadmissible (i, b).
RationalPolygon scott_grid_polygon(const BigInt& i, const BigInt& b);

// Human-readable inequality that (d, i, b) must satisfy, e.g. "2 <= b <= 5i + 4".
std::string construct_pip_range(int d);

// P^d_{i,b} for d in {3, 4, 10}: the hull of the defining point list. Throws
// OutOfRange naming the violated inequality when (d, i, b) is out of range.
RationalPolygon construct_pip(int d, const BigInt& i, const BigInt& b);

}  // namespace pipkit
