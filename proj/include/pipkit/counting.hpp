#pragma once

#include "pipkit/exact.hpp"
#include "pipkit/polygon.hpp"

namespace pipkit {

struct CountReport {
    BigInt t;
    BigInt total;
    BigInt boundary;
    BigInt interior;
};

// |tP ∩ Z²| by a column scan over the integer x-range of tP.
BigInt count_total(const RationalPolygon& p, const BigInt& t);

// Lattice points on the boundary of tP.
BigInt count_boundary(const RationalPolygon& p, const BigInt& t);

BigInt count_interior(const RationalPolygon& p, const BigInt& t);

CountReport count_report(const RationalPolygon& p, const BigInt& t);

// Lattice points on the closed segment [a, b], a != b.
BigInt segment_lattice_points(const Vec2& a, const Vec2& b);

// Number of integer columns spanned by tP, i.e. floor(t x_max) - ceil(t x_min) + 1.
BigInt dilated_width(const RationalPolygon& p, const BigInt& t);

}  // namespace pipkit
