#pragma once

// Independent reference implementations used only by the tests.

#include <vector>

#include "pipkit/exact.hpp"
#include "pipkit/polygon.hpp"

namespace oracle {

using pipkit::BigInt;
using pipkit::Rational;
using pipkit::RationalPolygon;
using pipkit::Vec2;

struct Counts {
    long total = 0;
    long boundary = 0;
};

// Orientation test against every CCW edge for every grid point of the bounding box.
inline Counts grid_count(const RationalPolygon& p, long t) {
    std::vector<Vec2> v;
    for (const auto& a : p.vertices()) v.push_back(Rational(t) * a);
    Rational xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
    for (const auto& a : v) {
        xmin = std::min(xmin, a.x);
        xmax = std::max(xmax, a.x);
        ymin = std::min(ymin, a.y);
        ymax = std::max(ymax, a.y);
    }
    Counts c;
    for (BigInt x = pipkit::rat_ceil(xmin); x <= pipkit::rat_floor(xmax); ++x) {
        for (BigInt y = pipkit::rat_ceil(ymin); y <= pipkit::rat_floor(ymax); ++y) {
            const Vec2 q{Rational(x), Rational(y)};
            bool inside = true, on_edge = false;
            for (std::size_t k = 0; k < v.size() && inside; ++k) {
                const Vec2& a = v[k];
                const Vec2& b = v[(k + 1) % v.size()];
                const int s = pipkit::det2(b - a, q - a).sign();
                if (s < 0) inside = false;
                if (s == 0) on_edge = true;
            }
            if (!inside) continue;
            ++c.total;
            if (on_edge) ++c.boundary;
        }
    }
    return c;
}

// F_0 = 0, F_1 = 1, by fast doubling.
inline BigInt fib(unsigned long n) {
    BigInt a = 0, b = 1;  // F_k, F_{k+1}
    for (int bit = 63; bit >= 0; --bit) {
        const BigInt c = a * (2 * b - a);
        const BigInt d = a * a + b * b;
        a = c;
        b = d;
        if ((n >> bit) & 1UL) {
            const BigInt e = a + b;
            a = b;
            b = e;
        }
    }
    return a;
}

inline Vec2 pt(long x, long y) { return {Rational(x), Rational(y)}; }
inline Vec2 pt(const Rational& x, const Rational& y) { return {x, y}; }
inline Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

}  // namespace oracle
