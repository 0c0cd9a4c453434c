#include "pipkit/counting.hpp"

#include <algorithm>

#include "pipkit/errors.hpp"
#include "pipkit/kernels.hpp"

namespace pipkit {

namespace {

void require_positive(const BigInt& t) {
    if (t < 1) throw OutOfRange("dilation factor t must be >= 1, got " + t.get_str());
}

// sum_{x = first}^{last} floor((n - m a x) / (m |b|)).
BigInt edge_column_sum(const BigInt& n, const BigInt& m, const BigInt& a, const BigInt& b,
                       const BigInt& first, const BigInt& last) {
    if (last < first) return 0;
    const BigInt count = last - first + 1;
    const BigInt start = n - m * a * first;
    const BigInt step = -(m * a);
    const BigInt den = m * abs(b);
    if (kernels::fits_int64(start, step, den, count)) {
        return BigInt(static_cast<long>(kernels::floor_sum(
            start.get_si(), step.get_si(), den.get_si(), count.get_si())));
    }
    return kernels::floor_sum_big(start, step, den, count);
}

// Lattice points on the closed piece of the line <normal, x> = c running from
// `from` to `to`, where perp(normal) points from `from` towards `to`.
BigInt lattice_points_on_line(const Vec2& normal, const Rational& c, const Vec2& from,
                              const Vec2& to) {
    if (!c.is_integer()) return 0;
    const BigInt a = normal.x.num();
    const BigInt b = normal.y.num();
    BigInt g, s, r;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // Primitive normal, so g == 1 and (c s, c r) lies on the line.
    const Vec2 base{Rational(BigInt(c.num() * s)), Rational(BigInt(c.num() * r))};
    const Vec2 dir = perp(normal);
    const Rational norm2 = dot(dir, dir);
    const Rational k_from = dot(from - base, dir) / norm2;
    const Rational k_to = dot(to - base, dir) / norm2;
    const BigInt hi = rat_floor(k_to);
    const BigInt lo = rat_ceil(k_from);
    return hi >= lo ? BigInt(hi - lo + 1) : BigInt(0);
}

}  // namespace

BigInt dilated_width(const RationalPolygon& p, const BigInt& t) {
    require_positive(t);
    const auto [lo, hi] = std::minmax_element(
        p.vertices().begin(), p.vertices().end(),
        [](const Vec2& u, const Vec2& v) { return u.x < v.x; });
    const Rational rt(t);
    const BigInt w = rat_floor(rt * hi->x) - rat_ceil(rt * lo->x) + 1;
    return w > 0 ? w : BigInt(0);
}

BigInt count_total(const RationalPolygon& p, const BigInt& t) {
    require_positive(t);
    const Rational rt(t);
    Rational x_max = p.vertices().front().x;
    Rational x_min = x_max;
    for (const auto& v : p.vertices()) {
        x_max = std::max(x_max, v.x);
        x_min = std::min(x_min, v.x);
    }
    x_max = rt * x_max;
    x_min = rt * x_min;
    const BigInt col_lo = rat_ceil(x_min);
    const BigInt col_hi = rat_floor(x_max);
    if (col_hi < col_lo) return 0;

    BigInt total = col_hi - col_lo + 1;
    for (const auto& e : p.edges()) {
        const BigInt a = e.normal.x.num();
        const BigInt b = e.normal.y.num();
        if (b == 0) continue;  // vertical edges bound no column from above or below
        const Rational c = rt * e.offset;
        Rational xs = rt * e.start.x;
        Rational xe = rt * e.end.x;
        if (xe < xs) std::swap(xs, xe);
        // Half-open [xs, xe) per edge so each column belongs to one edge of each
        // chain; the rightmost edge of a chain also takes x_max.
        const BigInt first = rat_ceil(xs);
        const BigInt last = (xe == x_max) ? rat_floor(xe) : BigInt(rat_ceil(xe) - 1);
        total += edge_column_sum(c.num(), c.den(), a, b, first, last);
    }
    return total;
}

BigInt count_boundary(const RationalPolygon& p, const BigInt& t) {
    require_positive(t);
    const Rational rt(t);
    BigInt on_edges = 0;
    for (const auto& e : p.edges()) {
        on_edges += lattice_points_on_line(e.normal, rt * e.offset, rt * e.start, rt * e.end);
    }
    BigInt lattice_vertices = 0;
    for (const auto& v : p.vertices()) {
        if ((rt * v).is_integral()) ++lattice_vertices;
    }
    return on_edges - lattice_vertices;
}

BigInt count_interior(const RationalPolygon& p, const BigInt& t) {
    return count_total(p, t) - count_boundary(p, t);
}

CountReport count_report(const RationalPolygon& p, const BigInt& t) {
    CountReport r;
    r.t = t;
    r.total = count_total(p, t);
    r.boundary = count_boundary(p, t);
    r.interior = r.total - r.boundary;
    return r;
}

BigInt segment_lattice_points(const Vec2& a, const Vec2& b) {
    if (a == b) throw Error("segment_lattice_points: endpoints coincide");
    const Vec2 d = primitive_direction(b - a);
    const Vec2 normal{d.y, -d.x};
    return lattice_points_on_line(normal, dot(normal, a), a, b);
}

}  // namespace pipkit
